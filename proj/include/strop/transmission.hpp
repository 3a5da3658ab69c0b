#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strop/supertropical.hpp"

namespace strop {

// Multiplicative map between supertropical carriers with α(0)=0, α(1)=1,
// α(e)=e, restricting to a homomorphism of ghost ideals.
struct FiniteTransmission {
  FiniteSupertropical source;
  FiniteSupertropical target;
  std::vector<Index> map;
};

// Five conditions: zero, one, multiplicative, e to e, ghost part a
// homomorphism (which includes ghosts landing on ghosts).
ValidationReport validate_transmission(const FiniteTransmission& a);
// Pair (x, y) with α(x+y) != α(x)+α(y), if any.
std::optional<std::array<Index, 2>> additivity_violation(const FiniteTransmission& a);
inline bool is_homomorphism(const FiniteTransmission& a) { return !additivity_violation(a); }

// α restricted to ghosts, as a map of ghost_bipotent() carriers.
// Throws NotHomomorphism if a ghost lands on a tangible.
FiniteGhostHom ghost_part(const FiniteTransmission& a);
FiniteTransmission identity_transmission(const FiniteSupertropical& u);
FiniteTransmission compose(const FiniteTransmission& second, const FiniteTransmission& first);
bool is_surjective(const FiniteTransmission& a);
bool is_bijective(const FiniteTransmission& a);
// E(α): x ~ y iff α(x) = α(y).
Partition kernel(const FiniteTransmission& a);
// ν_U as a map U -> eU, with eU read as a supertropical carrier of ghosts.
FiniteTransmission ghost_map(const FiniteSupertropical& u);

// Sampled transmission check for exact carriers.
template <Supertropical U, Supertropical V>
ValidationReport validate_transmission_sampled(
    const U& u, const V& v, const std::function<typename V::value_type(const typename U::value_type&)>& alpha,
    const std::function<typename U::value_type(Rng&)>& sample, const SampleConfig& cfg = {}) {
  ValidationReport rep;
  rep.subject = "transmission";
  rep.exhaustive = false;
  rep.seed = cfg.seed;
  auto fu = [&](const typename U::value_type& x) { return u.format(x); };
  std::optional<Witness> zero_w, one_w, e_w, mul_w, ghost_w, ord_w, gmul_w;
  if (!v.equal(alpha(u.zero()), v.zero())) zero_w = Witness{fu(u.zero())};
  if (!v.equal(alpha(u.one()), v.one())) one_w = Witness{fu(u.one())};
  if (!v.equal(alpha(u.e()), v.e())) e_w = Witness{fu(u.e())};
  Rng rng(cfg.seed);
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    auto x = sample(rng), y = sample(rng);
    if (!mul_w && !v.equal(alpha(u.mul(x, y)), v.mul(alpha(x), alpha(y)))) mul_w = Witness{fu(x), fu(y)};
    auto ex = u.companion(x), ey = u.companion(y);
    auto ax = alpha(ex), ay = alpha(ey);
    if (!ghost_w && !v.is_ghost(ax)) ghost_w = Witness{fu(ex)};
    if (!ord_w && u.compare_ghosts(ex, ey) <= 0 && v.compare_ghosts(ax, ay) > 0) ord_w = Witness{fu(ex), fu(ey)};
    if (!gmul_w && !v.equal(v.companion(alpha(x)), ax)) gmul_w = Witness{fu(x)};
  }
  rep.record("zero", 1, zero_w);
  rep.record("one", 1, one_w);
  rep.record("multiplicative", cfg.samples, mul_w);
  rep.record("e to e", 1, e_w);
  rep.record("ghosts to ghosts", cfg.samples, ghost_w);
  rep.record("ghost part order preserving", cfg.samples, ord_w);
  rep.record("commutes with ghost maps", cfg.samples, gmul_w);
  return rep;
}

// First sampled pair violating additivity, formatted.
template <Supertropical U, Supertropical V>
std::optional<Witness> additivity_violation_sampled(
    const U& u, const V& v, const std::function<typename V::value_type(const typename U::value_type&)>& alpha,
    const std::vector<std::pair<typename U::value_type, typename U::value_type>>& pairs) {
  for (const auto& [x, y] : pairs)
    if (!v.equal(alpha(st_add(u, x, y)), st_add(v, alpha(x), alpha(y)))) return Witness{u.format(x), u.format(y)};
  return std::nullopt;
}

}  // namespace strop
