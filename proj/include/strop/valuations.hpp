#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strop/quotient.hpp"
#include "strop/ratfunc.hpp"

namespace strop {

// ---- finite rings ----

struct FiniteRing {
  std::vector<std::string> names;
  std::vector<Index> add;  // row-major
  std::vector<Index> mul;
  Index zero = 0;
  Index one = 0;
  std::size_t size() const { return names.size(); }
  Index sum(Index a, Index b) const { return add[a * size() + b]; }
  Index prod(Index a, Index b) const { return mul[a * size() + b]; }
  Index index_of(const std::string& name) const;
  static FiniteRing zmod(std::size_t n);
  bool operator==(const FiniteRing&) const = default;
};

ValidationReport validate_ring(const FiniteRing& r);

// ---- m-valuations and supervaluations on finite rings ----

struct FiniteMValuation {
  FiniteRing ring;
  FiniteBipotent target;
  std::vector<Index> map;
};

// v(0) = 0, v(1) = 1, multiplicative, v(a+b) ≤ v(a)+v(b). LawViolation kind.
ValidationReport validate_m_valuation(const FiniteMValuation& v);
Subset support(const FiniteMValuation& v);
// The complement of the support is closed under products and 1 ∉ supp.
bool support_is_prime(const FiniteMValuation& v);
bool is_valuation(const FiniteMValuation& v);  // target cancellative
// γ∘v.
FiniteMValuation compose(const FiniteGhostHom& gamma, const FiniteMValuation& v);

struct FiniteSupervaluation {
  FiniteRing ring;
  FiniteSupertropical target;
  std::vector<Index> map;
};

// φ(0)=0, φ(1)=1, multiplicative, eφ an m-valuation.
ValidationReport validate_supervaluation(const FiniteSupervaluation& phi);
// eφ on the ghost ranks of the target.
FiniteMValuation covered_valuation(const FiniteSupervaluation& phi);
// U = φ(R) ∪ eφ(R).
bool is_surjective(const FiniteSupervaluation& phi);
bool is_tangible(const FiniteSupervaluation& phi);  // values are tangible or 0
FiniteSupervaluation compose(const FiniteTransmission& alpha, const FiniteSupervaluation& phi);
// v viewed as a supervaluation into its target read as a ghost carrier.
FiniteSupervaluation as_supervaluation(const FiniteMValuation& v);

struct Cover {
  FiniteSupertropical carrier;  // U(v)
  FiniteSupervaluation phi;     // φ_v
};

// U(v): ghosts M (named m + "g", zero "0") and tangibles a^ for a outside
// the support. Throws TargetNotCancellative.
Cover construct_cover(const FiniteMValuation& v);
// v̂: R -> D(M), a -> the tangible over v(a). Throws AxiomViolation when D(M)
// does not exist.
FiniteSupervaluation hat_cover(const FiniteMValuation& v);

struct DominanceResult {
  std::optional<FiniteTransmission> alpha;
  Witness obstruction;
};
// The forced map α(φ(a)) = ψ(a), α(eφ(a)) = eψ(a). Throws NotSurjective.
DominanceResult dominance(const FiniteSupervaluation& phi, const FiniteSupervaluation& psi);

struct UnitData {
  Subset units;    // v(a) = 1
  Subset maximal;  // v(a) < 1
};
// Throws NotGroupLike if R∖supp(v) is not closed under inverses.
UnitData unit_data(const FiniteMValuation& v);

// γ*(φ) = α_{U,γ}∘φ, γ starting at φ.target.ghost_bipotent().
FiniteSupervaluation pushout_supervaluation(const FiniteSupervaluation& phi, const FiniteGhostHom& gamma);
// Checks the values of α_{U,γ}: a tangible x with γ(ex) ≠ 0 stays a
// tangible alone in its class, the other tangibles go to 0 and ghosts go
// through γ. Returns the first offending element.
std::optional<Witness> pushout_value_violation(const InitialTransmission& init, const FiniteSupertropical& u,
                                               const FiniteGhostHom& gamma);
// t-collapse of φ over 𝔞 (ghost indices of φ.target).
FiniteSupervaluation t_collapse(const FiniteSupervaluation& phi, const Subset& ideal);

// Surjective tangible covers of v obtained as MFCE quotients of U(v) that
// keep tangibles tangible, up to equality of kernels.
std::vector<FiniteSupervaluation> tangible_covers(const FiniteMValuation& v);
// Same kernel on R (mutual dominance for surjective supervaluations).
bool equivalent(const FiniteSupervaluation& a, const FiniteSupervaluation& b);

// ---- rule valuations on exact rings ----

template <class R, Bipotent M>
struct RuleValuation {
  R ring;
  M target;
  std::function<typename M::value_type(const typename R::value_type&)> map;
  std::string name;
};

template <class R, Bipotent M>
ValidationReport validate_m_valuation(const RuleValuation<R, M>& v, const SampleConfig& cfg = {}, long box = 3) {
  ValidationReport rep;
  rep.subject = "m-valuation " + v.name;
  rep.exhaustive = false;
  rep.seed = cfg.seed;
  const auto& r = v.ring;
  const auto& m = v.target;
  auto f = [&](const typename R::value_type& a) { return r.format(a); };
  std::optional<Witness> zero_w, one_w, mul_w, sub_w;
  if (!(v.map(r.zero()) == m.zero())) zero_w = Witness{f(r.zero())};
  if (!(v.map(r.one()) == m.one())) one_w = Witness{f(r.one())};
  Rng rng(cfg.seed);
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    auto a = r.sample(rng, box), b = r.sample(rng, box);
    auto va = v.map(a), vb = v.map(b);
    if (!mul_w && !(v.map(r.mul(a, b)) == m.mul(va, vb))) mul_w = Witness{f(a), f(b)};
    if (!sub_w && m.compare(v.map(r.add(a, b)), bip_add(m, va, vb)) > 0) sub_w = Witness{f(a), f(b)};
  }
  rep.record("v(0) = 0", 1, zero_w, ErrorKind::LawViolation);
  rep.record("v(1) = 1", 1, one_w, ErrorKind::LawViolation);
  rep.record("multiplicative", cfg.samples, mul_w, ErrorKind::LawViolation);
  rep.record("subadditive", cfg.samples, sub_w, ErrorKind::LawViolation);
  return rep;
}

// v(a) = -ord_p(a) into RationalMaxPlus.
RuleValuation<RationalField, RationalMaxPlus> padic_valuation(unsigned long p);
// v(f) = (ord_t g - ord_t f, -ord_2(lowest coefficient of f / that of g))
// for f/g in lowest terms, into LexPower(2).
RuleValuation<RationalFunctionField, LexPower> laurent_rank2_valuation();

template <class R, Bipotent M>
bool in_unit_group(const RuleValuation<R, M>& v, const typename R::value_type& a) {
  return v.map(a) == v.target.one();
}

template <class R, Bipotent M>
bool in_maximal_ideal(const RuleValuation<R, M>& v, const typename R::value_type& a) {
  return v.target.compare(v.map(a), v.target.one()) < 0;
}

}  // namespace strop
