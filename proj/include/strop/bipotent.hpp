#pragma once

#include <array>
#include <compare>
#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strop/error.hpp"
#include "strop/partition.hpp"
#include "strop/rational.hpp"
#include "strop/report.hpp"
#include "strop/sampling.hpp"

namespace strop {

// Totally ordered commutative monoid with absorbing least element; the
// semiring addition is max.
template <class C>
concept Bipotent = requires(const C& c, const typename C::value_type& x) {
  { c.zero() } -> std::convertible_to<typename C::value_type>;
  { c.one() } -> std::convertible_to<typename C::value_type>;
  { c.mul(x, x) } -> std::convertible_to<typename C::value_type>;
  { c.compare(x, x) } -> std::same_as<std::strong_ordering>;
  { c.contains(x) } -> std::same_as<bool>;
  { c.format(x) } -> std::convertible_to<std::string>;
};

template <class C>
concept Enumerable = requires(const C& c) {
  { c.size() } -> std::same_as<std::size_t>;
};

template <class C>
concept Sampleable = requires(const C& c, Rng& rng) {
  { c.sample(rng) } -> std::convertible_to<typename C::value_type>;
};

template <Bipotent C>
typename C::value_type bip_add(const C& c, const typename C::value_type& x, const typename C::value_type& y) {
  return c.compare(x, y) < 0 ? y : x;
}

class FiniteBipotent {
 public:
  using value_type = Index;

  FiniteBipotent() = default;
  // mul is row-major n×n; order lists the elements ascending (order[0] is 0).
  FiniteBipotent(std::vector<std::string> names, std::vector<Index> mul, std::vector<Index> order, Index one);
  static FiniteBipotent from_rows(std::vector<std::string> names, const std::vector<std::vector<Index>>& rows,
                                  std::vector<Index> order, Index one);
  static FiniteBipotent boolean();

  std::size_t size() const { return names_.size(); }
  Index zero() const { return order_.front(); }
  Index one() const { return one_; }
  Index mul(Index x, Index y) const { return mul_[x * size() + y]; }
  std::strong_ordering compare(Index x, Index y) const { return rank_[x] <=> rank_[y]; }
  bool contains(Index x) const { return x < size(); }
  std::string format(Index x) const { return names_[x]; }

  std::size_t rank(Index x) const { return rank_[x]; }
  Index at_rank(std::size_t r) const { return order_[r]; }
  bool leq(Index x, Index y) const { return rank_[x] <= rank_[y]; }
  Index add(Index x, Index y) const { return leq(x, y) ? y : x; }
  const std::vector<Index>& order() const { return order_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Index x) const { return names_[x]; }
  Index index_of(const std::string& name) const;  // throws ForeignElement
  const std::vector<Index>& table() const { return mul_; }
  void set_entry(Index x, Index y, Index value) { mul_[x * size() + y] = value; }

  bool operator==(const FiniteBipotent&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Index> mul_;
  std::vector<Index> order_;
  std::vector<std::size_t> rank_;
  Index one_ = 0;
};

// Q ∪ {⊥}; product is rational sum, one is 0.
class RationalMaxPlus {
 public:
  using value_type = std::optional<Rational>;
  value_type zero() const { return std::nullopt; }
  value_type one() const { return Rational(0); }
  value_type mul(const value_type& x, const value_type& y) const;
  std::strong_ordering compare(const value_type& x, const value_type& y) const;
  bool contains(const value_type&) const { return true; }
  std::string format(const value_type& x) const;
  value_type parse(const std::string& text) const;
  value_type sample(Rng& rng, long box = 12) const;
  bool operator==(const RationalMaxPlus&) const = default;
};

// Q^k ∪ {⊥} with componentwise sum and lexicographic order.
class LexPower {
 public:
  using value_type = std::optional<std::vector<Rational>>;
  explicit LexPower(int k = 2);
  int rank() const { return k_; }
  value_type zero() const { return std::nullopt; }
  value_type one() const { return std::vector<Rational>(k_, Rational(0)); }
  value_type mul(const value_type& x, const value_type& y) const;
  std::strong_ordering compare(const value_type& x, const value_type& y) const;
  bool contains(const value_type& x) const { return !x || static_cast<int>(x->size()) == k_; }
  std::string format(const value_type& x) const;
  value_type parse(const std::string& text) const;
  value_type sample(Rng& rng, long box = 12) const;
  static value_type point(std::vector<long> coords);
  bool operator==(const LexPower&) const = default;

 private:
  int k_;
};

// [0,1] ∩ Q under multiplication.
class UnitIntervalMul {
 public:
  using value_type = Rational;
  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type mul(const value_type& x, const value_type& y) const { return x * y; }
  std::strong_ordering compare(const value_type& x, const value_type& y) const;
  bool contains(const value_type& x) const { return x >= 0 && x <= 1; }
  std::string format(const value_type& x) const { return to_string(x); }
  value_type parse(const std::string& text) const;
  value_type sample(Rng& rng, long box = 12) const;
  bool operator==(const UnitIntervalMul&) const = default;
};

// N_0 under multiplication, usual order.
class NaturalMaxTimes {
 public:
  using value_type = Integer;
  value_type zero() const { return Integer(0); }
  value_type one() const { return Integer(1); }
  value_type mul(const value_type& x, const value_type& y) const { return x * y; }
  std::strong_ordering compare(const value_type& x, const value_type& y) const;
  bool contains(const value_type& x) const { return x >= 0; }
  std::string format(const value_type& x) const { return x.get_str(); }
  value_type sample(Rng& rng, long box = 12) const;
  bool operator==(const NaturalMaxTimes&) const = default;
};

// {0} ∪ (θ,1] (closed ideal) or {0} ∪ [θ,1] (open ideal), with
// x⊙y = xy when xy stays outside the ideal and 0 otherwise.
class TruncatedInterval {
 public:
  using value_type = Rational;
  TruncatedInterval(Rational theta, bool closed);
  const Rational& theta() const { return theta_; }
  bool closed() const { return closed_; }
  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type mul(const value_type& x, const value_type& y) const;
  std::strong_ordering compare(const value_type& x, const value_type& y) const;
  bool contains(const value_type& x) const;
  std::string format(const value_type& x) const { return to_string(x); }
  value_type sample(Rng& rng, long box = 12) const;
  bool in_ideal(const Rational& x) const { return closed_ ? x <= theta_ : x < theta_; }
  bool operator==(const TruncatedInterval&) const = default;

 private:
  Rational theta_;
  bool closed_;
};

using AnyBipotent = std::variant<FiniteBipotent, RationalMaxPlus, UnitIntervalMul, LexPower, NaturalMaxTimes,
                                 TruncatedInterval>;

std::string variant_name(const AnyBipotent& m);

// ---- validation ----

namespace detail {

template <Bipotent C>
std::vector<typename C::value_type> domain_points(const C& c, const SampleConfig& cfg, std::size_t count) {
  std::vector<typename C::value_type> pts;
  if constexpr (Enumerable<C>) {
    for (Index i = 0; i < c.size(); ++i) pts.push_back(i);
  } else {
    Rng rng(cfg.seed);
    pts.push_back(c.zero());
    pts.push_back(c.one());
    while (pts.size() < count) pts.push_back(c.sample(rng, cfg.box));
  }
  return pts;
}

// Visits triples: every triple for finite carriers, cfg.samples seeded
// triples otherwise. The visitor returns false to stop early.
template <class C, class Visit>
std::uint64_t for_triples(const C& c, const SampleConfig& cfg, Visit visit) {
  std::uint64_t n = 0;
  if constexpr (Enumerable<C>) {
    for (Index x = 0; x < c.size(); ++x)
      for (Index y = 0; y < c.size(); ++y)
        for (Index z = 0; z < c.size(); ++z) {
          ++n;
          if (!visit(typename C::value_type(x), typename C::value_type(y), typename C::value_type(z))) return n;
        }
  } else {
    Rng rng(cfg.seed);
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
      auto x = c.sample(rng, cfg.box);
      auto y = c.sample(rng, cfg.box);
      auto z = c.sample(rng, cfg.box);
      ++n;
      if (!visit(x, y, z)) return n;
    }
  }
  return n;
}

}  // namespace detail

template <Bipotent C>
ValidationReport validate_bipotent(const C& c, const SampleConfig& cfg = {}) {
  using V = typename C::value_type;
  ValidationReport rep;
  rep.subject = "bipotent carrier";
  rep.exhaustive = Enumerable<C>;
  if (!rep.exhaustive) rep.seed = cfg.seed;
  auto f = [&](const V& v) { return c.format(v); };
  auto add = [&](const V& x, const V& y) { return bip_add(c, x, y); };

  struct Law {
    std::string name;
    std::optional<Witness> witness;
  };
  std::vector<Law> laws = {{"closure", {}},       {"commutative", {}}, {"associative", {}},
                           {"identity", {}},      {"absorbing zero", {}}, {"zero least", {}},
                           {"monotone", {}},      {"add associative", {}}, {"distributive", {}},
                           {"bipotent", {}}};
  auto note = [&](std::size_t i, Witness w) {
    if (!laws[i].witness) laws[i].witness = std::move(w);
  };
  V zero = c.zero(), one = c.one();
  std::uint64_t n = detail::for_triples(c, cfg, [&](const V& x, const V& y, const V& z) {
    V xy = c.mul(x, y);
    if (!c.contains(xy)) note(0, {f(x), f(y)});
    if (!(xy == c.mul(y, x))) note(1, {f(x), f(y)});
    if (!(c.mul(xy, z) == c.mul(x, c.mul(y, z)))) note(2, {f(x), f(y), f(z)});
    if (!(c.mul(x, one) == x)) note(3, {f(x)});
    if (!(c.mul(x, zero) == zero)) note(4, {f(x)});
    if (c.compare(zero, x) > 0) note(5, {f(x)});
    if (c.compare(x, y) <= 0 && c.compare(c.mul(x, z), c.mul(y, z)) > 0) note(6, {f(x), f(y), f(z)});
    if (!(add(add(x, y), z) == add(x, add(y, z)))) note(7, {f(x), f(y), f(z)});
    if (!(c.mul(add(x, y), z) == add(c.mul(x, z), c.mul(y, z)))) note(8, {f(x), f(y), f(z)});
    if (!(add(x, x) == x)) note(9, {f(x)});
    return true;
  });
  for (auto& law : laws) rep.record(law.name, n, law.witness);
  return rep;
}

// ---- cancellativity ----

template <class V>
struct CancellativeResult {
  bool cancellative = true;
  std::optional<std::array<V, 3>> witness;  // x, y, z with xz = yz, z != 0, x != y
  std::string proof;                        // "exhaustive", "by-construction" or "sampled"
};

CancellativeResult<Index> is_cancellative(const FiniteBipotent& m);
CancellativeResult<std::optional<Rational>> is_cancellative(const RationalMaxPlus& m);
CancellativeResult<std::optional<std::vector<Rational>>> is_cancellative(const LexPower& m);
CancellativeResult<Rational> is_cancellative(const UnitIntervalMul& m);
CancellativeResult<Integer> is_cancellative(const NaturalMaxTimes& m);
// Searches seeded samples of (θ,1] for a collapse xz, yz inside the ideal.
CancellativeResult<Rational> is_cancellative(const TruncatedInterval& m, const SampleConfig& cfg = {});

// ---- relations on M ----

// Remark-style convexity test: every class is an interval of the order.
std::optional<Witness> order_compatibility_violation(const FiniteBipotent& m, const Partition& phi);
// The four-point form: x ≤ y ≤ z, x ~ z ⇒ x ~ y.
std::optional<Witness> order_compatibility_violation_pointwise(const FiniteBipotent& m, const Partition& phi);
std::optional<Witness> multiplicativity_violation(const FiniteBipotent& m, const Partition& phi);
std::optional<Witness> additivity_violation(const FiniteBipotent& m, const Partition& phi);

struct BipotentQuotient {
  FiniteBipotent carrier;
  std::vector<Index> projection;  // element of M -> class index
};

// Order is "∃ x∈ξ, y∈η with x ≤ y". Checks order compatibility first.
BipotentQuotient quotient_bipotent(const FiniteBipotent& m, const Partition& phi);

// ---- homomorphisms ----

struct FiniteGhostHom {
  FiniteBipotent source;
  FiniteBipotent target;
  std::vector<Index> map;
  bool claims_surjective = false;
};

ValidationReport validate_ghost_hom(const FiniteGhostHom& g);
bool is_surjective(const FiniteGhostHom& g);
bool is_injective(const FiniteGhostHom& g);
FiniteGhostHom identity_hom(const FiniteBipotent& m);
FiniteGhostHom compose(const FiniteGhostHom& second, const FiniteGhostHom& first);
// Kernel partition of γ on the source.
Partition kernel(const FiniteGhostHom& g);

// Homomorphism given by a rule between exact carriers.
template <Bipotent S, Bipotent T>
struct RuleGhostHom {
  S source;
  T target;
  std::function<typename T::value_type(const typename S::value_type&)> map;
  std::string name;
};

template <Bipotent S, Bipotent T>
ValidationReport validate_ghost_hom(const RuleGhostHom<S, T>& g, const SampleConfig& cfg = {}) {
  using V = typename S::value_type;
  ValidationReport rep;
  rep.subject = "ghost homomorphism " + g.name;
  rep.exhaustive = false;
  rep.seed = cfg.seed;
  auto fs = [&](const V& v) { return g.source.format(v); };
  std::optional<Witness> zero_w, one_w, mul_w, ord_w;
  if (!(g.map(g.source.zero()) == g.target.zero())) zero_w = Witness{fs(g.source.zero())};
  if (!(g.map(g.source.one()) == g.target.one())) one_w = Witness{fs(g.source.one())};
  Rng rng(cfg.seed);
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    V x = g.source.sample(rng, cfg.box), y = g.source.sample(rng, cfg.box);
    if (!mul_w && !(g.map(g.source.mul(x, y)) == g.target.mul(g.map(x), g.map(y)))) mul_w = Witness{fs(x), fs(y)};
    if (!ord_w && g.source.compare(x, y) <= 0 && g.target.compare(g.map(x), g.map(y)) > 0) ord_w = Witness{fs(x), fs(y)};
  }
  rep.record("zero", 1, zero_w, ErrorKind::NotHomomorphism);
  rep.record("one", 1, one_w, ErrorKind::NotHomomorphism);
  rep.record("multiplicative", cfg.samples, mul_w, ErrorKind::NotHomomorphism);
  rep.record("order preserving", cfg.samples, ord_w, ErrorKind::NotHomomorphism);
  return rep;
}

// Keeps the first j coordinates of LexPower(k), 1 ≤ j < k.
RuleGhostHom<LexPower, LexPower> convex_projection(const LexPower& m, int j);

// All bipotent carriers with n elements up to isomorphism, with index = rank.
std::vector<FiniteBipotent> enumerate_bipotent(std::size_t n);

// Names: {0 < a < 1}, a·a = a.
FiniteBipotent chain3();
// Names: {0 < a < 1}, a·a = 0.
FiniteBipotent nil3();

}  // namespace strop
