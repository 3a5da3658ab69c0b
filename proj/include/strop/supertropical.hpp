#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strop/bipotent.hpp"

namespace strop {

// A carrier with idempotent e, ghost companion ν(x) = e·x and the forced
// addition: x+y is y if ex<ey, x if ex>ey, and ex if ex=ey.
template <class U>
concept Supertropical = requires(const U& u, const typename U::value_type& x) {
  { u.zero() } -> std::convertible_to<typename U::value_type>;
  { u.one() } -> std::convertible_to<typename U::value_type>;
  { u.e() } -> std::convertible_to<typename U::value_type>;
  { u.mul(x, x) } -> std::convertible_to<typename U::value_type>;
  { u.companion(x) } -> std::convertible_to<typename U::value_type>;
  { u.is_ghost(x) } -> std::same_as<bool>;
  { u.compare_ghosts(x, x) } -> std::same_as<std::strong_ordering>;
  { u.equal(x, x) } -> std::same_as<bool>;
  { u.format(x) } -> std::convertible_to<std::string>;
};

template <Supertropical U>
typename U::value_type st_add(const U& u, const typename U::value_type& x, const typename U::value_type& y) {
  if constexpr (requires { u.compare_companions(x, y); }) {
    auto c = u.compare_companions(x, y);
    if (c < 0) return y;
    if (c > 0) return x;
    return u.companion(x);
  } else {
    auto ex = u.companion(x), ey = u.companion(y);
    auto c = u.compare_ghosts(ex, ey);
    if (c < 0) return y;
    if (c > 0) return x;
    return ex;
  }
}

template <Supertropical U>
bool is_tangible(const U& u, const typename U::value_type& x) {
  return !u.is_ghost(x);
}

class FiniteSupertropical {
 public:
  using value_type = Index;

  FiniteSupertropical() = default;
  // mul is row-major; ghosts ascending and ghosts[0] == 0 (the zero).
  FiniteSupertropical(std::vector<std::string> names, std::vector<Index> mul, Index e, Index one,
                      std::vector<Index> ghosts);
  static FiniteSupertropical from_rows(std::vector<std::string> names, const std::vector<std::vector<Index>>& rows,
                                       Index e, Index one, std::vector<Index> ghosts);
  // M viewed as the supertropical semiring U = M (e = 1).
  static FiniteSupertropical ghost_only(const FiniteBipotent& m);

  std::size_t size() const { return names_.size(); }
  Index zero() const { return 0; }
  Index one() const { return one_; }
  Index e() const { return e_; }
  Index mul(Index x, Index y) const { return mul_[x * size() + y]; }
  Index companion(Index x) const { return mul(e_, x); }
  bool is_ghost(Index x) const { return ghost_rank_[x] < size(); }
  bool is_tangible(Index x) const { return !is_ghost(x); }
  bool equal(Index x, Index y) const { return x == y; }
  std::strong_ordering compare_ghosts(Index x, Index y) const { return ghost_rank_[x] <=> ghost_rank_[y]; }
  std::string format(Index x) const { return names_[x]; }
  Index add(Index x, Index y) const { return st_add(*this, x, y); }

  // Position in the ghost order; non-ghosts sort after every ghost.
  std::size_t ghost_rank(Index x) const { return ghost_rank_[x]; }
  const std::vector<Index>& ghosts() const { return ghosts_; }
  Subset ghost_set() const;
  Subset tangibles() const;
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Index x) const { return names_[x]; }
  Index index_of(const std::string& name) const;  // throws ForeignElement
  const std::vector<Index>& table() const { return mul_; }
  void set_entry(Index x, Index y, Index v) { mul_[x * size() + y] = v; }

  // eU as a bipotent carrier whose element r is ghosts()[r].
  FiniteBipotent ghost_bipotent() const;
  // U-index of an element of ghost_bipotent().
  Index ghost_at(Index r) const { return ghosts_[r]; }
  // Fiber U_a = {x : ex = a}.
  Subset fiber(Index a) const;

  bool operator==(const FiniteSupertropical&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Index> mul_;
  Index e_ = 0;
  Index one_ = 0;
  std::vector<Index> ghosts_;
  std::vector<std::size_t> ghost_rank_;
};

// ---- validation ----

namespace detail {

template <Supertropical U>
bool eq(const U& u, const typename U::value_type& a, const typename U::value_type& b) {
  return u.equal(a, b);
}

}  // namespace detail

// Laws of the forced addition and of the multiplicative structure, checked on
// every triple (finite) or on cfg.samples seeded triples.
template <Supertropical U>
void check_supertropical_laws(const U& u, const SampleConfig& cfg, ValidationReport& rep) {
  using V = typename U::value_type;
  auto f = [&](const V& v) { return u.format(v); };
  auto eq = [&](const V& a, const V& b) { return u.equal(a, b); };
  auto add = [&](const V& a, const V& b) { return st_add(u, a, b); };
  const char* names[] = {"mul commutative",  "mul associative", "mul identity",     "zero absorbing",
                         "companion is ghost", "ghost monotone", "ex = 0 implies x = 0", "add commutative",
                         "add associative",  "add identity",    "distributive"};
  constexpr std::size_t kLaws = sizeof(names) / sizeof(names[0]);
  std::vector<std::optional<Witness>> w(kLaws);
  auto note = [&](std::size_t i, Witness wit) {
    if (!w[i]) w[i] = std::move(wit);
  };
  V zero = u.zero(), one = u.one();
  std::uint64_t n = detail::for_triples(u, cfg, [&](const V& x, const V& y, const V& z) {
    V xy = u.mul(x, y);
    if (!eq(xy, u.mul(y, x))) note(0, {f(x), f(y)});
    if (!eq(u.mul(xy, z), u.mul(x, u.mul(y, z)))) note(1, {f(x), f(y), f(z)});
    if (!eq(u.mul(one, x), x)) note(2, {f(x)});
    if (!eq(u.mul(zero, x), zero)) note(3, {f(x)});
    V ex = u.companion(x);
    if (!u.is_ghost(ex) || !eq(u.companion(ex), ex)) note(4, {f(x)});
    V ey = u.companion(y), ez = u.companion(z);
    if (u.compare_ghosts(ex, ey) <= 0 && u.compare_ghosts(u.mul(ex, ez), u.mul(ey, ez)) > 0)
      note(5, {f(ex), f(ey), f(ez)});
    if (eq(ex, zero) && !eq(x, zero)) note(6, {f(x)});
    if (!eq(add(x, y), add(y, x))) note(7, {f(x), f(y)});
    if (!eq(add(add(x, y), z), add(x, add(y, z)))) note(8, {f(x), f(y), f(z)});
    if (!eq(add(zero, x), x)) note(9, {f(x)});
    if (!eq(u.mul(add(x, y), z), add(u.mul(x, z), u.mul(y, z)))) note(10, {f(x), f(y), f(z)});
    return true;
  });
  for (std::size_t i = 0; i < kLaws; ++i) rep.record(names[i], n, w[i]);
}

template <Supertropical U>
ValidationReport validate_supertropical_sampled(const U& u, const SampleConfig& cfg = {}) {
  ValidationReport rep;
  rep.subject = "supertropical carrier";
  rep.exhaustive = false;
  rep.seed = cfg.seed;
  auto e = u.e();
  std::optional<Witness> idem, one_one;
  if (!u.equal(u.mul(e, e), e) || !u.is_ghost(e)) idem = Witness{u.format(e)};
  if (!u.equal(st_add(u, u.one(), u.one()), e)) one_one = Witness{u.format(u.one())};
  rep.record("e idempotent", 1, idem);
  rep.record("1 + 1 = e", 1, one_one);
  check_supertropical_laws(u, cfg, rep);
  return rep;
}

ValidationReport validate_supertropical(const FiniteSupertropical& u);

// ---- the projection constructor ----

// A commutative monoid with an absorbing element (the "zero" that collapses
// a tangible product into its ghost).
struct FiniteMonoidWithZero {
  std::vector<std::string> names;
  std::vector<Index> mul;  // row-major
  Index one = 0;
  Index zero = 0;
  std::size_t size() const { return names.size(); }
  Index at(Index x, Index y) const { return mul[x * size() + y]; }
  // {1, z}: gives the tangible double.
  static FiniteMonoidWithZero trivial();
  static FiniteMonoidWithZero cyclic_group(std::size_t n);      // Z/n plus zero
  static FiniteMonoidWithZero truncated_cyclic(std::size_t k);  // 1, g, ..., g^{k-1}, g^k = z
  static FiniteMonoidWithZero product(const FiniteMonoidWithZero& a, const FiniteMonoidWithZero& b);
};

ValidationReport validate_monoid_with_zero(const FiniteMonoidWithZero& s);

// Monoid data for the projection constructor. Elements 0..|M|-1 of the
// monoid are the elements of M (same indices); the rest are tangible.
struct ProjectionData {
  FiniteBipotent ghosts;
  std::vector<std::string> tangible_names;
  std::vector<Index> mul;  // row-major over |M| + |T| elements
  Index one = 0;
  std::vector<Index> p;  // monoid element -> M index
  std::size_t size() const { return ghosts.size() + tangible_names.size(); }
};

// Builds the supertropical semiring whose ghost map is p. Throws
// HypothesisViolation naming the failed hypothesis.
FiniteSupertropical construct_from_projection(const ProjectionData& data);
// Splits a carrier with cancellative ghost ideal back into projection data.
ProjectionData decompose(const FiniteSupertropical& u);

// Ghost ideal M; tangibles (m, s) with m != 0 and s != zero of S; a tangible
// product whose S-part hits zero (or whose ghost part is 0) collapses to its
// ghost.
template <Bipotent M>
class Constructed {
 public:
  struct value_type {
    typename M::value_type ghost;
    std::optional<Index> tag;  // empty for ghosts
    bool operator==(const value_type& o) const { return ghost == o.ghost && tag == o.tag; }
  };

  Constructed(M m, FiniteMonoidWithZero s) : m_(std::move(m)), s_(std::move(s)) {}

  const M& ghost_carrier() const { return m_; }
  const FiniteMonoidWithZero& tangible_monoid() const { return s_; }
  value_type zero() const { return {m_.zero(), std::nullopt}; }
  value_type one() const { return {m_.one(), s_.one}; }
  value_type e() const { return {m_.one(), std::nullopt}; }
  value_type ghost(const typename M::value_type& g) const { return {g, std::nullopt}; }
  value_type tangible(const typename M::value_type& g, std::optional<Index> tag = std::nullopt) const {
    return {g, tag.value_or(s_.one)};
  }
  value_type mul(const value_type& x, const value_type& y) const {
    value_type out{m_.mul(x.ghost, y.ghost), std::nullopt};
    if (x.tag && y.tag && !(out.ghost == m_.zero())) {
      Index t = s_.at(*x.tag, *y.tag);
      if (t != s_.zero) out.tag = t;
    }
    return out;
  }
  value_type companion(const value_type& x) const { return {x.ghost, std::nullopt}; }
  bool is_ghost(const value_type& x) const { return !x.tag; }
  std::strong_ordering compare_ghosts(const value_type& x, const value_type& y) const {
    return m_.compare(x.ghost, y.ghost);
  }
  // ex <=> ey without building the companions.
  std::strong_ordering compare_companions(const value_type& x, const value_type& y) const {
    return m_.compare(x.ghost, y.ghost);
  }
  bool equal(const value_type& x, const value_type& y) const { return x == y; }
  std::string format(const value_type& x) const {
    std::string g = m_.format(x.ghost);
    if (!x.tag) return "g" + g;
    return s_.size() == 2 ? "t" + g : "t" + g + "." + s_.names[*x.tag];
  }
  value_type sample(Rng& rng, long box = 12) const {
    value_type v{m_.sample(rng, box), std::nullopt};
    if (!(v.ghost == m_.zero()) && rng.chance(1, 2)) {
      Index t;
      do t = static_cast<Index>(rng.below(s_.size()));
      while (t == s_.zero);
      v.tag = t;
    }
    return v;
  }
  // p: the ghost map read as the projection of the constructor.
  typename M::value_type project(const value_type& x) const { return x.ghost; }
  using ghost_type = typename M::value_type;
  ghost_type ghost_value(const value_type& x) const { return x.ghost; }

 private:
  M m_;
  FiniteMonoidWithZero s_;
};

template <Bipotent M>
Constructed<M> doubled(const M& m) {
  return Constructed<M>(m, FiniteMonoidWithZero::trivial());
}

// Sampled check of the constructor hypotheses on an exact carrier: p
// multiplicative, p|M = id, p⁻¹(0) = {0}, M an ideal.
template <Bipotent M>
ValidationReport validate_projection_hypotheses(const Constructed<M>& u, const SampleConfig& cfg = {}) {
  ValidationReport rep;
  rep.subject = "projection hypotheses";
  rep.exhaustive = false;
  rep.seed = cfg.seed;
  const M& m = u.ghost_carrier();
  std::optional<Witness> mult, ident, kernel, ideal;
  Rng rng(cfg.seed);
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    auto x = u.sample(rng, cfg.box), y = u.sample(rng, cfg.box);
    if (!mult && !(u.project(u.mul(x, y)) == m.mul(u.project(x), u.project(y)))) mult = Witness{u.format(x), u.format(y)};
    if (!ident && u.is_ghost(x) && !(u.ghost(u.project(x)) == x)) ident = Witness{u.format(x)};
    if (!kernel && u.project(x) == m.zero() && !(x == u.zero())) kernel = Witness{u.format(x)};
    if (!ideal && u.is_ghost(x) && !u.is_ghost(u.mul(x, y))) ideal = Witness{u.format(x), u.format(y)};
  }
  rep.record("p multiplicative", cfg.samples, mult, ErrorKind::HypothesisViolation);
  rep.record("p restricts to identity on M", cfg.samples, ident, ErrorKind::HypothesisViolation);
  rep.record("p^-1(0) = {0}", cfg.samples, kernel, ErrorKind::HypothesisViolation);
  rep.record("M is an ideal", cfg.samples, ideal, ErrorKind::HypothesisViolation);
  auto canc = is_cancellative(m);
  rep.record("M cancellative", 1, canc.cancellative ? std::nullopt : std::optional<Witness>(Witness{"M"}),
             ErrorKind::HypothesisViolation);
  return rep;
}

// Materializes the construction over a finite M: index 0 is zero, ghosts
// follow in ascending order, then tangibles.
FiniteSupertropical materialize(const Constructed<FiniteBipotent>& u);

// D(M). Throws AxiomViolation when the forced addition is not distributive,
// in which case no tangible double exists.
FiniteSupertropical tangible_double(const FiniteBipotent& m);

// ---- ghost extension ----

struct GhostExtension {
  FiniteSupertropical carrier;
  std::vector<Index> inclusion;   // U index -> U′ index
  std::vector<Index> ghost_index; // M′ index -> U′ index
};

// U′ = U ⊔ (M′∖M) along an injective ghost homomorphism eU -> M′ whose source
// equals u.ghost_bipotent(). Throws NotSubsemiring, and HypothesisViolation
// when some tangible xy has ν(xy) = ν(x)z for a new ghost z < ν(y): the
// tables are then not distributive.
GhostExtension ghost_extension(const FiniteSupertropical& u, const FiniteGhostHom& embedding);

// ---- stabilizer and isomorphism ----

// {x : x·𝒯(U) ⊆ 𝒯(U)} with 𝒯(U) = U∖eU.
Subset mult_stabilizer(const FiniteSupertropical& u);

// Answer for the doubled exact carriers: every tangible, and nothing else.
template <Bipotent M>
std::string mult_stabilizer_symbolic(const Constructed<M>& u) {
  require(u.tangible_monoid().size() == 2, ErrorKind::Unsupported, "stabilizer is symbolic only for doubles");
  require(is_cancellative(u.ghost_carrier()).cancellative, ErrorKind::Unsupported,
          "stabilizer is symbolic only over cancellative ghosts");
  return "all tangibles";
}

// Index renaming preserving zero, one, e, products and the ghost order.
// Carriers above 8 elements throw TooLarge.
std::optional<std::vector<Index>> find_isomorphism(const FiniteSupertropical& a, const FiniteSupertropical& b);

}  // namespace strop
