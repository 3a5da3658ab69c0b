#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strop/ratfunc.hpp"
#include "strop/transmission.hpp"
#include "strop/valuations.hpp"

namespace strop {

// U(v) for a valuation given by a rule: tangibles are the ring elements
// outside the support, ghosts are M.
template <class R, Bipotent M>
class CoverCarrier {
 public:
  using ring_value = typename R::value_type;
  using ghost_type = typename M::value_type;
  struct value_type {
    std::optional<ring_value> tangible;
    ghost_type ghost;
  };

  explicit CoverCarrier(RuleValuation<R, M> v) : v_(std::move(v)) {}

  const RuleValuation<R, M>& valuation() const { return v_; }
  value_type zero() const { return {std::nullopt, v_.target.zero()}; }
  value_type one() const { return {v_.ring.one(), v_.target.one()}; }
  value_type e() const { return {std::nullopt, v_.target.one()}; }
  value_type ghost(const ghost_type& g) const { return {std::nullopt, g}; }
  // φ_v.
  value_type phi(const ring_value& a) const {
    ghost_type g = v_.map(a);
    if (g == v_.target.zero()) return zero();
    return {a, g};
  }
  value_type mul(const value_type& x, const value_type& y) const {
    ghost_type g = v_.target.mul(x.ghost, y.ghost);
    if (x.tangible && y.tangible && !(g == v_.target.zero())) return {v_.ring.mul(*x.tangible, *y.tangible), g};
    return {std::nullopt, g};
  }
  value_type companion(const value_type& x) const { return {std::nullopt, x.ghost}; }
  bool is_ghost(const value_type& x) const { return !x.tangible; }
  std::strong_ordering compare_ghosts(const value_type& x, const value_type& y) const {
    return v_.target.compare(x.ghost, y.ghost);
  }
  std::strong_ordering compare_companions(const value_type& x, const value_type& y) const {
    return v_.target.compare(x.ghost, y.ghost);
  }
  bool equal(const value_type& x, const value_type& y) const {
    if (x.tangible.has_value() != y.tangible.has_value()) return false;
    if (x.tangible) return v_.ring.equal(*x.tangible, *y.tangible);
    return x.ghost == y.ghost;
  }
  std::string format(const value_type& x) const {
    if (x.tangible) return "(" + v_.ring.format(*x.tangible) + ")^";
    return "g" + v_.target.format(x.ghost);
  }
  ghost_type ghost_value(const value_type& x) const { return x.ghost; }
  value_type sample(Rng& rng, long box = 3) const {
    if (rng.chance(1, 3)) return ghost(v_.map(v_.ring.sample(rng, box)));
    return phi(v_.ring.sample(rng, box));
  }

 private:
  RuleValuation<R, M> v_;
};

// U/E for an equivalence E given by a predicate. Elements keep their
// representatives; equality is E.
template <Supertropical U>
class PredicateQuotient {
 public:
  using value_type = typename U::value_type;
  using ghost_type = typename U::ghost_type;
  using Related = std::function<bool(const value_type&, const value_type&)>;

  PredicateQuotient(U u, Related related, std::string name)
      : u_(std::move(u)), related_(std::move(related)), name_(std::move(name)) {}

  const U& base() const { return u_; }
  const std::string& name() const { return name_; }
  bool related(const value_type& x, const value_type& y) const { return related_(x, y); }
  value_type zero() const { return u_.zero(); }
  value_type one() const { return u_.one(); }
  value_type e() const { return u_.e(); }
  value_type mul(const value_type& x, const value_type& y) const { return u_.mul(x, y); }
  value_type companion(const value_type& x) const { return u_.companion(x); }
  bool is_ghost(const value_type& x) const { return u_.is_ghost(x) || related_(x, u_.companion(x)); }
  std::strong_ordering compare_ghosts(const value_type& x, const value_type& y) const {
    if (related_(x, y)) return std::strong_ordering::equal;
    return u_.compare_ghosts(x, y);
  }
  bool equal(const value_type& x, const value_type& y) const { return u_.equal(x, y) || related_(x, y); }
  std::string format(const value_type& x) const { return "[" + u_.format(x) + "]"; }
  ghost_type ghost_value(const value_type& x) const { return u_.ghost_value(x); }
  value_type sample(Rng& rng, long box = 3) const { return u_.sample(rng, box); }

 private:
  U u_;
  Related related_;
  std::string name_;
};

// U_γ for γ: eU -> N onto a cancellative N. A tangible x with γ(ex) ≠ 0
// stays tangible with companion γ(ex); other tangibles become 0; ghosts go
// through γ.
template <Supertropical U, Bipotent N>
class Pushed {
 public:
  using base_value = typename U::value_type;
  using ghost_type = typename N::value_type;
  using Gamma = std::function<ghost_type(const typename U::ghost_type&)>;
  struct value_type {
    std::optional<base_value> tangible;
    ghost_type ghost;
  };

  Pushed(U u, N n, Gamma gamma) : u_(std::move(u)), n_(std::move(n)), gamma_(std::move(gamma)) {}

  const U& base() const { return u_; }
  const N& ghosts() const { return n_; }
  // α_{U,γ}.
  value_type from(const base_value& x) const {
    ghost_type g = gamma_(u_.ghost_value(u_.companion(x)));
    if (u_.is_ghost(x) || g == n_.zero()) return {std::nullopt, g};
    return {x, g};
  }
  value_type zero() const { return {std::nullopt, n_.zero()}; }
  value_type one() const { return from(u_.one()); }
  value_type e() const { return {std::nullopt, n_.one()}; }
  value_type mul(const value_type& x, const value_type& y) const {
    if (x.tangible && y.tangible) return from(u_.mul(*x.tangible, *y.tangible));
    return {std::nullopt, n_.mul(x.ghost, y.ghost)};
  }
  value_type companion(const value_type& x) const { return {std::nullopt, x.ghost}; }
  bool is_ghost(const value_type& x) const { return !x.tangible; }
  std::strong_ordering compare_ghosts(const value_type& x, const value_type& y) const {
    return n_.compare(x.ghost, y.ghost);
  }
  bool equal(const value_type& x, const value_type& y) const {
    if (x.tangible.has_value() != y.tangible.has_value()) return false;
    if (x.tangible) return u_.equal(*x.tangible, *y.tangible);
    return x.ghost == y.ghost;
  }
  std::string format(const value_type& x) const {
    if (x.tangible) return u_.format(*x.tangible);
    return "g" + n_.format(x.ghost);
  }
  ghost_type ghost_value(const value_type& x) const { return x.ghost; }
  value_type sample(Rng& rng, long box = 3) const { return from(u_.sample(rng, box)); }

 private:
  U u_;
  N n_;
  Gamma gamma_;
};

// γ∘v for a rule valuation and a rule homomorphism.
template <class R, Bipotent M, Bipotent N>
RuleValuation<R, N> compose(const RuleGhostHom<M, N>& gamma, const RuleValuation<R, M>& v) {
  auto g = gamma.map;
  auto f = v.map;
  return {v.ring, gamma.target, [g, f](const typename R::value_type& a) { return g(f(a)); },
          gamma.name + " o " + v.name};
}

// Subgroup of Q(t)* generated by odd primes and linear polynomials 1 + c·t.
// Every generator has value (0,0) under the rank-2 Laurent valuation.
class UnitSubgroup {
 public:
  UnitSubgroup(std::vector<unsigned long> primes, std::vector<Rational> linear);
  static UnitSubgroup sampled(Rng& rng, std::size_t primes, std::size_t linear);

  const std::vector<unsigned long>& primes() const { return primes_; }
  const std::vector<Rational>& linear() const { return linear_; }
  std::vector<RatFunc> generators() const;
  bool contains(const RatFunc& f) const;
  // Product of generators with exponents in [-2, 2].
  RatFunc sample(Rng& rng) const;

 private:
  std::vector<unsigned long> primes_;
  std::vector<Rational> linear_;
};

}  // namespace strop
