#pragma once

#include <string>
#include <vector>

#include "strop/rational.hpp"
#include "strop/sampling.hpp"

namespace strop {

// Polynomial over Q in t; coefficients low degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }
  // Exponent of t and the coefficient at that degree. Zero is rejected.
  std::size_t ord_t() const;
  const Rational& lowest() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  std::string format() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};
PolyDivision divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic, or zero

// f/g in lowest terms with monic g.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(Rational(1))) {}
  RatFunc(Poly num, Poly den);  // throws DivisionByZeroFunction for g = 0
  static RatFunc constant(const Rational& c) { return RatFunc(Poly::constant(c), Poly::constant(Rational(1))); }
  static RatFunc t_power(long k);  // t^k, k may be negative

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc inverse() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string format() const;

 private:
  Poly num_, den_;
};

// Q(t) as a ring for the exact carriers.
class RationalFunctionField {
 public:
  using value_type = RatFunc;
  value_type zero() const { return RatFunc(); }
  value_type one() const { return RatFunc::constant(Rational(1)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string format(const value_type& a) const { return a.format(); }
  // Small numerator and denominator of degree ≤ 2 times t^k with |k| ≤ 2.
  value_type sample(Rng& rng, long box = 3) const;
};

// Q as a ring.
class RationalField {
 public:
  using value_type = Rational;
  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string format(const value_type& a) const { return to_string(a); }
  value_type sample(Rng& rng, long box = 12) const;
};

}  // namespace strop
