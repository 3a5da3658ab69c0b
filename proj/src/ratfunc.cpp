#include "strop/ratfunc.hpp"

#include "strop/error.hpp"

namespace strop {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Poly::ord_t() const {
  require(!is_zero(), ErrorKind::Malformed, "order of the zero polynomial");
  std::size_t k = 0;
  while (c_[k] == 0) ++k;
  return k;
}

const Rational& Poly::lowest() const { return c_[ord_t()]; }

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(Rational(-1)); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& c) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= c;
  return Poly(std::move(v));
}

std::string Poly::format() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += c_[i] < 0 ? " - " : " + ";
    else if (c_[i] < 0) s += "-";
    std::string mag = to_string(abs(c_[i]));
    if (i == 0) s += mag;
    else {
      if (mag != "1") s += mag + "*";
      s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return s;
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  require(!b.is_zero(), ErrorKind::DivisionByZeroFunction, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  std::size_t db = bc.size() - 1;
  std::vector<Rational> q(r.size() - db, Rational(0));
  Rational inv = 1 / b.leading();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    Rational c = r[i] * inv;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * bc[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_gcd(Poly a, Poly b) {
  // Monic remainders keep the coefficients small.
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : r.scaled(1 / Rational(r.leading()));
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / Rational(a.leading()));
}

RatFunc::RatFunc(Poly num, Poly den) {
  require(!den.is_zero(), ErrorKind::DivisionByZeroFunction, "zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly::constant(Rational(1));
    return;
  }
  Poly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).quotient;
    den = divmod(den, g).quotient;
  }
  Rational lead = den.leading();
  num_ = num.scaled(1 / lead);
  den_ = den.scaled(1 / lead);
}

RatFunc RatFunc::t_power(long k) {
  if (k >= 0) return RatFunc(Poly::monomial(Rational(1), k), Poly::constant(Rational(1)));
  return RatFunc(Poly::constant(Rational(1)), Poly::monomial(Rational(1), -k));
}

RatFunc RatFunc::operator+(const RatFunc& o) const { return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
RatFunc RatFunc::operator-(const RatFunc& o) const { return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::inverse() const {
  require(!is_zero(), ErrorKind::DivisionByZeroFunction, "inverse of zero");
  return RatFunc(den_, num_);
}

std::string RatFunc::format() const {
  if (den_ == Poly::constant(Rational(1))) return num_.format();
  return "(" + num_.format() + ")/(" + den_.format() + ")";
}

RatFunc RationalFunctionField::sample(Rng& rng, long box) const {
  auto poly = [&](bool nonzero) {
    for (;;) {
      std::vector<Rational> c;
      long deg = rng.in_range(0, 2);
      for (long i = 0; i <= deg; ++i) c.push_back(rng.rational(box));
      Poly p(c);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  Poly num = poly(false), den = poly(true);
  return RatFunc(num, den) * RatFunc::t_power(rng.in_range(-2, 2));
}

Rational RationalField::sample(Rng& rng, long box) const { return rng.rational(box); }

}  // namespace strop
