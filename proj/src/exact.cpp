#include "strop/exact.hpp"

#include <algorithm>

namespace strop {

namespace {

Poly linear_poly(const Rational& c) { return Poly({Rational(1), c}); }

// Removes every factor of d from p; p must be nonzero.
void strip_factor(Poly& p, const Poly& d) {
  for (;;) {
    PolyDivision q = divmod(p, d);
    if (!q.remainder.is_zero()) return;
    p = q.quotient;
  }
}

void strip_prime(Integer& n, unsigned long p) {
  while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
}

}  // namespace

UnitSubgroup::UnitSubgroup(std::vector<unsigned long> primes, std::vector<Rational> linear)
    : primes_(std::move(primes)), linear_(std::move(linear)) {
  for (unsigned long p : primes_) require(p % 2 == 1 && p > 1, ErrorKind::Malformed, "generator primes must be odd");
  for (const auto& c : linear_) require(c != 0, ErrorKind::Malformed, "linear generators need c != 0");
}

UnitSubgroup UnitSubgroup::sampled(Rng& rng, std::size_t primes, std::size_t linear) {
  static const unsigned long pool[] = {3, 5, 7, 11, 13, 17, 19, 23};
  std::vector<unsigned long> ps;
  while (ps.size() < primes && ps.size() < std::size(pool)) {
    unsigned long p = pool[rng.below(std::size(pool))];
    if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
  }
  std::vector<Rational> cs;
  while (cs.size() < linear) {
    Rational c = rng.rational(4);
    if (c != 0 && std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
  }
  return UnitSubgroup(ps, cs);
}

std::vector<RatFunc> UnitSubgroup::generators() const {
  std::vector<RatFunc> out;
  for (unsigned long p : primes_) out.push_back(RatFunc::constant(Rational(static_cast<long>(p))));
  for (const auto& c : linear_) out.push_back(RatFunc(linear_poly(c), Poly::constant(Rational(1))));
  return out;
}

bool UnitSubgroup::contains(const RatFunc& f) const {
  if (f.is_zero()) return false;
  Poly num = f.num(), den = f.den();
  for (const auto& c : linear_) {
    strip_factor(num, linear_poly(c));
    strip_factor(den, linear_poly(c));
  }
  if (num.degree() != 0 || den.degree() != 0) return false;
  Rational r = num.leading() / den.leading();
  if (r < 0) return false;
  Integer a = r.get_num(), b = r.get_den();
  for (unsigned long p : primes_) {
    strip_prime(a, p);
    strip_prime(b, p);
  }
  return a == 1 && b == 1;
}

RatFunc UnitSubgroup::sample(Rng& rng) const {
  RatFunc h = RatFunc::constant(Rational(1));
  for (const auto& g : generators()) {
    long k = rng.in_range(-2, 2);
    RatFunc step = k < 0 ? g.inverse() : g;
    for (long i = 0; i < std::labs(k); ++i) h = h * step;
  }
  return h;
}

}  // namespace strop
