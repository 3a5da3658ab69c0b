#include "strop/ideals.hpp"

#include <algorithm>
#include <set>

#include "strop/relations.hpp"

namespace strop {

bool is_ideal(const FiniteSupertropical& u, const Subset& a) {
  if (!contains(a, u.zero())) return false;
  for (Index x : a) {
    if (x >= u.size()) return false;
    for (Index y = 0; y < u.size(); ++y)
      if (!contains(a, u.mul(x, y))) return false;
  }
  return true;
}

Subset saturate(const FiniteSupertropical& u, const Subset& a) {
  require(is_ideal(u, a), ErrorKind::NotIdeal, format_subset(u, a) + " is not an ideal");
  std::size_t top = 0;
  for (Index x : a) top = std::max(top, u.ghost_rank(u.companion(x)));
  Subset out;
  for (Index x = 0; x < u.size(); ++x)
    if (u.ghost_rank(u.companion(x)) <= top) out.push_back(x);
  return out;
}

bool is_saturated(const FiniteSupertropical& u, const Subset& a) { return saturate(u, a) == a; }

PrimeCheck is_prime(const FiniteSupertropical& u, const Subset& a) {
  require(is_ideal(u, a), ErrorKind::NotIdeal, format_subset(u, a) + " is not an ideal");
  PrimeCheck out;
  out.prime = a.size() < u.size();
  for (Index x = 0; x < u.size() && out.prime; ++x)
    for (Index y = 0; y < u.size(); ++y)
      if (!contains(a, x) && !contains(a, y) && contains(a, u.mul(x, y))) {
        out.prime = false;
        out.witness = std::make_pair(x, y);
        break;
      }
  if (!contains(a, u.e())) {
    Subset c = ghost_part(u, a);
    bool c_prime = true;
    for (Index x : u.ghosts())
      for (Index y : u.ghosts())
        if (!contains(c, x) && !contains(c, y) && contains(c, u.mul(x, y))) c_prime = false;
    out.ghost_criterion = c_prime && is_subset(ghost_preimage(u, c), a);
  }
  return out;
}

namespace {

// Members x with f(x)^n in 𝔞 for some n ≥ 1; powers cycle in a finite carrier.
Subset power_scan(const FiniteSupertropical& u, const Subset& a, bool via_companion) {
  Subset out;
  for (Index x = 0; x < u.size(); ++x) {
    Index base = via_companion ? u.companion(x) : x;
    std::set<Index> seen;
    Index p = base;
    while (seen.insert(p).second) {
      if (contains(a, p)) {
        out.push_back(x);
        break;
      }
      p = u.mul(p, base);
    }
  }
  return out;
}

}  // namespace

Subset radical(const FiniteSupertropical& u, const Subset& a) {
  require(is_ideal(u, a), ErrorKind::NotIdeal, format_subset(u, a) + " is not an ideal");
  require(is_saturated(u, a), ErrorKind::NotSaturated, format_subset(u, a) + " is not saturated");
  require(a.size() < u.size(), ErrorKind::NotProper, "the ideal is the whole carrier");
  return power_scan(u, a, true);
}

Subset radical_e_free(const FiniteSupertropical& u, const Subset& a) { return power_scan(u, a, false); }

std::vector<Subset> enumerate_ideals(const FiniteSupertropical& u, IdealFilter filter, std::size_t bound) {
  const std::size_t n = u.size();
  require(n <= bound, ErrorKind::TooLarge,
          "carrier has " + std::to_string(n) + " elements, bound is " + std::to_string(bound));
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & 1)) continue;  // index 0 is the zero
    Subset s;
    for (Index i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (!is_ideal(u, s)) continue;
    if (filter == IdealFilter::Saturated && !is_saturated(u, s)) continue;
    if (filter == IdealFilter::Prime && !is_prime(u, s).prime) continue;
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const Subset& x, const Subset& y) { return x.size() < y.size(); });
  return out;
}

PhiIdeals phi_ideals(const FiniteSupertropical& u, const Partition& phi) {
  FiniteBipotent m = u.ghost_bipotent();
  require(phi.size() == m.size(), ErrorKind::Malformed, "phi is not a relation on the ghost ideal");
  if (auto w = multiplicativity_violation(m, phi)) fail(ErrorKind::PhiNotHomomorphic, "phi is not multiplicative");
  if (auto w = additivity_violation(m, phi)) fail(ErrorKind::PhiNotHomomorphic, "phi is not additive");
  PhiIdeals out;
  for (Index x = 0; x < u.size(); ++x)
    if (phi.related(u.ghost_rank(u.companion(x)), 0)) out.a_phi.push_back(x);
  out.big_a = subset_union(u.ghost_set(), out.a_phi);
  require(is_ideal(u, out.a_phi) && is_ideal(u, out.big_a), ErrorKind::AxiomViolation,
          "ideals attached to phi are not ideals");
  return out;
}

Subset zero_class_ideal(const FiniteSupertropical& u, const Partition& e) {
  auto c = classify_relation(u, e);
  require(c.te.holds, ErrorKind::NotTE, "relation is not a TE-relation");
  return e.block_of(u.zero());
}

Subset ghost_preimage(const FiniteSupertropical& u, const Subset& c) {
  Subset out;
  for (Index x = 0; x < u.size(); ++x)
    if (contains(c, u.companion(x))) out.push_back(x);
  return out;
}

Subset ghost_part(const FiniteSupertropical& u, const Subset& a) {
  Subset out;
  for (Index x : a)
    if (u.is_ghost(x)) out.push_back(x);
  return out;
}

Subset subset_from_names(const FiniteSupertropical& u, const std::vector<std::string>& names) {
  Subset out;
  for (const auto& n : names) out.push_back(u.index_of(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_subset(const FiniteSupertropical& u, const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + u.name(s[i]);
  return out + "}";
}

// ---- the unit interval ----

std::string IntervalIdeal::format() const { return "[0," + to_string(theta) + (closed ? "]" : ")"); }

IntervalIdeal saturate(const IntervalIdeal& a) { return a; }

IntervalPrimeCheck is_prime(const IntervalIdeal& a) {
  IntervalPrimeCheck out;
  if (a.closed && a.theta == 0) return {true, std::nullopt};
  if (!a.closed && a.theta == 1) return {true, std::nullopt};
  require(a.theta > 0 && a.theta <= 1 && !(a.closed && a.theta == 1), ErrorKind::NotProper,
          a.format() + " is not a proper nonzero ideal");
  // Outside points near θ square back into the ideal; θ < √θ guarantees termination.
  for (long q = 2;; ++q) {
    Rational lo = a.theta * q;
    Integer p = Integer(lo.get_num() / lo.get_den());
    Rational x(p, Integer(q));
    x.canonicalize();
    if (a.contains(x)) {  // least p with p/q outside
      x = Rational(p + 1, Integer(q));
      x.canonicalize();
    }
    if (x < 1 && a.contains(x * x)) {
      out.witness = std::make_pair(x, x);
      return out;
    }
  }
}

IntervalIdeal radical(const IntervalIdeal& a) {
  require(!(a.closed && a.theta >= 1), ErrorKind::NotProper, a.format() + " is the whole carrier");
  if (a.closed && a.theta == 0) return a;
  return {Rational(1), false};
}

bool interval_related(const IntervalIdeal& a, const Rational& x, const Rational& y) {
  return x == y || (a.contains(x) && a.contains(y));
}

TruncatedInterval interval_quotient(const IntervalIdeal& a) { return TruncatedInterval(a.theta, a.closed); }

Rational interval_projection(const IntervalIdeal& a, const Rational& x) { return a.contains(x) ? Rational(0) : x; }

bool natural_in_saturated_maximal(const Integer& x) { return x < 1; }
bool natural_in_maximal(const Integer& x) { return x != 1; }

}  // namespace strop
