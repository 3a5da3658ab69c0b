#include "strop/valuations.hpp"

#include <algorithm>

#include "strop/relations.hpp"

namespace strop {

// ---- finite rings ----

Index FiniteRing::index_of(const std::string& name) const {
  for (Index i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  fail(ErrorKind::ForeignElement, "no ring element named '" + name + "'");
}

FiniteRing FiniteRing::zmod(std::size_t n) {
  require(n >= 2, ErrorKind::Malformed, "Z/n needs n >= 2");
  FiniteRing r;
  for (std::size_t a = 0; a < n; ++a) r.names.push_back(std::to_string(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      r.add.push_back((a + b) % n);
      r.mul.push_back((a * b) % n);
    }
  r.zero = 0;
  r.one = 1;
  return r;
}

ValidationReport validate_ring(const FiniteRing& r) {
  ValidationReport rep;
  rep.subject = "finite ring";
  const std::size_t n = r.size();
  require(r.add.size() == n * n && r.mul.size() == n * n, ErrorKind::Malformed, "ring tables are not square");
  auto nm = [&](Index a) { return r.names[a]; };
  std::optional<Witness> w[7];
  for (Index a = 0; a < n; ++a) {
    if (!w[2] && r.sum(a, r.zero) != a) w[2] = Witness{nm(a)};
    if (!w[5] && r.prod(a, r.one) != a) w[5] = Witness{nm(a)};
    bool has_neg = false;
    for (Index b = 0; b < n; ++b) {
      if (r.sum(a, b) == r.zero) has_neg = true;
      if (!w[0] && r.sum(a, b) != r.sum(b, a)) w[0] = Witness{nm(a), nm(b)};
      if (!w[3] && r.prod(a, b) != r.prod(b, a)) w[3] = Witness{nm(a), nm(b)};
      for (Index c = 0; c < n; ++c) {
        if (!w[1] && r.sum(r.sum(a, b), c) != r.sum(a, r.sum(b, c))) w[1] = Witness{nm(a), nm(b), nm(c)};
        if (!w[4] && r.prod(r.prod(a, b), c) != r.prod(a, r.prod(b, c))) w[4] = Witness{nm(a), nm(b), nm(c)};
        if (!w[6] && r.prod(a, r.sum(b, c)) != r.sum(r.prod(a, b), r.prod(a, c))) w[6] = Witness{nm(a), nm(b), nm(c)};
      }
    }
    if (!has_neg && !w[2]) w[2] = Witness{nm(a)};
  }
  const char* names[] = {"add commutative", "add associative", "additive group", "mul commutative",
                         "mul associative", "mul identity",    "distributive"};
  for (int i = 0; i < 7; ++i) rep.record(names[i], n * n * n, w[i], ErrorKind::LawViolation);
  return rep;
}

// ---- m-valuations ----

ValidationReport validate_m_valuation(const FiniteMValuation& v) {
  const auto& r = v.ring;
  const auto& m = v.target;
  require(v.map.size() == r.size(), ErrorKind::Malformed, "valuation is not total on the ring");
  for (Index x : v.map) require(x < m.size(), ErrorKind::ForeignElement, "valuation leaves its target");
  ValidationReport rep;
  rep.subject = "m-valuation";
  auto nm = [&](Index a) { return r.names[a]; };
  std::optional<Witness> zero_w, one_w, mul_w, sub_w;
  if (v.map[r.zero] != m.zero()) zero_w = Witness{nm(r.zero)};
  if (v.map[r.one] != m.one()) one_w = Witness{nm(r.one)};
  for (Index a = 0; a < r.size(); ++a)
    for (Index b = 0; b < r.size(); ++b) {
      if (!mul_w && v.map[r.prod(a, b)] != m.mul(v.map[a], v.map[b])) mul_w = Witness{nm(a), nm(b)};
      if (!sub_w && !m.leq(v.map[r.sum(a, b)], m.add(v.map[a], v.map[b]))) sub_w = Witness{nm(a), nm(b)};
    }
  rep.record("v(0) = 0", 1, zero_w, ErrorKind::LawViolation);
  rep.record("v(1) = 1", 1, one_w, ErrorKind::LawViolation);
  rep.record("multiplicative", r.size() * r.size(), mul_w, ErrorKind::LawViolation);
  rep.record("subadditive", r.size() * r.size(), sub_w, ErrorKind::LawViolation);
  return rep;
}

Subset support(const FiniteMValuation& v) {
  Subset s;
  for (Index a = 0; a < v.ring.size(); ++a)
    if (v.map[a] == v.target.zero()) s.push_back(a);
  return s;
}

bool support_is_prime(const FiniteMValuation& v) {
  Subset q = support(v);
  if (contains(q, v.ring.one)) return false;
  for (Index a = 0; a < v.ring.size(); ++a)
    for (Index b = 0; b < v.ring.size(); ++b)
      if (!contains(q, a) && !contains(q, b) && contains(q, v.ring.prod(a, b))) return false;
  return true;
}

bool is_valuation(const FiniteMValuation& v) { return is_cancellative(v.target).cancellative; }

FiniteMValuation compose(const FiniteGhostHom& gamma, const FiniteMValuation& v) {
  require(gamma.source == v.target, ErrorKind::Malformed, "gamma does not start at the value carrier");
  FiniteMValuation out{v.ring, gamma.target, {}};
  for (Index x : v.map) out.map.push_back(gamma.map[x]);
  return out;
}

// ---- supervaluations ----

FiniteMValuation covered_valuation(const FiniteSupervaluation& phi) {
  FiniteMValuation v{phi.ring, phi.target.ghost_bipotent(), {}};
  for (Index x : phi.map) v.map.push_back(phi.target.ghost_rank(phi.target.companion(x)));
  return v;
}

ValidationReport validate_supervaluation(const FiniteSupervaluation& phi) {
  const auto& r = phi.ring;
  const auto& u = phi.target;
  require(phi.map.size() == r.size(), ErrorKind::Malformed, "supervaluation is not total on the ring");
  for (Index x : phi.map) require(x < u.size(), ErrorKind::ForeignElement, "supervaluation leaves its target");
  ValidationReport rep;
  rep.subject = "supervaluation";
  auto nm = [&](Index a) { return r.names[a]; };
  std::optional<Witness> zero_w, one_w, mul_w, cov_w;
  if (phi.map[r.zero] != u.zero()) zero_w = Witness{nm(r.zero)};
  if (phi.map[r.one] != u.one()) one_w = Witness{nm(r.one)};
  for (Index a = 0; a < r.size() && !mul_w; ++a)
    for (Index b = 0; b < r.size(); ++b)
      if (phi.map[r.prod(a, b)] != u.mul(phi.map[a], phi.map[b])) {
        mul_w = Witness{nm(a), nm(b)};
        break;
      }
  if (auto f = validate_m_valuation(covered_valuation(phi)).first_failure()) {
    cov_w = f->witness;
    cov_w->insert(cov_w->begin(), f->axiom);
  }
  rep.record("phi(0) = 0", 1, zero_w, ErrorKind::LawViolation);
  rep.record("phi(1) = 1", 1, one_w, ErrorKind::LawViolation);
  rep.record("multiplicative", r.size() * r.size(), mul_w, ErrorKind::LawViolation);
  rep.record("e phi is an m-valuation", r.size() * r.size(), cov_w, ErrorKind::LawViolation);
  return rep;
}

bool is_surjective(const FiniteSupervaluation& phi) {
  std::vector<bool> hit(phi.target.size(), false);
  for (Index x : phi.map) {
    hit[x] = true;
    hit[phi.target.companion(x)] = true;
  }
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

bool is_tangible(const FiniteSupervaluation& phi) {
  for (Index x : phi.map)
    if (x != phi.target.zero() && phi.target.is_ghost(x)) return false;
  return true;
}

FiniteSupervaluation compose(const FiniteTransmission& alpha, const FiniteSupervaluation& phi) {
  require(alpha.source == phi.target, ErrorKind::Malformed, "transmission does not start at the value carrier");
  FiniteSupervaluation out{phi.ring, alpha.target, {}};
  for (Index x : phi.map) out.map.push_back(alpha.map[x]);
  return out;
}

FiniteSupervaluation as_supervaluation(const FiniteMValuation& v) {
  FiniteSupervaluation out{v.ring, FiniteSupertropical::ghost_only(v.target), {}};
  for (Index x : v.map) out.map.push_back(v.target.rank(x));
  return out;
}

Cover construct_cover(const FiniteMValuation& v) {
  validate_m_valuation(v).throw_if_failed();
  require(is_valuation(v), ErrorKind::TargetNotCancellative, "the value carrier is not cancellative");
  const auto& r = v.ring;
  const auto& m = v.target;
  const Subset q = support(v);
  const std::size_t gm = m.size();
  std::vector<std::string> names;
  for (Index k = 0; k < gm; ++k) names.push_back(k == 0 ? "0" : m.name(m.at_rank(k)) + "g");
  std::vector<Index> tangible_of(r.size(), 0), ring_of;
  for (Index a = 0; a < r.size(); ++a)
    if (!contains(q, a)) {
      tangible_of[a] = names.size();
      names.push_back(r.names[a] + "^");
      ring_of.push_back(a);
    }
  const std::size_t n = names.size();
  // ν on the new indices as a rank of M.
  auto ghost_rank_of = [&](Index x) { return x < gm ? x : m.rank(v.map[ring_of[x - gm]]); };
  std::vector<Index> table(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      Index& cell = table[x * n + y];
      if (x >= gm && y >= gm) {
        Index p = r.prod(ring_of[x - gm], ring_of[y - gm]);
        cell = contains(q, p) ? 0 : tangible_of[p];
      } else {
        cell = m.rank(m.mul(m.at_rank(ghost_rank_of(x)), m.at_rank(ghost_rank_of(y))));
      }
    }
  std::vector<Index> ghosts(gm);
  for (Index k = 0; k < gm; ++k) ghosts[k] = k;
  Cover c;
  c.carrier = FiniteSupertropical(names, table, m.rank(m.one()), tangible_of[r.one], ghosts);
  validate_supertropical(c.carrier).throw_if_failed();
  c.phi = FiniteSupervaluation{r, c.carrier, {}};
  for (Index a = 0; a < r.size(); ++a) c.phi.map.push_back(contains(q, a) ? 0 : tangible_of[a]);
  validate_supervaluation(c.phi).throw_if_failed();
  return c;
}

FiniteSupervaluation hat_cover(const FiniteMValuation& v) {
  FiniteSupertropical d = tangible_double(v.target);
  std::vector<Index> over(d.ghosts().size(), 0);  // ghost rank -> tangible above it
  for (Index x : d.tangibles()) over[d.ghost_rank(d.companion(x))] = x;
  FiniteSupervaluation out{v.ring, d, {}};
  for (Index a : v.map) out.map.push_back(a == v.target.zero() ? d.zero() : over[v.target.rank(a)]);
  return out;
}

DominanceResult dominance(const FiniteSupervaluation& phi, const FiniteSupervaluation& psi) {
  require(phi.ring == psi.ring, ErrorKind::Malformed, "supervaluations on different rings");
  require(is_surjective(phi), ErrorKind::NotSurjective, "the dominating supervaluation is not surjective");
  const auto& u = phi.target;
  const auto& w = psi.target;
  constexpr Index unset = static_cast<Index>(-1);
  std::vector<Index> a(u.size(), unset);
  DominanceResult out;
  auto assign = [&](Index x, Index y) {
    if (a[x] != unset && a[x] != y) {
      out.obstruction = {u.name(x), w.name(a[x]), w.name(y)};
      return false;
    }
    a[x] = y;
    return true;
  };
  for (Index r = 0; r < phi.ring.size(); ++r) {
    if (!assign(phi.map[r], psi.map[r])) return out;
    if (!assign(u.companion(phi.map[r]), w.companion(psi.map[r]))) return out;
  }
  FiniteTransmission t{u, w, a};
  auto rep = validate_transmission(t);
  if (auto f = rep.first_failure()) {
    out.obstruction = f->witness;
    out.obstruction.insert(out.obstruction.begin(), f->axiom);
    return out;
  }
  out.alpha = t;
  return out;
}

UnitData unit_data(const FiniteMValuation& v) {
  const auto& r = v.ring;
  Subset q = support(v);
  for (Index a = 0; a < r.size(); ++a) {
    if (contains(q, a)) continue;
    bool inv = false;
    for (Index b = 0; b < r.size(); ++b)
      if (r.prod(a, b) == r.one) inv = true;
    require(inv, ErrorKind::NotGroupLike, r.names[a] + " has no inverse");
  }
  UnitData d;
  for (Index a = 0; a < r.size(); ++a) {
    if (v.map[a] == v.target.one()) d.units.push_back(a);
    if (v.target.rank(v.map[a]) < v.target.rank(v.target.one())) d.maximal.push_back(a);
  }
  return d;
}

FiniteSupervaluation pushout_supervaluation(const FiniteSupervaluation& phi, const FiniteGhostHom& gamma) {
  InitialTransmission init = initial_transmission(phi.target, gamma);
  return compose(init.alpha, phi);
}

std::optional<Witness> pushout_value_violation(const InitialTransmission& init, const FiniteSupertropical& u,
                                               const FiniteGhostHom& gamma) {
  const auto& a = init.alpha.map;
  const auto& t = init.carrier;
  for (Index x = 0; x < u.size(); ++x) {
    Index gx = gamma.map[u.ghost_rank(u.companion(x))];
    if (u.is_ghost(x)) {
      if (a[x] != init.ghost_index[gx]) return Witness{u.name(x)};
    } else if (gx == gamma.target.zero()) {
      if (a[x] != t.zero()) return Witness{u.name(x)};
    } else {
      if (!t.is_tangible(a[x])) return Witness{u.name(x)};
      for (Index y = 0; y < u.size(); ++y)
        if (y != x && a[y] == a[x]) return Witness{u.name(x), u.name(y)};
    }
  }
  return std::nullopt;
}

FiniteSupervaluation t_collapse(const FiniteSupervaluation& phi, const Subset& ideal) {
  QuotientResult q = t_collapse_map(phi.target, ideal);
  require(q.transmissive, ErrorKind::AxiomViolation, "t-collapse is not transmissive: " + q.failed);
  return compose(q.pi, phi);
}

std::vector<FiniteSupervaluation> tangible_covers(const FiniteMValuation& v) {
  Cover c = construct_cover(v);
  std::vector<FiniteSupervaluation> out;
  for_each_partition(c.carrier.size(), [&](const Partition& p) {
    auto cls = classify_relation(c.carrier, p);
    if (!cls.multiplicative.holds || !cls.fiber_conserving.holds || !cls.strictly_ghost_separating.holds) return;
    QuotientResult q = quotient_by_relation(c.carrier, p);
    if (!q.transmissive) return;
    FiniteSupervaluation psi = compose(q.pi, c.phi);
    for (const auto& o : out)
      if (equivalent(o, psi)) return;
    out.push_back(std::move(psi));
  });
  return out;
}

bool equivalent(const FiniteSupervaluation& a, const FiniteSupervaluation& b) {
  return dominance(a, b).alpha.has_value() && dominance(b, a).alpha.has_value();
}

// ---- rule valuations ----

RuleValuation<RationalField, RationalMaxPlus> padic_valuation(unsigned long p) {
  return {RationalField{}, RationalMaxPlus{},
          [p](const Rational& a) -> std::optional<Rational> {
            if (a == 0) return std::nullopt;
            return Rational(-ord_p(a, p));
          },
          std::to_string(p) + "-adic"};
}

RuleValuation<RationalFunctionField, LexPower> laurent_rank2_valuation() {
  return {RationalFunctionField{}, LexPower(2),
          [](const RatFunc& f) -> LexPower::value_type {
            if (f.is_zero()) return std::nullopt;
            long k = static_cast<long>(f.den().ord_t()) - static_cast<long>(f.num().ord_t());
            long j = ord_p(f.num().lowest(), 2) - ord_p(f.den().lowest(), 2);
            return std::vector<Rational>{Rational(k), Rational(-j)};
          },
          "rank-2 Laurent"};
}

}  // namespace strop
