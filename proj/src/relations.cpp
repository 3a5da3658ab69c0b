#include "strop/relations.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "strop/ideals.hpp"

namespace strop {

namespace {

Flag fails(Witness w) { return Flag{false, std::move(w)}; }

// Key for Partition::kernel: a tag plus one or two indices.
using Key = std::tuple<int, Index>;

}  // namespace

Partition restrict_to_ghosts(const FiniteSupertropical& u, const Partition& e) {
  require(e.size() == u.size(), ErrorKind::Malformed, "relation size differs from carrier size");
  return e.restrict_to(u.ghosts());
}

RelationClassification classify_relation(const FiniteSupertropical& u, const Partition& e) {
  require(e.size() == u.size(), ErrorKind::Malformed, "relation size differs from carrier size");
  const std::size_t n = u.size();
  auto nm = [&](Index x) { return u.name(x); };
  RelationClassification c;

  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (!e.related(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (c.multiplicative.holds && !e.related(u.mul(x, z), u.mul(y, z)))
          c.multiplicative = fails({nm(x), nm(y), nm(z)});
        if (c.additive.holds && !e.related(u.add(x, z), u.add(y, z))) c.additive = fails({nm(x), nm(y), nm(z)});
      }
      Index ex = u.companion(x), ey = u.companion(y);
      if (c.ghost_compatible.holds && !e.related(ex, ey)) c.ghost_compatible = fails({nm(x), nm(y)});
      if (c.fiber_conserving.holds && ex != ey) c.fiber_conserving = fails({nm(x), nm(y)});
      if (c.strictly_ghost_separating.holds && u.is_tangible(x) && u.is_ghost(y))
        c.strictly_ghost_separating = fails({nm(x), nm(y)});
    }

  // AE3 over ordered pairs.
  for (Index x = 0; x < n && c.ae3.holds; ++x)
    for (Index y = 0; y < n; ++y) {
      Index ex = u.companion(x), ey = u.companion(y);
      if (u.compare_ghosts(ex, ey) < 0 && e.related(ex, ey) && !e.related(ex, y)) {
        c.ae3 = fails({nm(x), nm(y)});
        break;
      }
    }

  FiniteBipotent m = u.ghost_bipotent();
  Partition phi = restrict_to_ghosts(u, e);
  if (auto w = order_compatibility_violation(m, phi)) c.order_compatible_on_M = fails(*w);

  for (Index x = 0; x < n; ++x)
    if (e.related(u.companion(x), u.zero()) && !e.related(x, u.zero())) {
      c.te3 = fails({nm(x)});
      break;
    }

  if (!c.multiplicative.holds)
    c.te = c.multiplicative;
  else if (!c.order_compatible_on_M.holds)
    c.te = c.order_compatible_on_M;
  else if (!c.te3.holds)
    c.te = c.te3;

  // Ghost triples: xz ~ yz with z ≁ 0 forces x ~ y.
  const auto& g = u.ghosts();
  for (Index x : g) {
    for (Index y : g) {
      if (e.related(x, y)) continue;
      for (Index z : g) {
        if (e.related(z, u.zero())) continue;
        if (e.related(u.mul(x, z), u.mul(y, z))) {
          c.ghost_cancellative = fails({nm(x), nm(y), nm(z)});
          break;
        }
      }
      if (!c.ghost_cancellative.holds) break;
    }
    if (!c.ghost_cancellative.holds) break;
  }

  if (!c.additive.holds)
    c.homomorphic = c.additive;
  else if (!c.multiplicative.holds)
    c.homomorphic = c.multiplicative;
  return c;
}

// ---- builders ----

Partition rel_of_ideal(const FiniteSupertropical& u, const Subset& ideal) {
  Subset s = saturate(u, ideal);  // throws NotIdeal
  Partition fast = Partition::kernel(u.size(), [&](Index x) -> Key {
    return contains(s, x) ? Key{0, 0} : Key{1, x};
  });
  require(fast == rel_of_ideal_closure(u, ideal), ErrorKind::AxiomViolation,
          "saturation classes disagree with the closure of x+a = y+b");
  return fast;
}

Partition rel_of_ideal_closure(const FiniteSupertropical& u, const Subset& ideal) {
  require(is_ideal(u, ideal), ErrorKind::NotIdeal, format_subset(u, ideal) + " is not an ideal");
  DisjointSets ds(u.size());
  for (Index x = 0; x < u.size(); ++x)
    for (Index y = x + 1; y < u.size(); ++y)
      for (Index a : ideal)
        for (Index b : ideal)
          if (u.add(x, a) == u.add(y, b)) ds.unite(x, y);
  return ds.partition();
}

Partition rel_gamma_rule(const FiniteSupertropical& u, const FiniteGhostHom& gamma) {
  require(gamma.source == u.ghost_bipotent(), ErrorKind::Malformed, "gamma does not start at the ghost ideal");
  Index gz = gamma.target.zero();
  return Partition::kernel(u.size(), [&](Index x) -> Key {
    Index gx = gamma.map[u.ghost_rank(u.companion(x))];
    if (gx == gz) return {0, 0};
    if (u.is_ghost(x)) return {1, gx};
    return {2, x};
  });
}

Partition rel_initial_gamma(const FiniteSupertropical& u, const FiniteGhostHom& gamma) {
  validate_ghost_hom(gamma).throw_if_failed();
  require(is_surjective(gamma), ErrorKind::NotSurjective, "gamma is not surjective");
  auto canc = is_cancellative(gamma.target);
  if (!canc.cancellative) {
    const auto& w = *canc.witness;
    fail(ErrorKind::TargetNotCancellative, "target of gamma: " + gamma.target.name(w[0]) + "·" +
                                                gamma.target.name(w[2]) + " = " + gamma.target.name(w[1]) +
                                                "·" + gamma.target.name(w[2]));
  }
  return rel_gamma_rule(u, gamma);
}

Partition rel_orbital(const FiniteSupertropical& u, const Subset& h) {
  Subset s = mult_stabilizer(u);
  for (Index x : h) require(contains(s, x), ErrorKind::NotInStabilizer, u.name(x) + " does not stabilize tangibles");
  require(contains(h, u.one()), ErrorKind::NotSubmonoid, "H does not contain 1");
  for (Index x : h)
    for (Index y : h)
      require(contains(h, u.mul(x, y)), ErrorKind::NotSubmonoid, "H is not closed under products");
  // x ~ gx generates the relation: gx = hy gives x ~ gx = hy ~ y.
  DisjointSets ds(u.size());
  for (Index x = 0; x < u.size(); ++x)
    for (Index g : h) ds.unite(x, u.mul(g, x));
  return ds.partition();
}

Partition rel_from_ghost_data(const FiniteSupertropical& u, const Subset& big_a, const Partition& phi) {
  require(phi.size() == u.ghosts().size(), ErrorKind::Malformed, "phi is not a relation on the ghost ideal");
  for (Index g : u.ghosts())
    require(contains(big_a, g), ErrorKind::GhostsNotContained, "ghost " + u.name(g) + " is missing from the set");
  return Partition::kernel(u.size(), [&](Index x) -> Key {
    if (!contains(big_a, x)) return {1, x};
    return {0, phi.class_of(u.ghost_rank(u.companion(x)))};
  });
}

Partition rel_t_collapse(const FiniteSupertropical& u, const Subset& ideal) {
  for (Index a : ideal) require(u.is_ghost(a), ErrorKind::NotIdeal, u.name(a) + " is not a ghost");
  require(contains(ideal, u.zero()), ErrorKind::NotIdeal, "ideal of M must contain 0");
  for (Index a : ideal)
    for (Index g : u.ghosts())
      require(contains(ideal, u.mul(a, g)), ErrorKind::NotIdeal, "not an ideal of M");
  for (Index x : u.tangibles())
    for (Index y : u.tangibles()) {
      Index xy = u.mul(x, y);
      require(xy == u.zero() || u.is_tangible(xy), ErrorKind::TangiblesNotClosed,
              u.name(x) + "·" + u.name(y) + " = " + u.name(xy));
    }
  return Partition::kernel(u.size(), [&](Index x) -> Key {
    if (u.is_tangible(x) && contains(ideal, u.companion(x))) return {0, u.companion(x)};
    return {1, x};
  });
}

Partition mfce_closure(const FiniteSupertropical& u, const std::vector<std::pair<Index, Index>>& pairs) {
  const std::size_t n = u.size();
  DisjointSets ds(n);
  for (auto [x, y] : pairs) {
    require(x < n && y < n, ErrorKind::ForeignElement, "pair leaves the carrier");
    ds.unite(x, y);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index x = 0; x < n; ++x)
      for (Index y = x + 1; y < n; ++y) {
        if (ds.find(x) != ds.find(y)) continue;
        for (Index z = 0; z < n; ++z)
          if (ds.unite(u.mul(x, z), u.mul(y, z))) changed = true;
      }
  }
  Partition p = ds.partition();
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y)
      if (p.related(x, y) && u.companion(x) != u.companion(y))
        fail(ErrorKind::FiberViolation, u.name(x) + " ~ " + u.name(y) + " lie in different fibers");
  return p;
}

Partition mfce_closure(const FiniteSupertropical& u, const Subset& x) {
  std::vector<std::pair<Index, Index>> pairs;
  for (Index v : x) pairs.emplace_back(v, u.companion(v));
  return mfce_closure(u, pairs);
}

Partition mfce_idempotent(const FiniteSupertropical& u, Index f) {
  require(u.mul(f, f) == f, ErrorKind::AxiomViolation, u.name(f) + " is not idempotent");
  Subset fu;
  for (Index x = 0; x < u.size(); ++x) fu = subset_union(fu, {u.mul(f, x)});
  return Partition::kernel(u.size(), [&](Index x) -> Key {
    if (contains(fu, x)) return {0, u.companion(x)};
    return {1, x};
  });
}

// ---- additive data ----

Subset L_of_phi(const FiniteBipotent& m, const Partition& phi) {
  Subset out;
  for (Index x = 0; x < m.size(); ++x) {
    if (x == m.zero()) continue;
    bool least = true;
    for (Index y = 0; y < m.size(); ++y)
      if (phi.related(x, y) && !m.leq(x, y)) least = false;
    if (least) out.push_back(x);
  }
  return out;
}

Partition additive_from_data(const FiniteSupertropical& u, const AdditiveData& data) {
  FiniteBipotent m = u.ghost_bipotent();
  require(data.phi.size() == m.size(), ErrorKind::Malformed, "phi is not a relation on the ghost ideal");
  if (auto w = order_compatibility_violation(m, data.phi)) fail(ErrorKind::PhiNotOrderCompatible, "phi is not convex");
  Subset L = L_of_phi(m, data.phi);
  std::map<Index, std::pair<Subset, Partition>> fib;  // U index of a -> (U_a, E_a)
  for (const auto& [a, p] : data.fibers) {
    require(a < u.size() && u.is_ghost(a) && contains(L, u.ghost_rank(a)), ErrorKind::FiberMismatch,
            "fiber relation given outside L(phi)");
    Subset f = u.fiber(a);
    require(p.size() == f.size(), ErrorKind::FiberMismatch, "fiber relation over " + u.name(a) + " has wrong size");
    fib[a] = {f, p};
  }
  require(fib.size() == L.size(), ErrorKind::FiberMismatch, "a fiber relation is missing");

  auto in_fiber = [&](Index a, Index x, Index y) {
    const auto& [f, p] = fib.at(a);
    std::size_t i = 0, j = 0;
    while (f[i] != x) ++i;
    while (f[j] != y) ++j;
    return p.related(i, j);
  };
  auto related = [&](Index x, Index y) {
    Index ex = u.companion(x), ey = u.companion(y);
    if (u.compare_ghosts(ex, ey) > 0) {
      std::swap(x, y);
      std::swap(ex, ey);
    }
    std::size_t rx = u.ghost_rank(ex), ry = u.ghost_rank(ey);
    if (!contains(L, rx)) return data.phi.related(rx, ry);
    if (rx < ry) return data.phi.related(rx, ry) && in_fiber(ex, x, ex);
    return in_fiber(ex, x, y);
  };
  const std::size_t n = u.size();
  DisjointSets ds(n);
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y)
      if (related(x, y)) ds.unite(x, y);
  Partition p = ds.partition();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      require(p.related(x, y) == related(x, y), ErrorKind::AxiomViolation,
              "case rule is not transitive at " + u.name(x) + ", " + u.name(y));
  return p;
}

AdditiveData additive_to_data(const FiniteSupertropical& u, const Partition& e) {
  auto c = classify_relation(u, e);
  require(c.additive.holds, ErrorKind::AxiomViolation, "relation is not additive");
  AdditiveData d;
  d.phi = restrict_to_ghosts(u, e);
  for (Index r : L_of_phi(u.ghost_bipotent(), d.phi)) {
    Index a = u.ghost_at(r);
    d.fibers.emplace_back(a, e.restrict_to(u.fiber(a)));
  }
  return d;
}

// ---- derived ----

Partition quotient_relation(const Partition& e, const Partition& f) {
  require(e.size() == f.size(), ErrorKind::Malformed, "relations over different carriers");
  require(e.refines(f), ErrorKind::NotRefinement, "first relation does not refine the second");
  std::vector<std::size_t> labels(e.num_classes());
  for (Index x = 0; x < e.size(); ++x) labels[e.class_of(x)] = f.class_of(x);
  return Partition::from_labels(labels);
}

Subset A_of(const FiniteSupertropical& u, const Partition& e) {
  Subset out;
  for (Index x = 0; x < u.size(); ++x)
    if (e.related(x, u.companion(x))) out.push_back(x);
  return out;
}

Subset A_of_ghost_form(const FiniteSupertropical& u, const Partition& e) {
  Subset out;
  for (Index x = 0; x < u.size(); ++x)
    for (Index g : u.ghosts())
      if (e.related(x, g)) {
        out.push_back(x);
        break;
      }
  return out;
}

Partition relation_from_names(const FiniteSupertropical& u, const std::vector<std::vector<std::string>>& blocks) {
  std::vector<Subset> idx;
  std::vector<bool> seen(u.size(), false);
  for (const auto& b : blocks) {
    Subset s;
    for (const auto& name : b) {
      Index x = u.index_of(name);
      require(!seen[x], ErrorKind::Malformed, name + " appears in two blocks");
      seen[x] = true;
      s.push_back(x);
    }
    std::sort(s.begin(), s.end());
    idx.push_back(s);
  }
  for (Index x = 0; x < u.size(); ++x) require(seen[x], ErrorKind::Malformed, u.name(x) + " is in no block");
  return Partition::from_blocks(u.size(), idx);
}

}  // namespace strop
