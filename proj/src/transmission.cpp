#include "strop/transmission.hpp"

#include <algorithm>
#include <numeric>

namespace strop {

ValidationReport validate_transmission(const FiniteTransmission& a) {
  const auto& u = a.source;
  const auto& v = a.target;
  require(a.map.size() == u.size(), ErrorKind::Malformed, "map is not total on the source");
  for (Index y : a.map) require(y < v.size(), ErrorKind::ForeignElement, "map leaves the target");
  ValidationReport rep;
  rep.subject = "transmission";
  auto nm = [&](Index x) { return u.name(x); };
  std::optional<Witness> zero_w, one_w, mul_w, e_w;
  if (a.map[u.zero()] != v.zero()) zero_w = Witness{nm(u.zero())};
  if (a.map[u.one()] != v.one()) one_w = Witness{nm(u.one())};
  if (a.map[u.e()] != v.e()) e_w = Witness{nm(u.e())};
  for (Index x = 0; x < u.size() && !mul_w; ++x)
    for (Index y = 0; y < u.size(); ++y)
      if (a.map[u.mul(x, y)] != v.mul(a.map[x], a.map[y])) {
        mul_w = Witness{nm(x), nm(y)};
        break;
      }
  rep.record("zero", 1, zero_w);
  rep.record("one", 1, one_w);
  rep.record("multiplicative", u.size() * u.size(), mul_w);
  rep.record("e to e", 1, e_w);
  std::optional<Witness> ghost_w;
  for (Index g : u.ghosts())
    if (!ghost_w && !v.is_ghost(a.map[g])) ghost_w = Witness{nm(g)};
  if (!ghost_w) {
    ValidationReport gh = validate_ghost_hom(ghost_part(a));
    if (auto f = gh.first_failure()) ghost_w = f->witness;
  }
  rep.record("ghost part is a homomorphism", u.ghosts().size(), ghost_w);
  return rep;
}

std::optional<std::array<Index, 2>> additivity_violation(const FiniteTransmission& a) {
  for (Index x = 0; x < a.source.size(); ++x)
    for (Index y = 0; y < a.source.size(); ++y)
      if (a.map[a.source.add(x, y)] != a.target.add(a.map[x], a.map[y])) return std::array<Index, 2>{x, y};
  return std::nullopt;
}

FiniteGhostHom ghost_part(const FiniteTransmission& a) {
  FiniteGhostHom g;
  g.source = a.source.ghost_bipotent();
  g.target = a.target.ghost_bipotent();
  for (Index r = 0; r < g.source.size(); ++r) {
    Index y = a.map[a.source.ghost_at(r)];
    require(a.target.is_ghost(y), ErrorKind::NotHomomorphism,
            "ghost " + a.source.name(a.source.ghost_at(r)) + " maps to tangible " + a.target.name(y));
    g.map.push_back(a.target.ghost_rank(y));
  }
  return g;
}

FiniteTransmission identity_transmission(const FiniteSupertropical& u) {
  FiniteTransmission t{u, u, std::vector<Index>(u.size())};
  std::iota(t.map.begin(), t.map.end(), 0);
  return t;
}

FiniteTransmission compose(const FiniteTransmission& second, const FiniteTransmission& first) {
  require(first.target == second.source, ErrorKind::Malformed, "transmissions do not compose");
  FiniteTransmission t{first.source, second.target, {}};
  for (Index y : first.map) t.map.push_back(second.map[y]);
  return t;
}

bool is_surjective(const FiniteTransmission& a) {
  std::vector<bool> hit(a.target.size(), false);
  for (Index y : a.map) hit[y] = true;
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

bool is_bijective(const FiniteTransmission& a) {
  return a.source.size() == a.target.size() && is_surjective(a);
}

Partition kernel(const FiniteTransmission& a) { return Partition::from_labels(a.map); }

FiniteTransmission ghost_map(const FiniteSupertropical& u) {
  FiniteTransmission t{u, FiniteSupertropical::ghost_only(u.ghost_bipotent()), {}};
  for (Index x = 0; x < u.size(); ++x) t.map.push_back(u.ghost_rank(u.companion(x)));
  return t;
}

}  // namespace strop
