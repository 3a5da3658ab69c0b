#include "strop/quotient.hpp"

#include <algorithm>
#include <numeric>

#include "strop/ideals.hpp"
#include "strop/relations.hpp"

namespace strop {

namespace {

constexpr Index kUnset = static_cast<Index>(-1);

std::string class_name(const FiniteSupertropical& u, const Subset& block) {
  if (block.size() == 1) return u.name(block[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < block.size(); ++i) s += (i ? "," : "") + u.name(block[i]);
  return s + "]";
}

QuotientResult refuse(QuotientResult r, std::string axiom, Witness w) {
  r.transmissive = false;
  r.failed = std::move(axiom);
  r.witness = std::move(w);
  return r;
}

}  // namespace

FiniteSupertropical rename(const FiniteSupertropical& u, std::vector<std::string> names) {
  require(names.size() == u.size(), ErrorKind::Malformed, "wrong number of names");
  for (std::size_t i = 0; i < names.size(); ++i)
    while (std::find(names.begin(), names.begin() + i, names[i]) != names.begin() + i) names[i] += "'";
  return FiniteSupertropical(std::move(names), u.table(), u.e(), u.one(), u.ghosts());
}

QuotientResult quotient_by_relation(const FiniteSupertropical& u, const Partition& e) {
  require(e.size() == u.size(), ErrorKind::Malformed, "relation size differs from carrier size");
  QuotientResult r;
  r.relation = e;
  auto c = classify_relation(u, e);
  if (!c.multiplicative.holds) return refuse(r, "TE1 multiplicative", c.multiplicative.witness);
  if (!c.order_compatible_on_M.holds) return refuse(r, "TE2 order compatible on M", c.order_compatible_on_M.witness);
  if (!c.te3.holds) return refuse(r, "TE3 ghost zero pulls back to zero", c.te3.witness);

  BipotentQuotient gq = quotient_bipotent(u.ghost_bipotent(), restrict_to_ghosts(u, e));
  auto blocks = e.blocks();
  std::vector<Index> new_of_class(blocks.size(), kUnset);
  std::vector<Index> class_of_new;
  std::vector<Index> ghosts;
  // Ghost classes in the order of M/Φ.
  for (Index phi_class : gq.carrier.order()) {
    for (Index rk = 0; rk < gq.projection.size(); ++rk)
      if (gq.projection[rk] == phi_class) {
        Index cls = e.class_of(u.ghost_at(rk));
        new_of_class[cls] = class_of_new.size();
        ghosts.push_back(class_of_new.size());
        class_of_new.push_back(cls);
        break;
      }
  }
  for (Index cls = 0; cls < blocks.size(); ++cls)
    if (new_of_class[cls] == kUnset) {
      new_of_class[cls] = class_of_new.size();
      class_of_new.push_back(cls);
    }
  const std::size_t k = class_of_new.size();
  auto nw = [&](Index x) { return new_of_class[e.class_of(x)]; };
  std::vector<std::string> names(k);
  std::vector<Index> table(k * k);
  for (Index i = 0; i < k; ++i) {
    const Subset& bi = blocks[class_of_new[i]];
    names[i] = class_name(u, bi);
    for (Index j = 0; j < k; ++j) table[i * k + j] = nw(u.mul(bi[0], blocks[class_of_new[j]][0]));
  }
  try {
    r.carrier = FiniteSupertropical(names, table, nw(u.e()), nw(u.one()), ghosts);
  } catch (const Error& err) {
    return refuse(r, "quotient carrier well formed", {err.detail()});
  }
  if (auto f = validate_supertropical(r.carrier).first_failure()) return refuse(r, "quotient: " + f->axiom, f->witness);
  r.pi = FiniteTransmission{u, r.carrier, {}};
  for (Index x = 0; x < u.size(); ++x) r.pi.map.push_back(nw(x));
  if (auto f = validate_transmission(r.pi).first_failure()) return refuse(r, "projection: " + f->axiom, f->witness);
  r.transmissive = true;
  return r;
}

// ---- initial transmissions ----

ImageFactorization factor_through_image(const FiniteGhostHom& gamma) {
  const FiniteBipotent& n = gamma.target;
  Subset img;
  for (Index y : gamma.map) img.push_back(y);
  std::sort(img.begin(), img.end(), [&](Index a, Index b) { return n.rank(a) < n.rank(b); });
  img.erase(std::unique(img.begin(), img.end()), img.end());
  auto pos = [&](Index y) { return static_cast<Index>(std::find(img.begin(), img.end(), y) - img.begin()); };
  const std::size_t k = img.size();
  std::vector<std::string> names;
  std::vector<Index> table(k * k), order(k);
  for (Index i = 0; i < k; ++i) {
    names.push_back(n.name(img[i]));
    order[i] = i;
    for (Index j = 0; j < k; ++j) {
      Index p = pos(n.mul(img[i], img[j]));
      require(p < k, ErrorKind::NotHomomorphism, "image of gamma is not closed under products");
      table[i * k + j] = p;
    }
  }
  FiniteBipotent im(names, table, order, pos(n.one()));
  ImageFactorization f{FiniteGhostHom{gamma.source, im, {}, true}, FiniteGhostHom{im, n, img, false}};
  for (Index y : gamma.map) f.onto.map.push_back(pos(y));
  return f;
}

namespace {

// Surjective γ onto a cancellative target, or the enumeration fallback.
InitialTransmission initial_surjective(const FiniteSupertropical& u, const FiniteGhostHom& gamma, bool search) {
  Partition e;
  if (!search) {
    e = rel_initial_gamma(u, gamma);
  } else {
    require(u.size() <= 8, ErrorKind::UnsupportedGamma, "enumeration fallback is limited to 8 elements");
    Partition k = kernel(gamma);
    std::optional<Partition> meet;
    for_each_partition(u.size(), [&](const Partition& p) {
      if (restrict_to_ghosts(u, p) != k) return;
      if (!quotient_by_relation(u, p).transmissive) return;
      meet = meet ? meet->meet(p) : p;
    });
    require(meet.has_value(), ErrorKind::UnsupportedGamma, "no transmission covers gamma");
    e = *meet;
  }
  QuotientResult q = quotient_by_relation(u, e);
  require(q.transmissive, search ? ErrorKind::UnsupportedGamma : ErrorKind::AxiomViolation,
          "relation for gamma is not transmissive: " + q.failed);
  InitialTransmission out;
  out.path = search ? "search" : "surjective";
  out.ghost_index.assign(gamma.target.size(), kUnset);
  for (Index r = 0; r < gamma.map.size(); ++r) out.ghost_index[gamma.map[r]] = q.pi.map[u.ghost_at(r)];
  std::vector<std::string> names = q.carrier.names();
  for (Index y = 0; y < gamma.target.size(); ++y) names[out.ghost_index[y]] = gamma.target.name(y);
  // Tangible names yield on a clash with a ghost name.
  for (Index x : q.carrier.tangibles())
    while (std::count(names.begin(), names.end(), names[x]) > 1) names[x] += "'";
  out.carrier = rename(q.carrier, names);
  out.alpha = FiniteTransmission{u, out.carrier, q.pi.map};
  return out;
}

}  // namespace

InitialTransmission initial_transmission(const FiniteSupertropical& u, const FiniteGhostHom& gamma) {
  require(gamma.source == u.ghost_bipotent(), ErrorKind::Malformed, "gamma does not start at the ghost ideal");
  validate_ghost_hom(gamma).throw_if_failed();
  ImageFactorization f = factor_through_image(gamma);
  bool onto = is_surjective(gamma);
  if (is_cancellative(f.onto.target).cancellative) {
    if (onto) return initial_surjective(u, gamma, false);
    InitialTransmission s = initial_surjective(u, f.onto, false);
    FiniteGhostHom inc{s.carrier.ghost_bipotent(), gamma.target, {}, false};
    for (Index r = 0; r < s.carrier.ghosts().size(); ++r) {
      Index g = s.carrier.ghost_at(r);
      Index i = static_cast<Index>(std::find(s.ghost_index.begin(), s.ghost_index.end(), g) - s.ghost_index.begin());
      inc.map.push_back(f.inclusion.map[i]);
    }
    GhostExtension ext = ghost_extension(s.carrier, inc);
    InitialTransmission out;
    out.path = "composite";
    out.carrier = ext.carrier;
    out.ghost_index = ext.ghost_index;
    out.alpha = FiniteTransmission{u, ext.carrier, {}};
    for (Index x = 0; x < u.size(); ++x) out.alpha.map.push_back(ext.inclusion[s.alpha.map[x]]);
    return out;
  }
  if (is_injective(gamma)) {
    GhostExtension ext = ghost_extension(u, gamma);
    InitialTransmission out;
    out.path = "extension";
    out.carrier = ext.carrier;
    out.ghost_index = ext.ghost_index;
    out.alpha = FiniteTransmission{u, ext.carrier, ext.inclusion};
    return out;
  }
  require(onto, ErrorKind::UnsupportedGamma, "gamma is neither surjective nor injective and its image is not cancellative");
  return initial_surjective(u, gamma, true);
}

// ---- pushout verification ----

bool PushoutReport::ok() const { return failures() == 0; }

std::size_t PushoutReport::failures() const {
  return std::count_if(outcomes.begin(), outcomes.end(), [](const ChallengeOutcome& c) { return !c.ok(); });
}

PushoutReport verify_pushout(const FiniteTransmission& alpha, const std::vector<PushoutChallenge>& challenges) {
  const auto& u = alpha.source;
  const auto& v = alpha.target;
  std::vector<Index> pre(v.size(), kUnset);
  for (Index x = 0; x < u.size(); ++x)
    if (pre[alpha.map[x]] == kUnset) pre[alpha.map[x]] = x;
  // Elements off the image must be ghosts; η is then forced to be δ there.
  for (Index y = 0; y < v.size(); ++y)
    require(pre[y] != kUnset || v.is_ghost(y), ErrorKind::NotSurjective,
            "tangible " + v.name(y) + " is not in the image, so eta is not forced");
  FiniteGhostHom anu = ghost_part(alpha);
  PushoutReport rep;
  for (const auto& ch : challenges) {
    ChallengeOutcome o;
    const auto& beta = ch.beta;
    FiniteGhostHom bnu = ghost_part(beta);
    o.composable = ch.delta.source == v.ghost_bipotent() && ch.delta.target == beta.target.ghost_bipotent() &&
                   beta.source == u;
    for (Index r = 0; o.composable && r < anu.map.size(); ++r)
      if (ch.delta.map[anu.map[r]] != bnu.map[r]) {
        o.composable = false;
        o.witness = {u.name(u.ghost_at(r))};
      }
    if (!o.composable) {
      rep.outcomes.push_back(o);
      continue;
    }
    o.well_defined = true;
    for (Index x = 0; x < u.size() && o.well_defined; ++x)
      if (beta.map[x] != beta.map[pre[alpha.map[x]]]) {
        o.well_defined = false;
        o.witness = {u.name(x), u.name(pre[alpha.map[x]])};
      }
    if (o.well_defined) {
      const auto& w = beta.target;
      for (Index y = 0; y < v.size(); ++y)
        o.eta.push_back(pre[y] != kUnset ? beta.map[pre[y]] : w.ghost_at(ch.delta.map[v.ghost_rank(y)]));
      FiniteTransmission eta{v, beta.target, o.eta};
      auto vr = validate_transmission(eta);
      o.eta_valid = vr.ok();
      if (!o.eta_valid) o.witness = vr.first_failure()->witness;
      if (o.eta_valid) o.covers_delta = ghost_part(eta).map == ch.delta.map;
    }
    rep.outcomes.push_back(o);
  }
  return rep;
}

std::vector<FiniteTransmission> enumerate_transmissions(const FiniteSupertropical& u, const FiniteSupertropical& w) {
  const std::size_t n = u.size();
  std::vector<Index> fixed(n, kUnset);
  auto pin = [&](Index x, Index y) {
    if (fixed[x] != kUnset && fixed[x] != y) return false;
    fixed[x] = y;
    return true;
  };
  std::vector<FiniteTransmission> out;
  if (!pin(u.zero(), w.zero()) || !pin(u.one(), w.one()) || !pin(u.e(), w.e())) return out;
  std::vector<Index> val(n, kUnset);
  auto consistent = [&](Index k) {
    for (Index x = 0; x <= k; ++x)
      for (Index y = 0; y <= k; ++y) {
        Index p = u.mul(x, y);
        if (p > k || (x != k && y != k && p != k)) continue;
        if (val[p] != w.mul(val[x], val[y])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, Index k) -> void {
    if (k == n) {
      FiniteTransmission t{u, w, val};
      if (validate_transmission(t).ok()) out.push_back(std::move(t));
      return;
    }
    for (Index y = 0; y < w.size(); ++y) {
      if (fixed[k] != kUnset && y != fixed[k]) continue;
      if (u.is_ghost(k) && !w.is_ghost(y)) continue;
      val[k] = y;
      if (consistent(k)) self(self, k + 1);
    }
    val[k] = kUnset;
  };
  rec(rec, 0);
  return out;
}

std::vector<PushoutChallenge> generate_challenges(const FiniteTransmission& alpha,
                                                  const std::vector<FiniteSupertropical>& targets) {
  std::vector<PushoutChallenge> out;
  FiniteGhostHom anu = ghost_part(alpha);
  FiniteBipotent vg = alpha.target.ghost_bipotent();
  for (const auto& w : targets) {
    FiniteBipotent wg = w.ghost_bipotent();
    for (auto& beta : enumerate_transmissions(alpha.source, w)) {
      FiniteGhostHom bnu = ghost_part(beta);
      FiniteGhostHom delta{vg, wg, std::vector<Index>(vg.size(), kUnset), false};
      bool ok = true;
      for (Index r = 0; r < anu.map.size() && ok; ++r) {
        Index& d = delta.map[anu.map[r]];
        if (d != kUnset && d != bnu.map[r]) ok = false;
        d = bnu.map[r];
      }
      if (!ok || std::count(delta.map.begin(), delta.map.end(), kUnset) > 0) continue;
      if (!validate_ghost_hom(delta).ok()) continue;
      out.push_back(PushoutChallenge{std::move(delta), std::move(beta)});
    }
  }
  return out;
}

bool pushout_criterion(const FiniteSupertropical& u, const Partition& e, Witness* witness) {
  for (Index x : u.tangibles())
    for (Index y = 0; y < u.size(); ++y)
      if (x != y && e.related(x, y) && !e.related(x, u.zero())) {
        if (witness) *witness = {u.name(x), u.name(y)};
        return false;
      }
  return true;
}

// ---- derived maps ----

FiniteTransmission lambda_gamma(const FiniteTransmission& lambda, const FiniteGhostHom& gamma) {
  const auto& u = lambda.source;
  const auto& v = lambda.target;
  require(u.ghost_bipotent() == v.ghost_bipotent(), ErrorKind::GhostPartNotIdentity, "ghost ideals differ");
  FiniteGhostHom g = ghost_part(lambda);
  for (Index r = 0; r < g.map.size(); ++r)
    require(g.map[r] == r, ErrorKind::GhostPartNotIdentity, "lambda moves ghost " + u.name(u.ghost_at(r)));
  require(is_surjective(gamma), ErrorKind::NotSurjective, "gamma is not surjective");
  InitialTransmission a = initial_transmission(u, gamma);
  FiniteGhostHom gv = gamma;
  gv.source = v.ghost_bipotent();
  InitialTransmission b = initial_transmission(v, gv);
  FiniteTransmission out{a.carrier, b.carrier, std::vector<Index>(a.carrier.size(), kUnset)};
  for (Index x = 0; x < u.size(); ++x) {
    Index y = b.alpha.map[lambda.map[x]];
    Index& slot = out.map[a.alpha.map[x]];
    require(slot == kUnset || slot == y, ErrorKind::AxiomViolation,
            "lambda does not descend along the initial transmission at " + u.name(x));
    slot = y;
  }
  return out;
}

QuotientResult t_collapse_map(const FiniteSupertropical& u, const Subset& ideal) {
  return quotient_by_relation(u, rel_t_collapse(u, ideal));
}

GhostCollapse ghost_collapse(const FiniteSupertropical& u, const Subset& big_a) {
  for (Index g : u.ghosts())
    require(contains(big_a, g), ErrorKind::GhostsNotContained, "ghost " + u.name(g) + " is missing from the set");
  require(is_ideal(u, big_a), ErrorKind::NotIdeal, format_subset(u, big_a) + " is not an ideal");
  const std::size_t m = u.ghosts().size();
  std::vector<Index> nw(u.size());
  std::vector<std::string> names;
  for (Index r = 0; r < m; ++r) names.push_back(u.name(u.ghost_at(r)));
  Subset kept;
  for (Index x = 0; x < u.size(); ++x) {
    if (contains(big_a, x)) {
      nw[x] = u.ghost_rank(u.companion(x));
    } else {
      nw[x] = names.size();
      names.push_back(u.name(x));
    }
  }
  std::vector<Index> back;  // new index -> a U element representing it
  for (Index r = 0; r < m; ++r) back.push_back(u.ghost_at(r));
  for (Index x = 0; x < u.size(); ++x)
    if (!contains(big_a, x)) back.push_back(x);
  const std::size_t k = names.size();
  std::vector<Index> table(k * k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) table[i * k + j] = nw[u.mul(back[i], back[j])];
  std::vector<Index> ghosts(m);
  std::iota(ghosts.begin(), ghosts.end(), 0);
  GhostCollapse out;
  out.carrier = FiniteSupertropical(names, table, nw[u.e()], nw[u.one()], ghosts);
  out.map = FiniteTransmission{u, out.carrier, nw};
  return out;
}

std::optional<FiniteTransmission> factor_surjective(const FiniteTransmission& alpha) {
  require(is_surjective(alpha), ErrorKind::NotSurjective, "transmission is not surjective");
  QuotientResult q = quotient_by_relation(alpha.source, kernel(alpha));
  if (!q.transmissive) return std::nullopt;
  FiniteTransmission rho{q.carrier, alpha.target, std::vector<Index>(q.carrier.size(), kUnset)};
  for (Index x = 0; x < alpha.source.size(); ++x) rho.map[q.pi.map[x]] = alpha.map[x];
  if (!is_bijective(rho) || !validate_transmission(rho).ok()) return std::nullopt;
  FiniteTransmission inv{alpha.target, q.carrier, std::vector<Index>(rho.map.size())};
  for (Index i = 0; i < rho.map.size(); ++i) inv.map[rho.map[i]] = i;
  if (!validate_transmission(inv).ok()) return std::nullopt;
  return rho;
}

}  // namespace strop
