#include "strop/checks.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

#include "strop/corpus.hpp"

namespace strop {

void CheckResult::fail(const std::string& message) {
  passed = false;
  if (failures.size() < 20) failures.push_back(message);
}

void CheckResult::expect(bool condition, const std::string& message) {
  ++cases;
  if (!condition) fail(message);
}

json to_json(const CheckResult& r) {
  json out = {{"id", r.id}, {"passed", r.passed}, {"cases", r.cases}, {"failures", r.failures}};
  if (!r.details.empty()) out["details"] = r.details;
  return out;
}

std::vector<FiniteSupertropical> challenge_targets() {
  std::vector<FiniteSupertropical> out;
  for (const auto& c : finite_corpus())
    if (c.carrier.size() <= 6) out.push_back(c.carrier);
  out.push_back(FiniteSupertropical::ghost_only(FiniteBipotent::boolean()));
  return out;
}

std::vector<FiniteGhostHom> ghost_homs(const FiniteBipotent& m, const FiniteBipotent& n) {
  std::vector<FiniteGhostHom> out;
  std::vector<Index> map(m.size(), 0);
  while (true) {
    if (map[m.zero()] == n.zero() && map[m.one()] == n.one()) {
      FiniteGhostHom g{m, n, map};
      if (validate_ghost_hom(g).ok()) out.push_back(g);
    }
    std::size_t i = 0;
    while (i < map.size() && ++map[i] == n.size()) map[i++] = 0;
    if (i == map.size()) break;
  }
  return out;
}

namespace {

constexpr Index kUnset = static_cast<Index>(-1);

using Carriers = std::vector<NamedCarrier>;

Carriers select(const CheckOptions& o, const std::vector<std::string>& defaults) {
  Carriers out;
  for (const auto& n : o.over.empty() ? defaults : o.over) out.push_back({n, resolve_carrier(n)});
  return out;
}

Carriers small_corpus(const CheckOptions& o, std::size_t bound = 6) {
  if (!o.over.empty()) return select(o, {});
  Carriers out;
  for (const auto& c : finite_corpus())
    if (c.carrier.size() <= bound) out.push_back(c);
  return out;
}

std::string blocks(const FiniteSupertropical& u, const Partition& p) { return format_blocks(p, u.names()); }

std::string ghost_blocks(const FiniteSupertropical& u, const Partition& phi) {
  std::vector<std::string> names;
  for (Index g : u.ghosts()) names.push_back(u.name(g));
  return format_blocks(phi, names);
}

std::string witness_text(const Witness& w) {
  std::string s;
  for (const auto& x : w) s += (s.empty() ? "" : ", ") + x;
  return "(" + s + ")";
}

// Runs the challenge battery against α; returns the number of failed outcomes.
std::size_t battery(const FiniteTransmission& alpha, std::uint64_t& challenges) {
  auto targets = challenge_targets();
  auto ch = generate_challenges(alpha, targets);
  challenges += ch.size();
  return verify_pushout(alpha, ch).failures();
}

std::vector<FiniteBipotent> bipotents_upto(std::size_t n) {
  std::vector<FiniteBipotent> out;
  for (std::size_t k = 2; k <= n; ++k)
    for (auto& m : enumerate_bipotent(k)) out.push_back(std::move(m));
  return out;
}

std::vector<FiniteBipotent> cancellative_upto(std::size_t n) {
  std::vector<FiniteBipotent> out;
  for (auto& m : bipotents_upto(n))
    if (is_cancellative(m).cancellative) out.push_back(std::move(m));
  return out;
}

std::string hom_text(const FiniteGhostHom& g) {
  std::string s;
  for (Index x = 0; x < g.map.size(); ++x)
    s += (s.empty() ? "" : ", ") + g.source.name(x) + "->" + g.target.name(g.map[x]);
  return s;
}

// Subsets of U containing every ghost.
std::vector<Subset> supersets_of_ghosts(const FiniteSupertropical& u) {
  Subset t = u.tangibles();
  std::vector<Subset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << t.size()); ++mask) {
    Subset s = u.ghost_set();
    for (std::size_t i = 0; i < t.size(); ++i)
      if (mask >> i & 1) s.push_back(t[i]);
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  return out;
}

// Φ on ghost ranks is homomorphic: multiplicative and convex.
bool phi_homomorphic(const FiniteBipotent& m, const Partition& phi) {
  return !multiplicativity_violation(m, phi) && !order_compatibility_violation(m, phi);
}

// F on U/E transported from a relation F ⊇ E on U through π_E.
Partition transport(const QuotientResult& q, const Partition& f) {
  std::vector<std::size_t> labels(q.carrier.size(), 0);
  for (Index x = 0; x < q.pi.map.size(); ++x) labels[q.pi.map[x]] = f.class_of(x);
  return Partition::from_labels(labels);
}

// A relation on ghost ranks of u moved to ghost ranks of the quotient.
Partition transport_ghosts(const FiniteSupertropical& u, const QuotientResult& q, const Partition& phi) {
  std::vector<std::size_t> labels(q.carrier.ghosts().size(), 0);
  for (Index r = 0; r < u.ghosts().size(); ++r)
    labels[q.carrier.ghost_rank(q.pi.map[u.ghost_at(r)])] = phi.class_of(r);
  return Partition::from_labels(labels);
}

Subset image(const FiniteTransmission& a, const Subset& s) {
  std::set<Index> out;
  for (Index x : s) out.insert(a.map[x]);
  return {out.begin(), out.end()};
}

// ================= carriers and construction =================

CheckResult corpus_axioms(const CheckOptions& o) {
  CheckResult r{"corpus-axioms"};
  for (const auto& c : finite_corpus()) {
    auto rep = validate_supertropical(c.carrier);
    r.expect(rep.ok(), c.name + " fails " + (rep.ok() ? "" : rep.first_failure()->axiom));
  }
  r.expect(!validate_supertropical(d_chain3_table()).ok(), "d_chain3 table accepted");
  for (const auto& [name, m] : std::vector<std::pair<std::string, FiniteBipotent>>{
           {"boolean", FiniteBipotent::boolean()}, {"chain3", chain3()}, {"nil3", nil3()}})
    r.expect(validate_bipotent(m).ok(), name + " rejected");
  SampleConfig cfg = o.sample;
  auto sampled = [&](const std::string& name, const ValidationReport& rep) {
    r.expect(rep.ok(), name + " fails " + (rep.ok() ? "" : rep.first_failure()->axiom + " at " +
                                                                witness_text(rep.first_failure()->witness)));
  };
  sampled("D(RationalMaxPlus)", validate_supertropical_sampled(doubled(RationalMaxPlus{}), cfg));
  sampled("D(UnitIntervalMul)", validate_supertropical_sampled(doubled(UnitIntervalMul{}), cfg));
  sampled("LexPower(2)", validate_bipotent(LexPower(2), cfg));
  sampled("UnitIntervalMul", validate_bipotent(UnitIntervalMul{}, cfg));
  sampled("interval(1/2) quotient", validate_bipotent(interval_quotient(interval_ideal(make_rational(1, 2))), cfg));

  // Shipped JSON documents load and validate; files marked invalid must not.
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(corpus_dir()))
    for (const auto& f : fs::directory_iterator(corpus_dir()))
      if (f.path().extension() == ".json") files.push_back(f.path());
  std::sort(files.begin(), files.end());
  json loaded = json::array();
  for (const auto& path : files) {
    json doc = load_json_file(path.string());
    std::string name = path.stem().string();
    bool expect_valid = doc.value("expect", std::string("valid")) != "invalid";
    bool ok = validate_document(doc, cfg).ok();
    r.expect(ok == expect_valid, path.filename().string() + (expect_valid ? " rejected" : " accepted"));
    for (const auto& c : finite_corpus())
      if (c.name == name) r.expect(finite_supertropical_from_json(doc) == c.carrier, name + " differs from the built-in");
    loaded.push_back(path.filename().string());
  }
  for (const char* required : {"t5.json", "stb.json", "uv_z4.json", "lex2.json", "interval.json", "rank2field.json"})
    r.expect(std::find(loaded.begin(), loaded.end(), required) != loaded.end(), std::string(required) + " missing");
  r.details["files"] = loaded;
  return r;
}

CheckResult mutation_rejection(const CheckOptions&) {
  CheckResult r{"mutation-rejection"};
  FiniteSupertropical base = t5();
  std::uint64_t mutants = 0;
  for (Index x = 0; x < base.size(); ++x)
    for (Index y = 0; y < base.size(); ++y)
      for (Index z = 0; z < base.size(); ++z) {
        if (z == base.mul(x, y)) continue;
        FiniteSupertropical m = base;
        m.set_entry(x, y, z);
        ++mutants;
        auto rep = validate_supertropical(m);
        bool rejected = !rep.ok() && !rep.first_failure()->witness.empty();
        r.expect(rejected, "mutant " + base.name(x) + "*" + base.name(y) + "=" + base.name(z) + " accepted");
      }
  r.details["mutants"] = mutants;
  return r;
}

FiniteMonoidWithZero random_monoid(Rng& rng) {
  switch (rng.below(5)) {
    case 0:
      return FiniteMonoidWithZero::trivial();
    case 1:
      return FiniteMonoidWithZero::cyclic_group(static_cast<std::size_t>(rng.in_range(1, 4)));
    case 2:
      return FiniteMonoidWithZero::truncated_cyclic(static_cast<std::size_t>(rng.in_range(2, 3)));
    case 3:
      return FiniteMonoidWithZero::product(FiniteMonoidWithZero::cyclic_group(2),
                                           FiniteMonoidWithZero::truncated_cyclic(2));
    default:
      return FiniteMonoidWithZero::product(FiniteMonoidWithZero::cyclic_group(2), FiniteMonoidWithZero::cyclic_group(3));
  }
}

// Addition forced by p: the larger projection wins, ties give the ghost.
template <Bipotent M>
std::optional<Witness> addition_rule_violation(const Constructed<M>& u, const SampleConfig& cfg) {
  Rng rng(cfg.seed + 1);
  const M& m = u.ghost_carrier();
  for (int i = 0; i < 1000; ++i) {
    auto x = u.sample(rng, cfg.box), y = u.sample(rng, cfg.box);
    auto c = m.compare(u.project(x), u.project(y));
    auto expected = c < 0 ? y : c > 0 ? x : u.ghost(u.project(x));
    if (!(st_add(u, x, y) == expected)) return Witness{u.format(x), u.format(y)};
  }
  return std::nullopt;
}

CheckResult projection_constructor(const CheckOptions& o) {
  CheckResult r{"projection-constructor"};
  Rng rng(o.sample.seed);
  std::map<std::string, int> kinds;
  for (int i = 0; i < 100; ++i) {
    FiniteMonoidWithZero s = random_monoid(rng);
    std::string tag = "instance " + std::to_string(i) + " (|S| = " + std::to_string(s.size()) + ")";
    switch (i % 3) {
      case 0: {
        ++kinds["boolean"];
        FiniteBipotent m = FiniteBipotent::boolean();
        // Tables written out by hand: ghosts first, then one tangible per s ≠ 0.
        ProjectionData d;
        d.ghosts = m;
        for (Index g = 0; g < m.size(); ++g) d.p.push_back(g);
        std::vector<Index> monoid_index(s.size(), kUnset);
        for (Index t = 0; t < s.size(); ++t)
          if (t != s.zero) {
            monoid_index[t] = m.size() + d.tangible_names.size();
            d.tangible_names.push_back("1^" + s.names[t]);
            d.p.push_back(m.one());
          }
        std::size_t n = d.size();
        d.one = monoid_index[s.one];
        std::vector<Index> monoid_of(n, kUnset);
        for (Index t = 0; t < s.size(); ++t)
          if (monoid_index[t] != kUnset) monoid_of[monoid_index[t]] = t;
        auto ghost_of = [&](Index x) { return x < m.size() ? x : m.one(); };
        d.mul.assign(n * n, 0);
        for (Index x = 0; x < n; ++x)
          for (Index y = 0; y < n; ++y) {
            Index g = m.mul(ghost_of(x), ghost_of(y));
            Index v = g;
            if (x >= m.size() && y >= m.size() && g != m.zero()) {
              Index t = s.at(monoid_of[x], monoid_of[y]);
              if (t != s.zero) v = monoid_index[t];
            }
            d.mul[x * n + y] = v;
          }
        try {
          FiniteSupertropical u = construct_from_projection(d);
          r.expect(validate_supertropical(u).ok(), tag + ": constructed carrier fails validation");
          r.expect(find_isomorphism(u, materialize(Constructed<FiniteBipotent>(m, s))).has_value(),
                   tag + ": differs from the materialized construction");
        } catch (const Error& e) {
          r.fail(tag + ": " + e.what());
        }
        break;
      }
      case 1: {
        ++kinds["rational_maxplus"];
        Constructed<RationalMaxPlus> u(RationalMaxPlus{}, s);
        r.expect(validate_projection_hypotheses(u, o.sample).ok(), tag + ": hypotheses fail on RationalMaxPlus");
        r.expect(validate_supertropical_sampled(u, o.sample).ok(), tag + ": RationalMaxPlus carrier fails");
        r.expect(!addition_rule_violation(u, o.sample), tag + ": sum differs from the projection rule");
        break;
      }
      default: {
        ++kinds["lex_power_2"];
        Constructed<LexPower> u(LexPower(2), s);
        r.expect(validate_projection_hypotheses(u, o.sample).ok(), tag + ": hypotheses fail on LexPower(2)");
        r.expect(validate_supertropical_sampled(u, o.sample).ok(), tag + ": LexPower(2) carrier fails");
        r.expect(!addition_rule_violation(u, o.sample), tag + ": sum differs from the projection rule");
        break;
      }
    }
  }
  r.details["instances"] = kinds;
  return r;
}

// ================= initial transmissions =================

CheckResult initial_gamma_pushout(const CheckOptions& o) {
  CheckResult r{"initial-gamma-pushout"};
  std::uint64_t challenges = 0, gammas = 0;
  for (const auto& c : small_corpus(o)) {
    const auto& u = c.carrier;
    FiniteBipotent m = u.ghost_bipotent();
    for (const auto& n : cancellative_upto(m.size()))
      for (const auto& g : ghost_homs(m, n)) {
        if (!is_surjective(g)) continue;
        ++gammas;
        std::string tag = c.name + " with " + hom_text(g);
        Partition e = rel_initial_gamma(u, g);
        auto cls = classify_relation(u, e);
        r.expect(cls.te.holds && cls.ghost_cancellative.holds, tag + ": relation not TE and ghost-cancellative");
        QuotientResult q = quotient_by_relation(u, e);
        r.expect(q.transmissive, tag + ": quotient fails " + q.failed);
        InitialTransmission init = initial_transmission(u, g);
        r.expect(init.path == "surjective", tag + ": took path " + init.path);
        r.expect(kernel(init.alpha) == e, tag + ": kernel differs from the explicit relation");
        r.expect(find_isomorphism(q.carrier, init.carrier).has_value(), tag + ": quotient not isomorphic to U_gamma");
        r.expect(battery(init.alpha, challenges) == 0, tag + ": challenge battery fails");
      }
  }
  r.details["gammas"] = gammas;
  r.details["challenges"] = challenges;
  return r;
}

CheckResult ghost_extension_pushout(const CheckOptions& o) {
  CheckResult r{"ghost-extension-pushout"};
  std::uint64_t challenges = 0, embeddings = 0, obstructed = 0;
  for (const auto& c : small_corpus(o, 5)) {
    const auto& u = c.carrier;
    FiniteBipotent m = u.ghost_bipotent();
    for (const auto& n : bipotents_upto(std::min<std::size_t>(m.size() + 1, 4)))
      for (const auto& g : ghost_homs(m, n)) {
        if (!is_injective(g)) continue;
        ++embeddings;
        std::string tag = c.name + " into " + hom_text(g);
        GhostExtension ext;
        try {
          ext = ghost_extension(u, g);
        } catch (const Error& e) {
          r.expect(e.kind() == ErrorKind::HypothesisViolation, tag + ": " + e.what());
          if (e.kind() == ErrorKind::HypothesisViolation) {
            ++obstructed;
            if (!r.details.contains("first_obstruction")) r.details["first_obstruction"] = tag + ": " + e.detail();
          }
          continue;
        }
        FiniteTransmission inc{u, ext.carrier, ext.inclusion};
        r.expect(validate_supertropical(ext.carrier).ok(), tag + ": extension carrier invalid");
        r.expect(validate_transmission(inc).ok(), tag + ": inclusion is not a transmission");
        r.expect(ghost_part(inc).map == g.map, tag + ": ghost part differs from gamma");
        r.expect(battery(inc, challenges) == 0, tag + ": challenge battery fails");
      }
  }
  r.details["embeddings"] = embeddings;
  r.details["not_distributive"] = obstructed;
  r.details["challenges"] = challenges;
  return r;
}

// Where γ has a cancellative image but is not onto, the composite of the
// surjective and extension paths must agree with the extension of the image.
CheckResult composite_factorization(const CheckOptions& o) {
  CheckResult r{"composite-factorization"};
  std::uint64_t challenges = 0;
  for (const auto& c : small_corpus(o, 5)) {
    const auto& u = c.carrier;
    FiniteBipotent m = u.ghost_bipotent();
    for (const auto& n : bipotents_upto(std::min<std::size_t>(m.size() + 1, 4)))
      for (const auto& g : ghost_homs(m, n)) {
        ImageFactorization f = factor_through_image(g);
        if (is_surjective(g) || !is_cancellative(f.onto.target).cancellative) continue;
        std::string tag = c.name + " along " + hom_text(g);
        InitialTransmission direct = initial_transmission(u, g);
        r.expect(direct.path == "composite", tag + ": took path " + direct.path);
        InitialTransmission first = initial_transmission(u, f.onto);
        FiniteGhostHom inc = f.inclusion;
        inc.source = first.carrier.ghost_bipotent();
        GhostExtension second = ghost_extension(first.carrier, inc);
        FiniteTransmission composite = compose(FiniteTransmission{first.carrier, second.carrier, second.inclusion},
                                               first.alpha);
        auto iso = find_isomorphism(direct.carrier, second.carrier);
        bool same = iso.has_value();
        if (same)
          for (Index x = 0; x < u.size(); ++x) same = same && (*iso)[direct.alpha.map[x]] == composite.map[x];
        r.expect(same, tag + ": composite differs from the direct construction");
        r.expect(battery(direct.alpha, challenges) == 0, tag + ": challenge battery fails");
      }
  }
  r.details["challenges"] = challenges;
  return r;
}

CheckResult surjective_factorization(const CheckOptions& o) {
  CheckResult r{"surjective-factorization"};
  for (const auto& c : small_corpus(o)) {
    for_each_partition(c.carrier.size(), [&](const Partition& e) {
      QuotientResult q = quotient_by_relation(c.carrier, e);
      if (!q.transmissive) return;
      auto rho = factor_surjective(q.pi);
      r.expect(rho && is_bijective(*rho), c.name + " " + blocks(c.carrier, e) + ": no isomorphism rho");
    });
  }
  return r;
}

// ================= relations =================

template <class Body>
void over_partitions(const Carriers& cs, Body body) {
  for (const auto& c : cs)
    for_each_partition(c.carrier.size(), [&](const Partition& e) { body(c, e); });
}

const std::vector<std::string> kRelationCarriers = {"stb", "t5", "uv_z4", "uv_z8", "stb_chain3"};

CheckResult te_cancellative_transmissive(const CheckOptions& o) {
  CheckResult r{"te-cancellative-transmissive"};
  std::uint64_t partitions = 0, hits = 0;
  over_partitions(select(o, kRelationCarriers), [&](const NamedCarrier& c, const Partition& e) {
    ++partitions;
    auto cls = classify_relation(c.carrier, e);
    if (!(cls.te.holds && cls.ghost_cancellative.holds)) return;
    ++hits;
    QuotientResult q = quotient_by_relation(c.carrier, e);
    r.expect(q.transmissive, c.name + " " + blocks(c.carrier, e) + ": fails " + q.failed);
  });
  r.details["partitions"] = partitions;
  r.details["te_ghost_cancellative"] = hits;
  return r;
}

CheckResult homomorphic_transmissive(const CheckOptions& o) {
  CheckResult r{"homomorphic-transmissive"};
  std::uint64_t hits = 0;
  over_partitions(select(o, kRelationCarriers), [&](const NamedCarrier& c, const Partition& e) {
    if (!classify_relation(c.carrier, e).homomorphic.holds) return;
    ++hits;
    QuotientResult q = quotient_by_relation(c.carrier, e);
    r.expect(q.transmissive, c.name + " " + blocks(c.carrier, e) + ": fails " + q.failed);
    if (q.transmissive) r.expect(is_homomorphism(q.pi), c.name + " " + blocks(c.carrier, e) + ": pi not additive");
  });
  r.details["homomorphic"] = hits;
  return r;
}

CheckResult pushout_criterion_battery(const CheckOptions& o) {
  CheckResult r{"pushout-criterion"};
  std::uint64_t challenges = 0, criterion = 0, transmissive = 0;
  over_partitions(select(o, kRelationCarriers), [&](const NamedCarrier& c, const Partition& e) {
    QuotientResult q = quotient_by_relation(c.carrier, e);
    if (!q.transmissive) return;
    ++transmissive;
    if (!pushout_criterion(c.carrier, e)) return;
    ++criterion;
    r.expect(battery(q.pi, challenges) == 0, c.name + " " + blocks(c.carrier, e) + ": battery fails");
  });
  r.details["transmissive"] = transmissive;
  r.details["criterion_holds"] = criterion;
  r.details["challenges"] = challenges;
  return r;
}

CheckResult ideal_pushout(const CheckOptions& o) {
  CheckResult r{"ideal-pushout"};
  std::uint64_t challenges = 0;
  for (const auto& c : small_corpus(o)) {
    for (const auto& a : enumerate_ideals(c.carrier, IdealFilter::All)) {
      std::string tag = c.name + " " + format_subset(c.carrier, a);
      Partition e = rel_of_ideal(c.carrier, a);
      Witness w;
      r.expect(pushout_criterion(c.carrier, e, &w), tag + ": criterion fails at " + witness_text(w));
      QuotientResult q = quotient_by_relation(c.carrier, e);
      r.expect(q.transmissive, tag + ": quotient fails " + q.failed);
      if (q.transmissive) r.expect(battery(q.pi, challenges) == 0, tag + ": battery fails");
    }
  }
  r.details["challenges"] = challenges;
  return r;
}

// ================= ideals =================

template <class Body>
void over_ideals(const Carriers& cs, Body body) {
  for (const auto& c : cs)
    for (const auto& a : enumerate_ideals(c.carrier, IdealFilter::All)) body(c, a);
}

// {x : ex ≤ c for some c in e𝔞}, written against the definition.
Subset saturate_oracle(const FiniteSupertropical& u, const Subset& a) {
  Subset out;
  for (Index x = 0; x < u.size(); ++x)
    for (Index y : a)
      if (u.ghost_rank(u.companion(x)) <= u.ghost_rank(u.companion(y))) {
        out.push_back(x);
        break;
      }
  return out;
}

CheckResult ideal_relation_classes(const CheckOptions& o) {
  CheckResult r{"ideal-relation-classes"};
  over_ideals(small_corpus(o), [&](const NamedCarrier& c, const Subset& a) {
    const auto& u = c.carrier;
    std::string tag = c.name + " " + format_subset(u, a);
    Partition closure = rel_of_ideal_closure(u, a);
    Partition fast = rel_of_ideal(u, a);
    r.expect(closure == fast, tag + ": closure " + blocks(u, closure) + " vs classes " + blocks(u, fast));
    Subset sat = saturate(u, a);
    r.expect(closure.block_of(0) == sat, tag + ": class of 0 is not the saturation");
    r.expect(rel_of_ideal_closure(u, sat) == closure, tag + ": saturation changes the relation");
    r.expect(rel_of_ideal_closure(u, ghost_part(u, a)) == closure, tag + ": ghost part changes the relation");
  });
  return r;
}

CheckResult saturation_closure(const CheckOptions& o) {
  CheckResult r{"saturation-closure"};
  for (const auto& c : small_corpus(o)) {
    const auto& u = c.carrier;
    auto ideals = enumerate_ideals(u, IdealFilter::All);
    for (const auto& a : ideals) {
      std::string tag = c.name + " " + format_subset(u, a);
      Subset s = saturate(u, a);
      r.expect(s == saturate_oracle(u, a), tag + ": saturation differs from the order description");
      r.expect(is_subset(a, s), tag + ": saturation not extensive");
      r.expect(saturate(u, s) == s, tag + ": saturation not idempotent");
      r.expect(saturate(u, ghost_part(u, a)) == s, tag + ": ghost part saturates differently");
      for (const auto& b : ideals) {
        if (is_subset(a, b)) r.expect(is_subset(s, saturate(u, b)), tag + ": saturation not monotone");
        bool finer = rel_of_ideal(u, a).refines(rel_of_ideal(u, b));
        r.expect(finer == is_subset(s, saturate(u, b)),
                 tag + " vs " + format_subset(u, b) + ": containment of relations disagrees with saturations");
        if (rel_of_ideal(u, b) == rel_of_ideal(u, a))
          r.expect(is_subset(b, s), tag + ": saturation is not the largest ideal with its relation");
      }
    }
  }
  return r;
}

CheckResult saturated_chain(const CheckOptions& o) {
  CheckResult r{"saturated-chain"};
  for (const auto& c : small_corpus(o)) {
    const auto& u = c.carrier;
    auto ideals = enumerate_ideals(u, IdealFilter::All);
    auto saturated = enumerate_ideals(u, IdealFilter::Saturated);
    for (const auto& a : saturated)
      for (const auto& b : saturated)
        r.expect(is_subset(a, b) || is_subset(b, a),
                 c.name + ": " + format_subset(u, a) + " and " + format_subset(u, b) + " not nested");
    for (const auto& a : ideals)
      for (const auto& b : ideals) {
        Partition ea = rel_of_ideal(u, a), eb = rel_of_ideal(u, b);
        r.expect(ea.refines(eb) || eb.refines(ea), c.name + ": relations of " + format_subset(u, a) + " and " +
                                                       format_subset(u, b) + " not nested");
      }
    // Saturated ideals against ideals of M that are lower sets.
    FiniteBipotent m = u.ghost_bipotent();
    FiniteSupertropical mg = FiniteSupertropical::ghost_only(m);
    std::size_t lower = 0;
    for (const auto& cm : enumerate_ideals(mg, IdealFilter::All)) {
      bool is_lower = true;
      for (Index x : cm)
        for (Index y = 0; y < mg.size(); ++y)
          if (mg.ghost_rank(y) <= mg.ghost_rank(x) && !contains(cm, y)) is_lower = false;
      if (!is_lower) continue;
      ++lower;
      Subset ghosts;
      for (Index x : cm) ghosts.push_back(u.ghost_at(mg.ghost_rank(x)));
      std::sort(ghosts.begin(), ghosts.end());
      Subset a = ghost_preimage(u, ghosts);
      r.expect(is_ideal(u, a) && is_saturated(u, a), c.name + ": preimage of a lower ideal is not saturated");
      r.expect(ghost_part(u, a) == ghosts, c.name + ": ghost part of the preimage differs");
    }
    r.expect(lower == saturated.size(), c.name + ": " + std::to_string(saturated.size()) + " saturated ideals vs " +
                                            std::to_string(lower) + " lower ideals of M");
  }
  return r;
}

// x, y outside with xy inside, by definition.
bool prime_oracle(const FiniteSupertropical& u, const Subset& a) {
  if (a.size() == u.size()) return false;
  for (Index x = 0; x < u.size(); ++x)
    for (Index y = 0; y < u.size(); ++y)
      if (!contains(a, x) && !contains(a, y) && contains(a, u.mul(x, y))) return false;
  return true;
}

CheckResult prime_correspondence(const CheckOptions& o) {
  CheckResult r{"prime-correspondence"};
  for (const auto& c : small_corpus(o)) {
    const auto& u = c.carrier;
    FiniteSupertropical mg = FiniteSupertropical::ghost_only(u.ghost_bipotent());
    std::size_t u_primes = 0, u_saturated_primes = 0;
    for (const auto& a : enumerate_ideals(u, IdealFilter::All)) {
      std::string tag = c.name + " " + format_subset(u, a);
      PrimeCheck p = is_prime(u, a);
      r.expect(p.prime == prime_oracle(u, a), tag + ": primality differs from the definition");
      if (!contains(a, u.e())) {
        r.expect(p.ghost_criterion.has_value() && *p.ghost_criterion == p.prime,
                 tag + ": ghost criterion disagrees with primality");
        if (p.prime) ++u_primes;
      }
      if (p.prime && is_saturated(u, a)) ++u_saturated_primes;
    }
    std::size_t m_primes = 0, m_saturated_primes = 0;
    for (const auto& cm : enumerate_ideals(mg, IdealFilter::All)) {
      if (!prime_oracle(mg, cm)) continue;
      ++m_primes;
      if (is_saturated(mg, cm)) ++m_saturated_primes;
      Subset ghosts;
      for (Index x : cm) ghosts.push_back(u.ghost_at(mg.ghost_rank(x)));
      std::sort(ghosts.begin(), ghosts.end());
      Subset a = ghost_preimage(u, ghosts);
      r.expect(is_ideal(u, a) && prime_oracle(u, a), c.name + ": preimage of a prime of M is not prime");
    }
    r.expect(u_primes == m_primes, c.name + ": " + std::to_string(u_primes) + " primes without e vs " +
                                       std::to_string(m_primes) + " primes of M");
    r.expect(u_saturated_primes == m_saturated_primes, c.name + ": saturated prime counts differ");
  }
  return r;
}

CheckResult radical_minimal_prime(const CheckOptions& o) {
  CheckResult r{"radical-minimal-prime"};
  for (const auto& c : small_corpus(o)) {
    const auto& u = c.carrier;
    auto ideals = enumerate_ideals(u, IdealFilter::All);
    for (const auto& a : enumerate_ideals(u, IdealFilter::Saturated)) {
      if (a.size() == u.size()) continue;
      std::string tag = c.name + " " + format_subset(u, a);
      Subset rad = radical(u, a);
      r.expect(rad == radical_e_free(u, a), tag + ": the two radicals differ");
      r.expect(is_ideal(u, rad) && prime_oracle(u, rad), tag + ": radical is not a prime ideal");
      r.expect(is_subset(a, rad), tag + ": radical does not contain the ideal");
      for (const auto& p : ideals)
        if (is_subset(a, p) && prime_oracle(u, p))
          r.expect(is_subset(rad, p), tag + ": prime " + format_subset(u, p) + " misses the radical");
    }
  }
  return r;
}

CheckResult zero_class_maximal(const CheckOptions& o) {
  CheckResult r{"zero-class-maximal"};
  auto cs = small_corpus(o);
  std::uint64_t te = 0;
  for (const auto& c : cs) {
    const auto& u = c.carrier;
    auto ideals = enumerate_ideals(u, IdealFilter::All);
    for_each_partition(u.size(), [&](const Partition& e) {
      if (!classify_relation(u, e).te.holds) return;
      ++te;
      std::string tag = c.name + " " + blocks(u, e);
      Subset q = zero_class_ideal(u, e);
      r.expect(q == e.block_of(0), tag + ": zero class differs");
      r.expect(is_ideal(u, q) && is_saturated(u, q), tag + ": zero class is not a saturated ideal");
      if (!is_ideal(u, q)) return;
      r.expect(rel_of_ideal(u, q).refines(e), tag + ": relation of the zero class is not inside E");
      for (const auto& b : ideals)
        if (rel_of_ideal(u, b).refines(e))
          r.expect(is_subset(b, q), tag + ": ideal " + format_subset(u, b) + " escapes the zero class");
    });
  }
  r.details["te_relations"] = te;
  return r;
}

CheckResult zero_class_reduction(const CheckOptions& o) {
  CheckResult r{"zero-class-reduction"};
  std::uint64_t challenges = 0;
  for (const auto& c : small_corpus(o, 5)) {
    const auto& u = c.carrier;
    for_each_partition(u.size(), [&](const Partition& e) {
      QuotientResult full = quotient_by_relation(u, e);
      if (!full.transmissive) return;
      std::string tag = c.name + " " + blocks(u, e);
      Subset q = zero_class_ideal(u, e);
      QuotientResult first = quotient_by_relation(u, rel_of_ideal(u, q));
      Partition bar = transport(first, e);
      QuotientResult second = quotient_by_relation(first.carrier, bar);
      r.expect(second.transmissive, tag + ": reduced relation fails " + second.failed);
      if (!second.transmissive) return;
      bool a = battery(full.pi, challenges) == 0;
      bool b = battery(second.pi, challenges) == 0;
      r.expect(a == b, tag + ": pushout verdicts differ after reduction");
    });
  }
  r.details["challenges"] = challenges;
  return r;
}

CheckResult quotient_cancellative_prime(const CheckOptions& o) {
  CheckResult r{"quotient-cancellative-prime"};
  for (const auto& c : small_corpus(o)) {
    const auto& u = c.carrier;
    if (!is_cancellative(u.ghost_bipotent()).cancellative) continue;
    FiniteSupertropical mg = FiniteSupertropical::ghost_only(u.ghost_bipotent());
    for (const auto& a : enumerate_ideals(u, IdealFilter::Saturated)) {
      if (a.size() == u.size()) continue;
      std::string tag = c.name + " " + format_subset(u, a);
      QuotientResult q = quotient_by_relation(u, rel_of_ideal(u, a));
      bool canc = is_cancellative(q.carrier.ghost_bipotent()).cancellative;
      Subset ea;
      for (Index x : ghost_part(u, a)) ea.push_back(mg.ghost_at(u.ghost_rank(x)));
      std::sort(ea.begin(), ea.end());
      r.expect(canc == prime_oracle(mg, ea), tag + ": cancellation disagrees with primality of the ghost part");
      r.expect(canc == prime_oracle(u, a), tag + ": cancellation disagrees with primality");
    }
  }
  return r;
}

CheckResult interval_cancellation(const CheckOptions& o) {
  CheckResult r{"interval-cancellation"};
  Rational half = make_rational(1, 2);
  IntervalIdeal a = interval_ideal(half);
  r.expect(saturate(a).theta == a.theta && saturate(a).closed == a.closed, "[0,1/2] is not saturated");
  IntervalPrimeCheck p = is_prime(a);
  r.expect(!p.prime && p.witness, "[0,1/2] reported prime");
  if (p.witness) {
    auto [x, y] = *p.witness;
    r.expect(!a.contains(x) && !a.contains(y) && a.contains(x * y), "primality witness is not a witness");
    r.details["prime_witness"] = {to_string(x), to_string(y)};
  }
  IntervalIdeal rad = radical(a);
  r.expect(rad.theta == 1 && !rad.closed, "radical of [0,1/2] is not [0,1)");
  r.expect(is_prime(interval_ideal(Rational(1), false)).prime, "[0,1) is not prime");
  r.expect(is_prime(interval_ideal(Rational(0))).prime, "{0} is not prime");

  TruncatedInterval q = interval_quotient(a);
  Rational x = make_rational(3, 5), y = make_rational(7, 10), z = make_rational(7, 10);
  r.expect(q.mul(x, z) == q.mul(y, z) && x != y && z != q.zero(), "(3/5, 7/10, 7/10) does not break cancellation");
  auto canc = is_cancellative(q, o.sample);
  r.expect(!canc.cancellative, "sampled search finds the quotient cancellative");
  r.details["witness"] = {to_string(x), to_string(y), to_string(z)};
  r.expect(interval_related(a, make_rational(1, 3), Rational(0)), "1/3 not related to 0");
  r.expect(!interval_related(a, x, y), "3/5 related to 7/10");
  return r;
}

CheckResult interval_quotient_table(const CheckOptions& o) {
  CheckResult r{"interval-quotient-table"};
  Rational half = make_rational(1, 2);
  IntervalIdeal a = interval_ideal(half);
  TruncatedInterval q = interval_quotient(a);
  Rng rng(o.sample.seed);
  for (int i = 0; i < 1000; ++i) {
    // Classes outside the ideal are singletons in (1/2, 1].
    Rational x, y;
    do x = rng.unit_open_closed(o.sample.box);
    while (x <= half);
    do y = rng.unit_open_closed(o.sample.box);
    while (y <= half);
    Rational expected = x * y > half ? Rational(x * y) : Rational(0);
    r.expect(q.mul(x, y) == expected, "product of " + to_string(x) + " and " + to_string(y));
    r.expect(interval_projection(a, x * y) == expected, "class of " + to_string(x * y));
    r.expect(q.compare(std::max(x, y), x) >= 0 && q.compare(std::max(x, y), y) >= 0, "sum is not the maximum");
  }
  return r;
}

// ================= additive and multiplicative relations =================

const std::vector<std::string> kDataCarriers = {"stb", "t5", "uv_z4"};

CheckResult additivity_criterion(const CheckOptions& o) {
  CheckResult r{"additivity-criterion"};
  over_partitions(select(o, kDataCarriers), [&](const NamedCarrier& c, const Partition& e) {
    const auto& u = c.carrier;
    std::string tag = c.name + " " + blocks(u, e);
    auto cls = classify_relation(u, e);
    bool criterion = cls.ghost_compatible.holds && cls.order_compatible_on_M.holds && cls.ae3.holds;
    r.expect(cls.additive.holds == criterion, tag + ": direct additivity and criterion disagree");
    Subset ae = A_of(u, e);
    r.expect(is_subset(u.ghost_set(), ae), tag + ": A(E) misses a ghost");
    for (Index x : ae)
      for (Index y : ae) r.expect(contains(ae, u.add(x, y)), tag + ": A(E) not closed under sums");
    if (cls.ghost_compatible.holds) r.expect(ae == A_of_ghost_form(u, e), tag + ": two forms of A(E) differ");
    if (cls.multiplicative.holds) r.expect(is_ideal(u, ae), tag + ": A(E) is not an ideal");
  });
  return r;
}

// Every choice of Φ and fiber relations, by odometer.
template <class Body>
void for_each_additive_data(const FiniteSupertropical& u, Body body) {
  FiniteBipotent m = u.ghost_bipotent();
  for (const auto& phi : all_partitions(m.size())) {
    if (order_compatibility_violation(m, phi)) continue;
    Subset l = L_of_phi(m, phi);
    std::vector<Index> fibers;
    std::vector<std::vector<Partition>> choices;
    for (Index rank : l) {
      Index g = u.ghost_at(rank);
      fibers.push_back(g);
      choices.push_back(all_partitions(u.fiber(g).size()));
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      AdditiveData d{phi, {}};
      for (std::size_t i = 0; i < fibers.size(); ++i) d.fibers.push_back({fibers[i], choices[i][pick[i]]});
      body(d);
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
}

CheckResult additive_data_bijection(const CheckOptions& o) {
  CheckResult r{"additive-data-bijection"};
  json counts = json::object();
  for (const auto& c : select(o, kDataCarriers)) {
    const auto& u = c.carrier;
    std::set<Partition> from_data;
    for_each_additive_data(u, [&](const AdditiveData& d) {
      Partition e = additive_from_data(u, d);
      std::string tag = c.name + " " + blocks(u, e);
      r.expect(classify_relation(u, e).additive.holds, tag + ": built relation is not additive");
      r.expect(restrict_to_ghosts(u, e) == d.phi, tag + ": restriction to M differs from the data");
      r.expect(additive_to_data(u, e) == d, tag + ": data do not round-trip");
      r.expect(from_data.insert(e).second, tag + ": two data give the same relation");
    });
    std::size_t additive = 0;
    for_each_partition(u.size(), [&](const Partition& e) {
      if (!classify_relation(u, e).additive.holds) return;
      ++additive;
      r.expect(from_data.count(e) == 1, c.name + " " + blocks(u, e) + ": additive relation not reached by data");
      r.expect(additive_from_data(u, additive_to_data(u, e)) == e, c.name + " " + blocks(u, e) + ": round trip");
    });
    r.expect(additive == from_data.size(), c.name + ": counts differ");
    counts[c.name] = additive;
  }
  r.details["additive_relations"] = counts;
  return r;
}

CheckResult multiplicative_additive_criterion(const CheckOptions& o) {
  CheckResult r{"multiplicative-additive-criterion"};
  over_partitions(select(o, kDataCarriers), [&](const NamedCarrier& c, const Partition& e) {
    const auto& u = c.carrier;
    auto cls = classify_relation(u, e);
    if (!cls.additive.holds) return;
    FiniteBipotent m = u.ghost_bipotent();
    Partition phi = restrict_to_ghosts(u, e);
    Subset big_a = A_of(u, e);
    Subset l = L_of_phi(m, phi);
    bool fiber_rule = true;
    for (Index rank : l) {
      Index a = u.ghost_at(rank);
      for (Index x : u.fiber(a))
        for (Index y : u.fiber(a)) {
          if (contains(big_a, x) || contains(big_a, y) || !e.related(x, y)) continue;
          for (Index z = 0; z < u.size(); ++z) {
            Index za = u.mul(z, a);
            if (!u.is_ghost(za) || !contains(l, u.ghost_rank(za))) continue;
            if (!e.related(u.mul(z, x), u.mul(z, y))) fiber_rule = false;
          }
        }
    }
    bool criterion = !multiplicativity_violation(m, phi) && is_ideal(u, big_a) && fiber_rule;
    r.expect(cls.multiplicative.holds == criterion, c.name + " " + blocks(u, e) + ": multiplicativity " +
                                                        (cls.multiplicative.holds ? "holds" : "fails") +
                                                        " against the criterion");
  });
  return r;
}

CheckResult ghost_data_relations(const CheckOptions& o) {
  CheckResult r{"ghost-data-relations"};
  for (const auto& c : select(o, kDataCarriers)) {
    const auto& u = c.carrier;
    FiniteBipotent m = u.ghost_bipotent();
    auto partitions = all_partitions(u.size());
    std::vector<RelationClassification> classes;
    for (const auto& f : partitions) classes.push_back(classify_relation(u, f));
    for (const auto& big_a : supersets_of_ghosts(u))
      for (const auto& phi : all_partitions(m.size())) {
        Partition e = rel_from_ghost_data(u, big_a, phi);
        std::string tag = c.name + " A=" + format_subset(u, big_a) + " Phi=" + ghost_blocks(u, phi);
        auto cls = classify_relation(u, e);
        bool phi_mult = !multiplicativity_violation(m, phi);
        bool phi_oc = !order_compatibility_violation(m, phi);
        Subset l = L_of_phi(m, phi);
        bool covers = true;
        for (Index x = 0; x < u.size(); ++x)
          if (!contains(l, u.ghost_rank(u.companion(x))) && !contains(big_a, x)) covers = false;
        r.expect(cls.multiplicative.holds == (phi_mult && is_ideal(u, big_a)), tag + ": multiplicativity");
        r.expect(cls.additive.holds == (phi_oc && covers), tag + ": additivity");
        r.expect(cls.homomorphic.holds == (phi_mult && phi_oc && is_ideal(u, big_a) && covers), tag + ": homomorphy");
        r.expect(A_of(u, e) == big_a, tag + ": A(E) differs");
        r.expect(cls.ghost_compatible.holds && restrict_to_ghosts(u, e) == phi, tag + ": restriction to M");
        for (std::size_t i = 0; i < partitions.size(); ++i) {
          const Partition& f = partitions[i];
          if (!classes[i].ghost_compatible.holds || !phi.refines(restrict_to_ghosts(u, f)) ||
              !is_subset(big_a, A_of(u, f)))
            continue;
          r.expect(e.refines(f), tag + ": not finer than " + blocks(u, f));
        }
      }
  }
  return r;
}

CheckResult ghost_collapse_isomorphism(const CheckOptions& o) {
  CheckResult r{"ghost-collapse-isomorphism"};
  for (const auto& c : select(o, kDataCarriers)) {
    const auto& u = c.carrier;
    for (const auto& big_a : enumerate_ideals(u, IdealFilter::All)) {
      if (!is_subset(u.ghost_set(), big_a)) continue;
      std::string tag = c.name + " " + format_subset(u, big_a);
      GhostCollapse g = ghost_collapse(u, big_a);
      Partition e = rel_from_ghost_data(u, big_a, Partition::identity(u.ghosts().size()));
      r.expect(validate_supertropical(g.carrier).ok(), tag + ": collapsed carrier invalid");
      r.expect(validate_transmission(g.map).ok() && is_homomorphism(g.map), tag + ": map is not a homomorphism");
      r.expect(is_surjective(g.map), tag + ": map not surjective");
      r.expect(kernel(g.map) == e, tag + ": kernel differs from E(U, A)");
      QuotientResult q = quotient_by_relation(u, e);
      r.expect(q.transmissive && find_isomorphism(g.carrier, q.carrier).has_value(),
               tag + ": collapsed carrier not isomorphic to the quotient");
      r.expect(g.carrier.e() == g.map.map[u.e()], tag + ": e moved");
    }
  }
  return r;
}

CheckResult multiplicative_reduction(const CheckOptions& o) {
  CheckResult r{"multiplicative-reduction"};
  for (const auto& c : select(o, kDataCarriers)) {
    const auto& u = c.carrier;
    auto ideals = enumerate_ideals(u, IdealFilter::All);
    for_each_partition(u.size(), [&](const Partition& f) {
      auto cf = classify_relation(u, f);
      if (!cf.multiplicative.holds) return;
      Subset af = A_of(u, f);
      bool f_trans = quotient_by_relation(u, f).transmissive;
      for (const auto& big_a : ideals) {
        if (!is_subset(u.ghost_set(), big_a) || !is_subset(big_a, af)) continue;
        std::string tag = c.name + " F=" + blocks(u, f) + " A=" + format_subset(u, big_a);
        Partition e = rel_from_ghost_data(u, big_a, Partition::identity(u.ghosts().size()));
        r.expect(e.refines(f), tag + ": E(U, A) not inside F");
        if (!e.refines(f)) continue;
        QuotientResult q = quotient_by_relation(u, e);
        Partition bar = transport(q, f);
        r.expect(bar.num_classes() == quotient_relation(e, f).num_classes(), tag + ": F/E class count");
        auto cb = classify_relation(q.carrier, bar);
        r.expect(cb.multiplicative.holds, tag + ": F/E not multiplicative");
        r.expect(A_of(q.carrier, bar) == image(q.pi, af), tag + ": A(F/E) is not the image of A(F)");
        r.expect(cb.strictly_ghost_separating.holds == (big_a == af), tag + ": strict ghost separation");
        r.expect(quotient_by_relation(q.carrier, bar).transmissive == f_trans, tag + ": transmissive verdicts");
        r.expect(cb.homomorphic.holds == cf.homomorphic.holds, tag + ": homomorphic verdicts");
      }
    });
  }
  return r;
}

CheckResult phi_ideal_transmissive(const CheckOptions& o) {
  CheckResult r{"phi-ideal-transmissive"};
  for (const auto& c : select(o, kDataCarriers)) {
    const auto& u = c.carrier;
    FiniteBipotent m = u.ghost_bipotent();
    auto ideals = enumerate_ideals(u, IdealFilter::All);
    for (const auto& phi : all_partitions(m.size())) {
      std::string ptag = c.name + " Phi=" + ghost_blocks(u, phi);
      // Any ideal over M whose relation is transmissive contains 𝔞_Φ.
      Subset a_phi_direct;
      for (Index x = 0; x < u.size(); ++x)
        if (phi.related(u.ghost_rank(u.companion(x)), 0)) a_phi_direct.push_back(x);
      for (const auto& big_a : ideals) {
        if (!is_subset(u.ghost_set(), big_a)) continue;
        if (quotient_by_relation(u, rel_from_ghost_data(u, big_a, phi)).transmissive)
          r.expect(is_subset(a_phi_direct, big_a), ptag + " A=" + format_subset(u, big_a) + ": misses a_Phi");
      }
      if (!phi_homomorphic(m, phi)) continue;
      PhiIdeals pi = phi_ideals(u, phi);
      r.expect(pi.a_phi == a_phi_direct, ptag + ": a_Phi differs");
      BipotentQuotient mq = quotient_bipotent(m, phi);
      FiniteGhostHom gamma{m, mq.carrier, mq.projection};
      r.expect(rel_from_ghost_data(u, pi.big_a, phi) == rel_gamma_rule(u, gamma), ptag + ": E(U, A_Phi, Phi) != F(U, pi)");
      bool canc = is_cancellative(mq.carrier).cancellative;
      Subset l = L_of_phi(m, phi);
      for (const auto& big_a : ideals) {
        if (!is_subset(u.ghost_set(), big_a)) continue;
        std::string tag = ptag + " A=" + format_subset(u, big_a);
        Subset d = subset_union(big_a, pi.a_phi);
        Partition ed = rel_from_ghost_data(u, d, phi);
        QuotientResult q = quotient_by_relation(u, rel_from_ghost_data(u, big_a, Partition::identity(m.size())));
        Partition phi_bar = transport_ghosts(u, q, phi);
        FiniteBipotent mbar = q.carrier.ghost_bipotent();
        PhiIdeals pb = phi_ideals(q.carrier, phi_bar);
        Partition f_bar = rel_from_ghost_data(q.carrier, pb.big_a, phi_bar);
        BipotentQuotient mbq = quotient_bipotent(mbar, phi_bar);
        r.expect(f_bar == rel_gamma_rule(q.carrier, FiniteGhostHom{mbar, mbq.carrier, mbq.projection}),
                 tag + ": F on the quotient differs from the gamma rule");
        r.expect(transport(q, ed) == f_bar, tag + ": E(U, D, Phi)/E(U, A) differs from F");
        bool t1 = quotient_by_relation(u, ed).transmissive;
        bool t2 = quotient_by_relation(q.carrier, f_bar).transmissive;
        r.expect(t1 == t2, tag + ": transmissive verdicts differ");
        if (canc) r.expect(t1, tag + ": cancellative M/Phi but not transmissive");
        bool covers = true;
        for (Index x = 0; x < u.size(); ++x)
          if (!contains(l, u.ghost_rank(u.companion(x))) && !contains(d, x)) covers = false;
        bool h1 = classify_relation(u, ed).homomorphic.holds;
        bool h2 = classify_relation(q.carrier, f_bar).homomorphic.holds;
        r.expect(h1 == h2 && h1 == covers, tag + ": homomorphic verdicts differ");
      }
    }
  }
  return r;
}

// ================= valuations and coarsening =================

CheckResult coarsening_cover_finite(const CheckOptions&) {
  CheckResult r{"coarsening-cover-finite"};
  FiniteBipotent b = FiniteBipotent::boolean();
  FiniteGhostHom id = identity_hom(b);
  std::uint64_t valuations = 0;
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t p = 2; p <= n; ++p) {
      bool prime = true;
      for (std::size_t k = 2; k * k <= p; ++k) prime = prime && p % k != 0;
      if (!prime || n % p != 0) continue;
      ++valuations;
      std::string tag = "Z/" + std::to_string(n) + " at " + std::to_string(p);
      FiniteMValuation v = zmod_valuation(n, p);
      r.expect(validate_m_valuation(v).ok() && is_valuation(v), tag + ": not a valuation");
      Cover cv = construct_cover(v);
      r.expect(validate_supervaluation(cv.phi).ok(), tag + ": cover map invalid");
      FiniteGhostHom g = id;
      g.source = cv.carrier.ghost_bipotent();
      g.target = b;
      FiniteSupervaluation pushed = pushout_supervaluation(cv.phi, g);
      Cover cgv = construct_cover(compose(id, v));
      r.expect(equivalent(pushed, cgv.phi), tag + ": pushed cover differs from the cover of gamma v");
      if (cgv.carrier.size() <= 8)
        r.expect(find_isomorphism(pushed.target, cgv.carrier).has_value(), tag + ": carriers differ");
      InitialTransmission init = initial_transmission(cv.carrier, g);
      r.expect(!pushout_value_violation(init, cv.carrier, g), tag + ": values of alpha off the rule");
      if (cv.carrier.size() > 10) continue;  // tangible covers enumerate partitions of U(v)
      for (const auto& psi : tangible_covers(v)) {
        FiniteGhostHom gp = g;
        gp.source = psi.target.ghost_bipotent();
        r.expect(is_tangible(pushout_supervaluation(psi, gp)), tag + ": tangible cover loses tangibility");
      }
    }
  r.details["valuations"] = valuations;
  return r;
}

// Rank-2 field instance: U(v) pushed along the first-coordinate projection
// against U(γv), identified by tangible f -> f and ghost n -> n.
CheckResult coarsening_cover_rank2(const CheckOptions& o) {
  CheckResult r{"coarsening-cover-rank2"};
  auto v = laurent_rank2_valuation();
  auto gamma = convex_projection(LexPower(2), 1);
  r.expect(validate_m_valuation(v, o.sample).ok(), "rank-2 valuation fails its laws");
  r.expect(validate_ghost_hom(gamma, o.sample).ok(), "projection is not a ghost homomorphism");
  r.expect(v.map(RatFunc::t_power(2)) == LexPower::point({-2, 0}), "v(t^2) != (-2, 0)");
  r.expect(v.map(RatFunc::constant(Rational(2)) * RatFunc::t_power(1)) == LexPower::point({-1, -1}),
           "v(2t) != (-1, -1)");
  using Cover2 = CoverCarrier<RationalFunctionField, LexPower>;
  Cover2 cv(v);
  Pushed<Cover2, LexPower> pushed(cv, gamma.target, gamma.map);
  Cover2 cgv(compose(gamma, v));
  using P = Pushed<Cover2, LexPower>::value_type;
  auto iota = [](const P& x) -> Cover2::value_type {
    if (x.tangible) return {x.tangible->tangible, x.ghost};
    return {std::nullopt, x.ghost};
  };
  RationalFunctionField field;
  Rng rng(o.sample.seed);
  for (int i = 0; i < 1000; ++i) {
    RatFunc a = field.sample(rng), b = field.sample(rng);
    P pa = pushed.from(cv.phi(a)), pb = pushed.from(cv.phi(b));
    std::string tag = "at " + a.format() + ", " + b.format();
    r.expect(cgv.equal(iota(pa), cgv.phi(a)), tag + ": values differ");
    r.expect(cgv.equal(iota(pushed.mul(pa, pb)), cgv.mul(cgv.phi(a), cgv.phi(b))), tag + ": products differ");
    r.expect(cgv.equal(iota(st_add(pushed, pa, pb)), st_add(cgv, cgv.phi(a), cgv.phi(b))), tag + ": sums differ");
    r.expect(cgv.equal(iota(pushed.companion(pa)), cgv.companion(cgv.phi(a))), tag + ": ghosts differ");
  }
  return r;
}

CheckResult collapse_isomorphism(const CheckOptions&) {
  CheckResult r{"collapse-isomorphism"};
  FiniteBipotent b = FiniteBipotent::boolean();
  struct Case {
    std::string name;
    FiniteSupertropical u;
  };
  std::vector<Case> cases = {
      {"nil3 x Z/2", materialize(Constructed<FiniteBipotent>(nil3(), FiniteMonoidWithZero::cyclic_group(2)))},
      {"nil3 x Z/3", materialize(Constructed<FiniteBipotent>(nil3(), FiniteMonoidWithZero::cyclic_group(3)))},
      {"t5", t5()},
      {"uv_z8", uv_z8().carrier}};
  for (const auto& c : cases) {
    FiniteBipotent m = c.u.ghost_bipotent();
    for (const auto& g : ghost_homs(m, b)) {
      std::string tag = c.name + " with " + hom_text(g);
      Subset p;
      for (Index rank = 0; rank < m.size(); ++rank)
        if (g.map[rank] == b.zero()) p.push_back(c.u.ghost_at(rank));
      std::sort(p.begin(), p.end());
      QuotientResult pi = t_collapse_map(c.u, p);
      r.expect(pi.transmissive, tag + ": t-collapse fails " + pi.failed);
      if (!pi.transmissive) continue;
      FiniteTransmission lg = lambda_gamma(pi.pi, g);
      r.expect(validate_transmission(lg).ok() && is_bijective(lg), tag + ": lambda_gamma is not an isomorphism");
      InitialTransmission a = initial_transmission(c.u, g);
      FiniteGhostHom gv = g;
      gv.source = pi.carrier.ghost_bipotent();
      InitialTransmission bv = initial_transmission(pi.carrier, gv);
      bool commutes = true;
      for (Index x = 0; x < c.u.size(); ++x)
        commutes = commutes && lg.map[a.alpha.map[x]] == bv.alpha.map[pi.pi.map[x]];
      r.expect(commutes, tag + ": square does not commute");
    }
  }
  return r;
}

CheckResult tangible_cover_coarsening(const CheckOptions&) {
  CheckResult r{"tangible-cover-coarsening"};
  FiniteBipotent b = FiniteBipotent::boolean();
  json counts = json::object();
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 2}, {8, 2}, {9, 3}, {6, 2}}) {
    std::string tag = "Z/" + std::to_string(n) + " at " + std::to_string(p);
    FiniteMValuation v = zmod_valuation(n, p);
    auto covers = tangible_covers(v);
    counts[tag] = covers.size();
    for (const auto& phi : covers) {
      r.expect(validate_supervaluation(phi).ok() && is_tangible(phi), tag + ": cover is not a tangible supervaluation");
      r.expect(covered_valuation(phi).map == v.map, tag + ": cover does not cover v");
    }
    auto pushed = [&](const FiniteSupervaluation& phi) {
      FiniteGhostHom g = identity_hom(b);
      g.source = phi.target.ghost_bipotent();
      return pushout_supervaluation(phi, g);
    };
    auto collapsed = [&](const FiniteSupervaluation& phi) {
      Subset zero_ghosts = {phi.target.zero()};
      return t_collapse(phi, zero_ghosts);
    };
    for (const auto& phi : covers)
      for (const auto& psi : covers)
        r.expect(equivalent(pushed(phi), pushed(psi)) == equivalent(collapsed(phi), collapsed(psi)),
                 tag + ": pushed and collapsed comparisons differ");
  }
  r.details["covers"] = counts;
  return r;
}

CheckResult orbital_coarsening(const CheckOptions& o) {
  CheckResult r{"orbital-coarsening"};
  Rng rng(o.sample.seed);
  UnitSubgroup h = UnitSubgroup::sampled(rng, 2, 2);
  auto v = laurent_rank2_valuation();
  auto gamma = convex_projection(LexPower(2), 1);
  for (const auto& g : h.generators())
    r.expect(v.map(g) == v.target.one(), "generator " + g.format() + " is not a unit");
  using Cover2 = CoverCarrier<RationalFunctionField, LexPower>;
  using Q2 = PredicateQuotient<Cover2>;
  auto orbit = [h](const Cover2::value_type& x, const Cover2::value_type& y) {
    if (x.tangible.has_value() != y.tangible.has_value()) return false;
    if (!x.tangible) return x.ghost == y.ghost;
    return h.contains(*x.tangible * y.tangible->inverse());
  };
  Cover2 cv(v), cgv(compose(gamma, v));
  Q2 left_base(cv, orbit, "U(v)/H");
  Pushed<Q2, LexPower> left(left_base, gamma.target, gamma.map);
  Q2 right(cgv, orbit, "U(gamma v)/H");
  using P = Pushed<Q2, LexPower>::value_type;
  auto iota = [](const P& x) -> Cover2::value_type {
    if (x.tangible) return {x.tangible->tangible, x.ghost};
    return {std::nullopt, x.ghost};
  };
  RationalFunctionField field;
  for (int i = 0; i < 1000; ++i) {
    RatFunc a = field.sample(rng);
    RatFunc b = rng.chance(1, 2) ? h.sample(rng) * a : field.sample(rng);
    std::string tag = "at " + a.format() + ", " + b.format();
    P la = left.from(cv.phi(a)), lb = left.from(cv.phi(b));
    auto ra = cgv.phi(a), rb = cgv.phi(b);
    r.expect(right.equal(iota(la), ra), tag + ": values differ");
    r.expect(left.equal(la, lb) == right.equal(ra, rb), tag + ": classes differ");
    r.expect(right.equal(iota(left.mul(la, lb)), right.mul(ra, rb)), tag + ": products differ");
    r.expect(right.equal(iota(st_add(left, la, lb)), st_add(right, ra, rb)), tag + ": sums differ");
    r.expect(left.is_ghost(la) == right.is_ghost(ra), tag + ": ghost status differs");
  }
  r.details["H"] = {{"primes", h.primes()}, {"linear", json::array()}};
  for (const auto& c : h.linear()) r.details["H"]["linear"].push_back(to_string(c));
  return r;
}

// lex2 modulo the convex subgroup {(0, r)}: transmissive, not additive, not
// initial.
CheckResult orbital_non_homomorphism(const CheckOptions& o) {
  CheckResult r{"orbital-non-homomorphism"};
  auto u = lex2();
  using V = Constructed<LexPower>::value_type;
  auto first_equal = [](const V& x, const V& y) {
    if (!x.ghost || !y.ghost) return !x.ghost && !y.ghost;
    return (*x.ghost)[0] == (*y.ghost)[0];
  };
  auto delta = [first_equal](const V& x, const V& y) {
    return x.tag.has_value() == y.tag.has_value() && first_equal(x, y);
  };
  PredicateQuotient<Constructed<LexPower>> q(u, delta, "lex2/Delta");
  std::function<V(const V&)> pi = [](const V& x) { return x; };
  std::function<V(Rng&)> sample = [&u, &o](Rng& rng) { return u.sample(rng, o.sample.box); };
  auto rep = validate_transmission_sampled(u, q, pi, sample, o.sample);
  r.expect(rep.ok(), "pi_H fails " + (rep.ok() ? std::string() : rep.first_failure()->axiom));
  V x = u.tangible(LexPower::point({0, 0})), y = u.tangible(LexPower::point({0, 1}));
  auto w = additivity_violation_sampled(u, q, pi, {{x, y}});
  r.expect(w.has_value(), "no additivity witness at (0,0), (0,1)");
  if (w) r.details["additivity_witness"] = *w;
  r.expect(q.equal(x, y) && !q.equal(x, u.zero()), "pushout criterion does not fail at the witness");
  V a = u.tangible(LexPower::point({3, 5})), b = u.tangible(LexPower::point({3, 0}));
  r.expect(q.equal(a, b) && !q.equal(a, u.companion(a)), "orbit classes at (3,5) wrong");
  // The initial transmission along the coarsening maps into lex2/Delta.
  auto gamma = convex_projection(LexPower(2), 1);
  Pushed<Constructed<LexPower>, LexPower> init(u, gamma.target, gamma.map);
  Rng rng(o.sample.seed);
  for (int i = 0; i < 1000; ++i) {
    V s = u.sample(rng, o.sample.box), t = u.sample(rng, o.sample.box);
    auto fs = init.from(s), ft = init.from(t);
    if (init.equal(fs, ft)) r.expect(q.equal(s, t), "eta not well defined at " + u.format(s));
    r.expect(q.equal(u.mul(s, t), q.mul(s, t)), "eta not multiplicative at " + u.format(s) + ", " + u.format(t));
    ++r.cases;
  }
  return r;
}

// γ*(v̂) against (γv)̌ on the rank-2 field: distinct tangibles of D(M)_γ over
// one ghost.
CheckResult double_coarsening_negative(const CheckOptions&) {
  CheckResult r{"double-coarsening-negative"};
  auto v = laurent_rank2_valuation();
  auto gamma = convex_projection(LexPower(2), 1);
  auto d2 = lex2();
  auto d1 = doubled(LexPower(1));
  Pushed<Constructed<LexPower>, LexPower> pushed(d2, gamma.target, gamma.map);
  auto hat = [&](const RatFunc& a) { return v.map(a) ? d2.tangible(v.map(a)) : d2.zero(); };
  auto check = [&](const RatFunc& a) {
    auto g = compose(gamma, v).map(a);
    return g ? d1.tangible(g) : d1.zero();
  };
  RatFunc a = RatFunc::t_power(-3);
  RatFunc b = RatFunc(Poly::constant(make_rational(1, 2)), Poly::constant(Rational(1))) * RatFunc::t_power(-3);
  auto pa = pushed.from(hat(a)), pb = pushed.from(hat(b));
  r.expect(hat(a) == d2.tangible(LexPower::point({3, 0})), "hat v(t^-3) != t(3,0)");
  r.expect(hat(b) == d2.tangible(LexPower::point({3, 1})), "hat v(t^-3/2) != t(3,1)");
  r.expect(!pushed.is_ghost(pa) && !pushed.is_ghost(pb), "pushed values are not tangible");
  r.expect(pa.ghost == pb.ghost && pa.ghost == LexPower::point({3}), "pushed values lie over different ghosts");
  r.expect(!pushed.equal(pa, pb), "pushed values coincide");
  r.expect(d1.equal(check(a), check(b)), "(gamma v) check separates the two elements");
  r.details["fiber"] = {{"ghost", gamma.target.format(pa.ghost)},
                        {"points", {pushed.format(pa), pushed.format(pb)}}};
  return r;
}

}  // namespace

const std::vector<CheckEntry>& check_registry() {
  static const std::vector<CheckEntry> entries = {
      {"corpus-axioms", "Every corpus carrier validates; the doubled chain3 table does not.", {"corpus"},
       corpus_axioms},
      {"mutation-rejection", "Each single-entry mutation of t5's table is rejected with a witness.", {"t5"},
       mutation_rejection},
      {"projection-constructor",
       "Carriers built from a projection of a cancellative monoid onto M validate, for 100 seeded instances.",
       {"boolean", "rational_maxplus", "lex2"}, projection_constructor},
      {"initial-gamma-pushout",
       "For surjective gamma onto a cancellative carrier, the explicit relation is TE and ghost-cancellative and "
       "its quotient passes the pushout battery.",
       {"corpus<=6"}, initial_gamma_pushout},
      {"ghost-extension-pushout", "Inclusions into ghost extensions are transmissions passing the pushout battery.",
       {"corpus<=5"}, ghost_extension_pushout},
      {"composite-factorization",
       "For gamma with cancellative image, the composite construction agrees with extending the image.",
       {"corpus<=5"}, composite_factorization},
      {"surjective-factorization", "Every surjective transmission factors through its kernel by an isomorphism.",
       {"corpus<=6"}, surjective_factorization},
      {"te-cancellative-transmissive", "TE and ghost-cancellative relations are transmissive.",
       {"stb", "t5", "uv_z4", "uv_z8", "stb_chain3"}, te_cancellative_transmissive},
      {"homomorphic-transmissive", "Homomorphic relations are transmissive.",
       {"stb", "t5", "uv_z4", "uv_z8", "stb_chain3"}, homomorphic_transmissive},
      {"pushout-criterion", "Transmissive relations meeting the pushout criterion pass the battery.",
       {"stb", "t5", "uv_z4", "uv_z8", "stb_chain3"}, pushout_criterion_battery},
      {"ideal-pushout", "The relation of every ideal meets the pushout criterion and passes the battery.",
       {"corpus<=6"}, ideal_pushout},
      {"ideal-relation-classes",
       "The closure relation of an ideal has classes sat(a) and singletons, and depends only on sat(a) or e*a.",
       {"corpus<=6"}, ideal_relation_classes},
      {"saturation-closure",
       "Saturation is the order closure of e*a, a closure operator, and orders the ideal relations.",
       {"corpus<=6"}, saturation_closure},
      {"saturated-chain",
       "Saturated ideals form a chain, ideal relations are nested, and saturated ideals match lower ideals of M.",
       {"corpus<=6"}, saturated_chain},
      {"prime-correspondence",
       "Primes without e match primes of M through ghost parts; the ghost criterion agrees with primality.",
       {"corpus<=6"}, prime_correspondence},
      {"radical-minimal-prime", "The radical of a saturated proper ideal is the least prime containing it.",
       {"corpus<=6"}, radical_minimal_prime},
      {"zero-class-maximal", "For a TE relation, [0] is the largest ideal whose relation lies inside it.",
       {"corpus<=6"}, zero_class_maximal},
      {"zero-class-reduction",
       "Dividing a transmissive relation by the relation of its zero class keeps it transmissive and keeps the "
       "pushout verdict.",
       {"corpus<=5"}, zero_class_reduction},
      {"quotient-cancellative-prime",
       "Over a cancellative M, the ghosts of U/E(a) cancel iff e*a is prime iff a is prime.", {"corpus<=6"},
       quotient_cancellative_prime},
      {"interval-cancellation", "[0,1/2] in the unit interval is saturated, not prime, with non-cancellative quotient.",
       {"interval"}, interval_cancellation},
      {"interval-quotient-table", "The quotient of the unit interval by [0,1/2] multiplies by the truncation rule.",
       {"interval"}, interval_quotient_table},
      {"additivity-criterion",
       "A relation is additive iff it is ghost compatible, convex on M, and absorbs fibers above merged ghosts.",
       {"stb", "t5", "uv_z4"}, additivity_criterion},
      {"additive-data-bijection", "Additive relations correspond bijectively to convex Phi with fiber relations.",
       {"stb", "t5", "uv_z4"}, additive_data_bijection},
      {"multiplicative-additive-criterion",
       "An additive relation is multiplicative iff Phi is, A(E) is an ideal, and fiber relations are stable.",
       {"stb", "t5", "uv_z4"}, multiplicative_additive_criterion},
      {"ghost-data-relations",
       "E(U, A, Phi) has A(E) = A, is the finest such ghost compatible relation, and has the predicted type.",
       {"stb", "t5", "uv_z4"}, ghost_data_relations},
      {"ghost-collapse-isomorphism",
       "The collapse of an ideal A over M is a homomorphism with kernel E(U, A), isomorphic to the quotient.",
       {"stb", "t5", "uv_z4"}, ghost_collapse_isomorphism},
      {"multiplicative-reduction",
       "A multiplicative F over E(U, A) descends to U/E(U, A) keeping its type and A(F).",
       {"stb", "t5", "uv_z4"}, multiplicative_reduction},
      {"phi-ideal-transmissive",
       "E(U, A + a_Phi, Phi) is transmissive iff its image on U/E(U, A) is, and always when M/Phi cancels.",
       {"stb", "t5", "uv_z4"}, phi_ideal_transmissive},
      {"coarsening-cover-finite",
       "Pushing the cover of a finite valuation along gamma gives the cover of gamma v.", {"zmod"},
       coarsening_cover_finite},
      {"coarsening-cover-rank2",
       "Pushing the rank-2 cover along the first-coordinate projection gives the cover of the coarsening.",
       {"rank2field"}, coarsening_cover_rank2},
      {"collapse-isomorphism", "lambda_gamma of a t-collapse is an isomorphism of pushed carriers.",
       {"nil3 x Z/n", "t5", "uv_z8"}, collapse_isomorphism},
      {"tangible-cover-coarsening",
       "Tangible covers agree after pushing iff they agree after t-collapse over the kernel.", {"zmod"},
       tangible_cover_coarsening},
      {"orbital-coarsening", "Orbit quotients by a unit subgroup commute with pushing along the coarsening.",
       {"rank2field"}, orbital_coarsening},
      {"orbital-non-homomorphism",
       "lex2 modulo the convex subgroup is a transmission but not additive, with witness (0,0), (0,1).", {"lex2"},
       orbital_non_homomorphism},
      {"double-coarsening-negative",
       "Pushing the tangible double of v along gamma keeps two tangibles over one ghost that the double of gamma v "
       "merges.",
       {"lex2", "rank2field"}, double_coarsening_negative},
  };
  return entries;
}

const CheckEntry* find_check(const std::string& id) {
  for (const auto& e : check_registry())
    if (e.id == id) return &e;
  return nullptr;
}

CheckResult run_check(const std::string& id, const CheckOptions& options) {
  const CheckEntry* entry = find_check(id);
  require(entry != nullptr, ErrorKind::Malformed, "unknown check '" + id + "'");
  try {
    return entry->run(options);
  } catch (const std::exception& e) {
    CheckResult r{id};
    r.fail(std::string("exception: ") + e.what());
    return r;
  }
}

}  // namespace strop
