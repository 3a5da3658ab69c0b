#include "strop/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "strop/ideals.hpp"

namespace strop {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(ErrorKind::Malformed, what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) malformed(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::string variant_of(const json& doc) { return doc.value("variant", std::string("finite")); }

// Index given as a number or as an element name.
Index index_in(const std::vector<std::string>& names, const json& v) {
  if (v.is_number_unsigned()) {
    Index i = v.get<Index>();
    if (i >= names.size()) malformed("index " + std::to_string(i) + " out of range");
    return i;
  }
  if (v.is_string()) {
    for (Index i = 0; i < names.size(); ++i)
      if (names[i] == v.get<std::string>()) return i;
    fail(ErrorKind::ForeignElement, "no element named '" + v.get<std::string>() + "'");
  }
  malformed("expected an index or an element name");
}

std::vector<Index> flat_table(const json& rows, std::size_t n) {
  if (!rows.is_array() || rows.size() != n) fail(ErrorKind::MalformedCarrier, "multiplication table is not square");
  std::vector<Index> flat;
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != n) fail(ErrorKind::MalformedCarrier, "multiplication table is not square");
    for (const auto& v : r) {
      if (!v.is_number_unsigned()) fail(ErrorKind::MalformedCarrier, "table entries must be indices");
      flat.push_back(v.get<Index>());
    }
  }
  return flat;
}

json table_rows(std::size_t n, const std::vector<Index>& flat) {
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(flat[i * n + j]);
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::string> names_of(const json& doc) {
  const json& e = field(doc, "elements");
  if (!e.is_array()) malformed("'elements' must be a list of names");
  std::vector<std::string> out;
  for (const auto& x : e) {
    if (!x.is_string()) malformed("element names must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<std::string> string_list(const json& v) {
  if (!v.is_array()) malformed("expected a list of names");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) malformed("expected a list of names");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> blocks_of(const json& v) {
  if (!v.is_array()) malformed("expected a list of blocks");
  std::vector<std::vector<std::string>> out;
  for (const auto& b : v) out.push_back(string_list(b));
  return out;
}

FiniteMonoidWithZero monoid_from_json(const json& doc) {
  if (doc.contains("cyclic_group")) return FiniteMonoidWithZero::cyclic_group(doc.at("cyclic_group").get<std::size_t>());
  if (doc.contains("truncated_cyclic"))
    return FiniteMonoidWithZero::truncated_cyclic(doc.at("truncated_cyclic").get<std::size_t>());
  if (doc.contains("elements")) {
    FiniteMonoidWithZero s;
    s.names = names_of(doc);
    s.mul = flat_table(field(doc, "mul"), s.size());
    s.one = index_in(s.names, field(doc, "one"));
    s.zero = index_in(s.names, field(doc, "zero"));
    validate_monoid_with_zero(s).throw_if_failed();
    return s;
  }
  return FiniteMonoidWithZero::trivial();
}

// Φ on ghost ranks from blocks of ghost names.
Partition phi_from_blocks(const FiniteSupertropical& u, const json& blocks) {
  std::vector<Subset> out;
  for (const auto& b : blocks_of(blocks)) {
    Subset s;
    for (const auto& name : b) {
      Index x = u.index_of(name);
      require(u.is_ghost(x), ErrorKind::Malformed, "'" + name + "' is not a ghost");
      s.push_back(u.ghost_rank(x));
    }
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  const std::size_t n = u.ghosts().size();
  std::vector<bool> seen(n, false);
  for (const auto& b : out)
    for (Index r : b) seen[r] = true;
  for (Index r = 0; r < n; ++r)
    if (!seen[r]) out.push_back({r});
  return Partition::from_blocks(n, out);
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    malformed("'" + path + "' is not JSON: " + e.what());
  }
}

// ---- bipotent ----

json to_json(const FiniteBipotent& m) {
  return {{"kind", "bipotent"},
          {"variant", "finite"},
          {"elements", m.names()},
          {"mul", table_rows(m.size(), m.table())},
          {"order", m.order()},
          {"one", m.one()}};
}

FiniteBipotent finite_bipotent_from_json(const json& doc) {
  if (doc.is_string()) {
    std::string name = doc.get<std::string>();
    if (name == "boolean") return FiniteBipotent::boolean();
    if (name == "chain3") return chain3();
    if (name == "nil3") return nil3();
    fail(ErrorKind::ForeignElement, "no built-in bipotent carrier named '" + name + "'");
  }
  std::string v = variant_of(doc);
  if (v == "boolean") return FiniteBipotent::boolean();
  if (v != "finite") malformed("bipotent variant '" + v + "' is not finite");
  auto names = names_of(doc);
  auto table = flat_table(field(doc, "mul"), names.size());
  std::vector<Index> order;
  for (const auto& x : field(doc, "order")) order.push_back(index_in(names, x));
  Index one = index_in(names, field(doc, "one"));
  return FiniteBipotent(names, table, order, one);
}

AnyBipotent bipotent_from_json(const json& doc) {
  if (doc.is_string()) return finite_bipotent_from_json(doc);
  std::string v = variant_of(doc);
  if (v == "finite" || v == "boolean") return finite_bipotent_from_json(doc);
  if (v == "rational_maxplus") return RationalMaxPlus{};
  if (v == "unit_interval_mul") return UnitIntervalMul{};
  if (v == "natural_max_times") return NaturalMaxTimes{};
  if (v == "lex_power") return LexPower(field(doc, "k").get<int>());
  if (v == "truncated_interval")
    return TruncatedInterval(parse_rational(field(doc, "theta").get<std::string>()), doc.value("closed", true));
  malformed("unknown bipotent variant '" + v + "'");
}

// ---- supertropical ----

json to_json(const FiniteSupertropical& u) {
  return {{"kind", "supertropical"},
          {"variant", "finite"},
          {"elements", u.names()},
          {"zero", 0},
          {"one", u.one()},
          {"e", u.e()},
          {"ghosts", u.ghosts()},
          {"mul", table_rows(u.size(), u.table())}};
}

FiniteSupertropical resolve_carrier(const std::string& name_or_path) {
  if (fs::is_regular_file(name_or_path)) return finite_supertropical_from_json(load_json_file(name_or_path));
  fs::path p = fs::path(corpus_dir()) / (name_or_path + ".json");
  if (fs::is_regular_file(p)) return finite_supertropical_from_json(load_json_file(p.string()));
  return finite_instance(name_or_path);
}

AnySupertropical supertropical_from_json(const json& doc) {
  if (doc.is_string()) return resolve_carrier(doc.get<std::string>());
  std::string v = variant_of(doc);
  if (v == "finite") {
    auto names = names_of(doc);
    auto table = flat_table(field(doc, "mul"), names.size());
    std::vector<Index> ghosts;
    for (const auto& g : field(doc, "ghosts")) ghosts.push_back(index_in(names, g));
    if (doc.contains("zero") && index_in(names, doc.at("zero")) != 0)
      fail(ErrorKind::MalformedCarrier, "zero must be element 0");
    return FiniteSupertropical(names, table, index_in(names, field(doc, "e")), index_in(names, field(doc, "one")),
                               ghosts);
  }
  if (v == "doubled" || v == "constructed") {
    AnyBipotent base = bipotent_from_json(field(doc, "base"));
    FiniteMonoidWithZero s = v == "doubled" ? FiniteMonoidWithZero::trivial() : monoid_from_json(field(doc, "monoid"));
    return std::visit(
        [&](const auto& m) -> AnySupertropical {
          using M = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<M, FiniteBipotent>) return materialize(Constructed<FiniteBipotent>(m, s));
          else if constexpr (std::is_same_v<M, TruncatedInterval>)
            malformed("doubling a truncated interval is not supported");
          else return Constructed<M>(m, s);
        },
        base);
  }
  if (v == "cover") return construct_cover(m_valuation_from_json(field(doc, "valuation"))).carrier;
  if (v == "ghost_extended") {
    FiniteSupertropical base = finite_supertropical_from_json(field(doc, "base"));
    FiniteBipotent target = finite_bipotent_from_json(field(doc, "target"));
    FiniteBipotent source = base.ghost_bipotent();
    return ghost_extension(base, ghost_hom_from_json(source, target, field(doc, "map"))).carrier;
  }
  malformed("unknown supertropical variant '" + v + "'");
}

FiniteSupertropical finite_supertropical_from_json(const json& doc) {
  AnySupertropical u = supertropical_from_json(doc);
  if (auto* f = std::get_if<FiniteSupertropical>(&u)) return *f;
  fail(ErrorKind::InfiniteUnsupported, "this operation needs a finite carrier");
}

// ---- rings and valuations ----

json to_json(const FiniteRing& r) {
  return {{"kind", "ring"},
          {"variant", "tables"},
          {"elements", r.names},
          {"add", table_rows(r.size(), r.add)},
          {"mul", table_rows(r.size(), r.mul)},
          {"zero", r.zero},
          {"one", r.one}};
}

FiniteRing ring_from_json(const json& doc) {
  std::string v = doc.value("variant", std::string("tables"));
  if (v == "zmod") return FiniteRing::zmod(field(doc, "n").get<std::size_t>());
  if (v != "tables") malformed("unknown ring variant '" + v + "'");
  FiniteRing r;
  r.names = names_of(doc);
  r.add = flat_table(field(doc, "add"), r.size());
  r.mul = flat_table(field(doc, "mul"), r.size());
  r.zero = index_in(r.names, field(doc, "zero"));
  r.one = index_in(r.names, field(doc, "one"));
  validate_ring(r).throw_if_failed();
  return r;
}

json to_json(const FiniteMValuation& v) {
  json map = json::array();
  for (Index x : v.map) map.push_back(v.target.name(x));
  return {{"kind", "m_valuation"}, {"ring", to_json(v.ring)}, {"target", to_json(v.target)}, {"map", map}};
}

FiniteMValuation m_valuation_from_json(const json& doc) {
  FiniteMValuation v{ring_from_json(field(doc, "ring")), finite_bipotent_from_json(field(doc, "target")), {}};
  const json& map = field(doc, "map");
  if (!map.is_array() || map.size() != v.ring.size()) malformed("valuation map must list one value per ring element");
  for (const auto& x : map) v.map.push_back(index_in(v.target.names(), x));
  return v;
}

// ---- maps ----

FiniteGhostHom ghost_hom_from_json(const FiniteBipotent& source, const FiniteBipotent& target, const json& map) {
  std::vector<std::pair<std::string, std::string>> pairs;
  if (map.is_string()) {
    std::stringstream ss(map.get<std::string>());
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto arrow = item.find("->");
      if (arrow == std::string::npos) malformed("expected 'x->y' in '" + item + "'");
      auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        return s;
      };
      pairs.emplace_back(trim(item.substr(0, arrow)), trim(item.substr(arrow + 2)));
    }
  } else if (map.is_object()) {
    for (const auto& [k, val] : map.items()) pairs.emplace_back(k, val.get<std::string>());
  } else {
    malformed("a ghost map is a string 'x->y, ...' or an object");
  }
  FiniteGhostHom g{source, target, std::vector<Index>(source.size(), target.size())};
  for (const auto& [a, b] : pairs) g.map[source.index_of(a)] = target.index_of(b);
  for (Index x = 0; x < source.size(); ++x)
    if (g.map[x] == target.size()) g.map[x] = target.index_of(source.name(x));
  return g;
}

json to_json(const FiniteTransmission& a) {
  json map = json::object();
  for (Index x = 0; x < a.source.size(); ++x) map[a.source.name(x)] = a.target.name(a.map[x]);
  return {{"kind", "transmission"}, {"source", to_json(a.source)}, {"target", to_json(a.target)}, {"map", map}};
}

// ---- relations and ideals ----

Subset ideal_from_json(const FiniteSupertropical& u, const json& doc) {
  const json& e = doc.is_array() ? doc : field(doc, "elements");
  return subset_from_names(u, string_list(e));
}

Partition relation_from_json(const FiniteSupertropical& u, const json& doc) {
  if (doc.contains("partition")) return relation_from_names(u, blocks_of(doc.at("partition")));
  if (doc.contains("repr")) return relation_from_json(u, doc.at("repr"));
  std::string family = field(doc, "family").get<std::string>();
  const json& params = doc.contains("params") ? doc.at("params") : doc;
  if (family == "ideal") return rel_of_ideal(u, ideal_from_json(u, field(params, "ideal")));
  if (family == "initial_gamma") {
    FiniteBipotent src = u.ghost_bipotent();
    FiniteBipotent tgt =
        params.contains("target") ? finite_bipotent_from_json(params.at("target")) : FiniteBipotent::boolean();
    return rel_initial_gamma(u, ghost_hom_from_json(src, tgt, field(params, "gamma")));
  }
  if (family == "orbital") return rel_orbital(u, subset_from_names(u, string_list(field(params, "H"))));
  if (family == "ghost_data") {
    Partition phi = params.contains("phi") ? phi_from_blocks(u, params.at("phi")) : Partition::identity(u.ghosts().size());
    return rel_from_ghost_data(u, subset_from_names(u, string_list(field(params, "A"))), phi);
  }
  if (family == "t_collapse") return rel_t_collapse(u, subset_from_names(u, string_list(field(params, "ideal"))));
  if (family == "mfce") {
    if (params.contains("idempotent")) return mfce_idempotent(u, u.index_of(params.at("idempotent").get<std::string>()));
    if (params.contains("pairs")) {
      std::vector<std::pair<Index, Index>> pairs;
      for (const auto& p : blocks_of(params.at("pairs"))) {
        if (p.size() != 2) malformed("mfce pairs have two names");
        pairs.emplace_back(u.index_of(p[0]), u.index_of(p[1]));
      }
      return mfce_closure(u, pairs);
    }
    return mfce_closure(u, subset_from_names(u, string_list(field(params, "X"))));
  }
  if (family == "additive") {
    AdditiveData d;
    d.phi = params.contains("phi") ? phi_from_blocks(u, params.at("phi")) : Partition::identity(u.ghosts().size());
    if (params.contains("fibers"))
      for (const auto& [ghost, blocks] : params.at("fibers").items()) {
        Index a = u.index_of(ghost);
        Subset fib = u.fiber(a);
        std::vector<Subset> bs;
        for (const auto& b : blocks_of(blocks)) {
          Subset s;
          for (const auto& name : b) {
            auto it = std::find(fib.begin(), fib.end(), u.index_of(name));
            require(it != fib.end(), ErrorKind::FiberMismatch, "'" + name + "' is not over " + ghost);
            s.push_back(static_cast<Index>(it - fib.begin()));
          }
          std::sort(s.begin(), s.end());
          bs.push_back(s);
        }
        std::vector<bool> seen(fib.size(), false);
        for (const auto& b : bs)
          for (Index i : b) seen[i] = true;
        for (Index i = 0; i < fib.size(); ++i)
          if (!seen[i]) bs.push_back({i});
        d.fibers.emplace_back(a, Partition::from_blocks(fib.size(), bs));
      }
    // Fibers over L(Φ) that were not given are the identity.
    for (Index r : L_of_phi(u.ghost_bipotent(), d.phi)) {
      Index a = u.ghost_at(r);
      bool given = false;
      for (const auto& f : d.fibers) given = given || f.first == a;
      if (!given) d.fibers.emplace_back(a, Partition::identity(u.fiber(a).size()));
    }
    std::sort(d.fibers.begin(), d.fibers.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return additive_from_data(u, d);
  }
  malformed("unknown relation family '" + family + "'");
}

json to_json(const Partition& p, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& b : p.blocks()) {
    json blk = json::array();
    for (Index x : b) blk.push_back(names[x]);
    out.push_back(blk);
  }
  return out;
}

json to_json(const FiniteSupertropical& u, const Subset& s) {
  json out = json::array();
  for (Index x : s) out.push_back(u.name(x));
  return out;
}

// ---- reports ----

json to_json(const ValidationReport& r) {
  json results = json::array();
  for (const auto& a : r.results) {
    json item = {{"axiom", a.axiom}, {"passed", a.passed}, {"checked", a.checked}};
    if (!a.passed) {
      item["witness"] = a.witness;
      item["error"] = std::string(error_name(a.kind));
    }
    results.push_back(item);
  }
  json out = {{"subject", r.subject}, {"ok", r.ok()}, {"exhaustive", r.exhaustive}, {"results", results}};
  if (r.seed) out["seed"] = *r.seed;
  return out;
}

json to_json(const RelationClassification& c) {
  auto flag = [](const Flag& f) {
    json j = {{"holds", f.holds}};
    if (!f.holds) j["witness"] = f.witness;
    return j;
  };
  return {{"multiplicative", flag(c.multiplicative)},
          {"additive", flag(c.additive)},
          {"order_compatible_on_M", flag(c.order_compatible_on_M)},
          {"ghost_compatible", flag(c.ghost_compatible)},
          {"ae3", flag(c.ae3)},
          {"fiber_conserving", flag(c.fiber_conserving)},
          {"te3", flag(c.te3)},
          {"te", flag(c.te)},
          {"ghost_cancellative", flag(c.ghost_cancellative)},
          {"homomorphic", flag(c.homomorphic)},
          {"strictly_ghost_separating", flag(c.strictly_ghost_separating)}};
}

json to_json(const QuotientResult& q) {
  json out = {{"transmissive", q.transmissive}};
  if (!q.transmissive) {
    out["failed"] = q.failed;
    out["witness"] = q.witness;
    return out;
  }
  out["quotient"] = to_json(q.carrier);
  json proj = json::object();
  for (Index x = 0; x < q.pi.source.size(); ++x) proj[q.pi.source.name(x)] = q.carrier.name(q.pi.map[x]);
  out["projection"] = proj;
  return out;
}


// ---- whole documents ----

namespace {

ValidationReport merge(std::string subject, const std::vector<ValidationReport>& parts) {
  ValidationReport out;
  out.subject = std::move(subject);
  for (const auto& p : parts) {
    out.exhaustive = out.exhaustive && p.exhaustive;
    if (p.seed) out.seed = p.seed;
    for (const auto& r : p.results) {
      AxiomResult a = r;
      a.axiom = p.subject + ": " + r.axiom;
      out.results.push_back(a);
    }
  }
  return out;
}

ValidationReport validate_interval_ideal(const json& doc, const SampleConfig& cfg) {
  const json& iv = field(doc, "interval");
  IntervalIdeal a{parse_rational(field(iv, "theta").get<std::string>()), iv.value("closed", true)};
  ValidationReport rep;
  rep.subject = "interval ideal " + a.format();
  rep.exhaustive = false;
  std::optional<Witness> range, sat;
  if (a.theta < 0 || a.theta > 1 || (a.theta == 0 && !a.closed)) range = Witness{a.format()};
  IntervalIdeal s = saturate(a);
  if (s.theta != a.theta || s.closed != a.closed) sat = Witness{a.format()};
  rep.record("lower set of [0,1]", 1, range, ErrorKind::NotIdeal);
  rep.record("saturated", 1, sat, ErrorKind::NotSaturated);
  if (range) return rep;
  return merge(rep.subject, {rep, validate_bipotent(interval_quotient(a), cfg)});
}

}  // namespace

ValidationReport validate_document(const json& doc, const SampleConfig& cfg) {
  std::string kind = doc.is_string() ? "supertropical" : doc.value("kind", std::string("supertropical"));
  if (kind == "supertropical")
    return std::visit(
        [&](const auto& u) {
          using U = std::decay_t<decltype(u)>;
          if constexpr (std::is_same_v<U, FiniteSupertropical>)
            return validate_supertropical(u);
          else
            return validate_supertropical_sampled(u, cfg);
        },
        supertropical_from_json(doc));
  if (kind == "bipotent")
    return std::visit([&](const auto& m) { return validate_bipotent(m, cfg); }, bipotent_from_json(doc));
  if (kind == "ring") return validate_ring(ring_from_json(doc));
  if (kind == "m_valuation") return validate_m_valuation(m_valuation_from_json(doc));
  if (kind == "ideal") {
    if (doc.contains("interval")) return validate_interval_ideal(doc, cfg);
    FiniteSupertropical u = finite_supertropical_from_json(field(doc, "over"));
    Subset a = ideal_from_json(u, doc);
    ValidationReport rep;
    rep.subject = "ideal " + format_subset(u, a);
    rep.record("ideal", 1, is_ideal(u, a) ? std::nullopt : std::optional<Witness>(Witness{format_subset(u, a)}),
               ErrorKind::NotIdeal);
    return rep;
  }
  if (kind == "rule_valuation") {
    SampleConfig cfg_doc = cfg;
    cfg_doc.samples = doc.value("samples", cfg.samples);
    const SampleConfig& cfg = cfg_doc;
    std::string v = field(doc, "valuation").get<std::string>();
    if (v == "laurent_rank2") {
      auto val = laurent_rank2_valuation();
      return merge("rank-2 valuation on Q(t)", {validate_m_valuation(val, cfg),
                                                validate_supertropical_sampled(CoverCarrier(val), cfg)});
    }
    if (v == "padic") {
      auto val = padic_valuation(field(doc, "p").get<unsigned long>());
      return merge("p-adic valuation on Q", {validate_m_valuation(val, cfg),
                                             validate_supertropical_sampled(CoverCarrier(val), cfg)});
    }
    malformed("unknown rule valuation '" + v + "'");
  }
  malformed("cannot validate kind '" + kind + "'");
}

}  // namespace strop
