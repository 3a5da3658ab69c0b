// strop command-line front end. Reports go to stdout as JSON; exit 0 when
// every checked property holds, 1 when one fails, 2 on malformed input.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include "strop/checks.hpp"

using namespace strop;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kMalformed = 2;

struct Globals {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  bool verbose = false;
  bool compact = false;
};

SampleConfig load_config(const Globals& g) {
  SampleConfig cfg;
  std::vector<std::string> paths;
  if (const char* env = std::getenv("STROP_CONFIG")) paths.push_back(env);
  paths.push_back("config/strop.json");
  paths.push_back(STROP_SOURCE_CONFIG);
  for (const auto& p : paths) {
    if (!std::filesystem::exists(p)) continue;
    json doc = load_json_file(p);
    cfg.seed = doc.value("seed", cfg.seed);
    cfg.samples = doc.value("samples", cfg.samples);
    cfg.box = doc.value("box", cfg.box);
    break;
  }
  if (g.seed) cfg.seed = *g.seed;
  if (g.samples) cfg.samples = *g.samples;
  return cfg;
}

// A JSON argument given inline or as a file path.
json parse_arg(const std::string& text) {
  if (std::filesystem::exists(text)) return load_json_file(text);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // A bare word is taken as a string (for example a corpus name).
    if (text.find_first_of("{[\"") == std::string::npos) return text;
    throw Error(ErrorKind::Malformed, std::string("bad JSON argument: ") + e.what());
  }
}

int emit(const Globals& g, const json& report, int code, const std::string& summary) {
  std::cout << (g.compact ? report.dump() : report.dump(2)) << "\n";
  if (g.verbose) std::cerr << summary << "\n";
  return code;
}

int report_validation(const Globals& g, const ValidationReport& rep) {
  std::string summary = rep.subject + ": " + (rep.ok() ? "pass" : "FAIL " + rep.first_failure()->axiom);
  return emit(g, to_json(rep), rep.ok() ? kPass : kFail, summary);
}

int cmd_validate(const Globals& g, const std::string& input) {
  json doc;
  if (std::filesystem::exists(input))
    doc = load_json_file(input);
  else
    doc = input;  // corpus name
  return report_validation(g, validate_document(doc, load_config(g)));
}

int cmd_classify(const Globals& g, const std::string& over, const std::string& relation) {
  FiniteSupertropical u = resolve_carrier(over);
  Partition e = relation_from_json(u, parse_arg(relation));
  auto cls = classify_relation(u, e);
  json out = {{"over", over}, {"relation", to_json(e, u.names())}, {"classification", to_json(cls)}};
  return emit(g, out, kPass, format_blocks(e, u.names()) + (cls.te.holds ? " TE" : " not TE"));
}

int cmd_quotient(const Globals& g, const std::string& over, const std::string& relation) {
  FiniteSupertropical u = resolve_carrier(over);
  Partition e = relation_from_json(u, parse_arg(relation));
  QuotientResult q = quotient_by_relation(u, e);
  json out = to_json(q);
  out["over"] = over;
  out["relation"] = to_json(e, u.names());
  std::string summary = q.transmissive ? std::to_string(q.carrier.size()) + "-element quotient" : "fails " + q.failed;
  return emit(g, out, q.transmissive ? kPass : kFail, summary);
}

int cmd_construct(const Globals& g, const std::string& input, const std::string& over, const std::string& gamma,
                  const std::string& target) {
  if (!gamma.empty()) {
    FiniteSupertropical u = resolve_carrier(over);
    FiniteBipotent m = u.ghost_bipotent();
    FiniteBipotent n = target.empty() ? FiniteBipotent::boolean() : finite_bipotent_from_json(parse_arg(target));
    InitialTransmission init = initial_transmission(u, ghost_hom_from_json(m, n, parse_arg(gamma)));
    json out = {{"path", init.path}, {"carrier", to_json(init.carrier)}, {"alpha", to_json(init.alpha)}};
    return emit(g, out, kPass, "U_gamma via " + init.path + ", " + std::to_string(init.carrier.size()) + " elements");
  }
  require(!input.empty(), ErrorKind::Malformed, "construct needs an input document or --gamma");
  json doc = parse_arg(input);
  FiniteSupertropical u = finite_supertropical_from_json(doc);
  auto rep = validate_supertropical(u);
  json out = to_json(u);
  if (doc.is_object() && doc.contains("name")) out["name"] = doc.at("name");
  out["validation"] = to_json(rep);
  return emit(g, out, rep.ok() ? kPass : kFail, std::to_string(u.size()) + " elements");
}

int cmd_check(const Globals& g, std::vector<std::string> ids, const std::vector<std::string>& over) {
  CheckOptions opt{load_config(g), over};
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    ids.clear();
    for (const auto& e : check_registry()) ids.push_back(e.id);
  }
  for (const auto& id : ids) require(find_check(id) != nullptr, ErrorKind::Malformed, "unknown check '" + id + "'");
  std::vector<std::future<CheckResult>> jobs;
  for (const auto& id : ids) jobs.push_back(std::async(std::launch::async, [id, opt] { return run_check(id, opt); }));
  json results = json::array();
  bool all = true;
  std::string summary;
  for (auto& j : jobs) {
    CheckResult r = j.get();
    all = all && r.passed;
    results.push_back(to_json(r));
    summary += (r.passed ? "PASS " : "FAIL ") + r.id + " (" + std::to_string(r.cases) + " cases)\n";
  }
  json out = {{"seed", opt.sample.seed}, {"samples", opt.sample.samples}, {"passed", all}, {"checks", results}};
  return emit(g, out, all ? kPass : kFail, summary);
}

IdealFilter filter_of(const std::string& f) {
  if (f == "all") return IdealFilter::All;
  if (f == "saturated") return IdealFilter::Saturated;
  if (f == "prime") return IdealFilter::Prime;
  throw Error(ErrorKind::Malformed, "unknown ideal filter '" + f + "'");
}

int cmd_enumerate(const Globals& g, const std::string& what, std::size_t n, const std::string& over,
                  const std::string& to, const std::string& filter) {
  json out = {{"what", what}};
  json items = json::array();
  if (what == "partitions") {
    for_each_partition(n, [&](const Partition& p) { items.push_back(p.labels()); });
  } else if (what == "bipotent") {
    for (const auto& m : enumerate_bipotent(n)) items.push_back(to_json(m));
  } else if (what == "ideals") {
    FiniteSupertropical u = resolve_carrier(over);
    for (const auto& a : enumerate_ideals(u, filter_of(filter))) items.push_back(to_json(u, a));
    out["over"] = over;
  } else if (what == "transmissions") {
    FiniteSupertropical u = resolve_carrier(over), w = resolve_carrier(to.empty() ? over : to);
    for (const auto& a : enumerate_transmissions(u, w)) items.push_back(a.map);
    out["over"] = over;
  } else if (what == "relations") {
    FiniteSupertropical u = resolve_carrier(over);
    for_each_partition(u.size(), [&](const Partition& p) {
      if (quotient_by_relation(u, p).transmissive) items.push_back(to_json(p, u.names()));
    });
    out["over"] = over;
  } else {
    throw Error(ErrorKind::Malformed, "unknown enumeration '" + what + "'");
  }
  out["count"] = items.size();
  out["items"] = items;
  return emit(g, out, kPass, std::to_string(items.size()) + " " + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strop: supertropical semirings, transmissions and their quotients"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Sampling seed (overrides the config file)");
  app.add_option("--samples", g.samples, "Sample count (overrides the config file)");
  app.add_flag("--verbose", g.verbose, "Human summary on stderr");
  app.add_flag("--json", g.compact, "Single-line JSON output");
  app.fallthrough();

  std::string input, over, relation, gamma, target, to, what, filter = "all";
  std::size_t n = 0;
  std::vector<std::string> ids, overs;
  bool all_ideals = false;

  auto* validate = app.add_subcommand("validate", "Validate a JSON document or corpus name");
  validate->add_option("input", input, "File or corpus name")->required();

  auto* classify = app.add_subcommand("classify", "Classify a relation on a carrier");
  classify->add_option("--over", over, "Carrier")->required();
  classify->add_option("--relation", relation, "Relation JSON")->required();

  auto* quotient = app.add_subcommand("quotient", "Quotient of a carrier by a relation");
  quotient->add_option("--over", over, "Carrier")->required();
  quotient->add_option("--relation", relation, "Relation JSON")->required();

  auto* construct = app.add_subcommand("construct", "Materialize a carrier, or U_gamma with --gamma");
  construct->add_option("input", input, "Carrier document");
  construct->add_option("--over", over, "Carrier for --gamma");
  construct->add_option("--gamma", gamma, "Ghost map such as \"a->1\"");
  construct->add_option("--target", target, "Target bipotent carrier for --gamma");

  auto* check = app.add_subcommand("check", "Run registry checks");
  check->add_option("ids", ids, "Check ids, or all");
  check->add_option("--over", overs, "Restrict to these carriers");
  check->add_flag("--all-ideals", all_ideals, "Accepted for compatibility; ideal checks always use every ideal");
  auto* list = check->add_flag("--list", "List check ids");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate partitions, bipotent carriers, ideals, ...");
  enumerate->add_option("what", what, "partitions, bipotent, ideals, transmissions or relations")->required();
  enumerate->add_option("n", n, "Size for partitions and bipotent");
  enumerate->add_option("--over", over, "Carrier");
  enumerate->add_option("--to", to, "Target carrier for transmissions");
  enumerate->add_option("--filter", filter, "all, saturated or prime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*validate) return cmd_validate(g, input);
    if (*classify) return cmd_classify(g, over, relation);
    if (*quotient) return cmd_quotient(g, over, relation);
    if (*construct) return cmd_construct(g, input, over, gamma, target);
    if (*check) {
      if (*list) {
        json out = json::array();
        for (const auto& e : check_registry())
          out.push_back({{"id", e.id}, {"description", e.description}, {"instances", e.instances}});
        return emit(g, out, kPass, std::to_string(out.size()) + " checks");
      }
      return cmd_check(g, ids, overs);
    }
    if (*enumerate) return cmd_enumerate(g, what, n, over, to, filter);
  } catch (const Error& e) {
    json out = {{"error", std::string(error_name(e.kind()))}, {"detail", e.detail()}};
    std::cout << (g.compact ? out.dump() : out.dump(2)) << "\n";
    if (g.verbose) std::cerr << e.what() << "\n";
    return kMalformed;
  } catch (const json::exception& e) {
    json out = {{"error", "Malformed"}, {"detail", e.what()}};
    std::cout << out.dump() << "\n";
    return kMalformed;
  }
  return kMalformed;
}
