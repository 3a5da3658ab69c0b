#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "strop/io.hpp"

namespace strop {

struct CheckOptions {
  SampleConfig sample;
  // Carrier names or paths; empty means the built-in selection of each check.
  std::vector<std::string> over;
};

struct CheckResult {
  explicit CheckResult(std::string name = {}) : id(std::move(name)) {}

  std::string id;
  bool passed = true;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;  // at most 20 kept
  json details = json::object();

  void fail(const std::string& message);
  // Records one case; a false condition is a failure with the message.
  void expect(bool condition, const std::string& message);
};

struct CheckEntry {
  std::string id;
  std::string description;
  std::vector<std::string> instances;
  std::function<CheckResult(const CheckOptions&)> run;
};

const std::vector<CheckEntry>& check_registry();
const CheckEntry* find_check(const std::string& id);
// Throws Malformed for an unknown id. Exceptions raised inside a check are
// reported as failures.
CheckResult run_check(const std::string& id, const CheckOptions& options = {});

json to_json(const CheckResult& r);

// Carriers used as challenge targets: the finite corpus up to six elements
// plus the two-element ghost carrier.
std::vector<FiniteSupertropical> challenge_targets();
// Every ghost homomorphism m -> n.
std::vector<FiniteGhostHom> ghost_homs(const FiniteBipotent& m, const FiniteBipotent& n);

}  // namespace strop
