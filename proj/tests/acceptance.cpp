// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic, fixed
// seed. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "strop/checks.hpp"

using namespace strop;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> checks;
  double bound_seconds;  // 0: no bound
};

const std::vector<Criterion> kCriteria = {
    {1, "axiom suites and t5 mutation testing", {"corpus-axioms", "mutation-rejection"}, 1},
    {2, "projection constructor on 100 seeded instances", {"projection-constructor"}, 10},
    {3, "initial transmissions for surjective gamma with pushout battery", {"initial-gamma-pushout"}, 120},
    {4, "ghost extension inclusions and composite factorization",
     {"ghost-extension-pushout", "composite-factorization"}, 0},
    {5, "TE and ghost-cancellative relations are transmissive", {"te-cancellative-transmissive"}, 120},
    {6, "homomorphic relations, pushout criterion, ideal relations",
     {"homomorphic-transmissive", "pushout-criterion", "ideal-pushout"}, 0},
    {7, "ideal theory over all ideals of the finite corpus",
     {"ideal-relation-classes", "saturation-closure", "saturated-chain", "prime-correspondence",
      "radical-minimal-prime", "zero-class-maximal"},
     30},
    {8, "unit interval quotient and cancellative quotients",
     {"interval-cancellation", "interval-quotient-table", "quotient-cancellative-prime"}, 0},
    {9, "additive and multiplicative relations through their data",
     {"additivity-criterion", "additive-data-bijection", "multiplicative-additive-criterion", "ghost-data-relations",
      "ghost-collapse-isomorphism", "multiplicative-reduction", "phi-ideal-transmissive", "zero-class-reduction"},
     180},
    {10, "supervaluations, covers and coarsening",
     {"coarsening-cover-finite", "coarsening-cover-rank2", "collapse-isomorphism", "tangible-cover-coarsening",
      "orbital-coarsening", "orbital-non-homomorphism"},
     60},
    {11, "doubled lex carrier is not the coarsened cover", {"double-coarsening-negative"}, 0},
};

}  // namespace

int main() {
  CheckOptions options;  // seed 42, 10^4 samples
  int failed = 0;
  for (const auto& c : kCriteria) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& id : c.checks) {
      CheckResult r = run_check(id, options);
      ok = ok && r.passed;
      detail += (detail.empty() ? "" : ", ") + id + " " + std::to_string(r.cases);
      if (!r.passed && !r.failures.empty()) detail += " [" + r.failures.front() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = std::to_string(secs).substr(0, std::to_string(secs).find('.') + 3) + "s";
    if (c.bound_seconds > 0) {
      timing += " < " + std::to_string(static_cast<int>(c.bound_seconds)) + "s";
      if (secs >= c.bound_seconds) {
        ok = false;
        timing += " EXCEEDED";
      }
    }
    std::printf("%s %2d %s (%s; %s)\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), detail.c_str(),
                timing.c_str());
    failed += !ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
  return failed == 0 ? 0 : 1;
}
