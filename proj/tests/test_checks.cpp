#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "strop/checks.hpp"

using namespace strop;

TEST(Registry, IdsAreUniqueAndDescriptive) {
  std::set<std::string> ids;
  std::regex form("[a-z0-9]+(-[a-z0-9]+)+");
  for (const auto& e : check_registry()) {
    EXPECT_TRUE(ids.insert(e.id).second) << e.id;
    EXPECT_TRUE(std::regex_match(e.id, form)) << e.id;
    EXPECT_FALSE(e.description.empty());
    EXPECT_EQ(find_check(e.id), &e);
  }
  EXPECT_GE(ids.size(), 30u);
  EXPECT_THROW(run_check("no-such-check"), Error);
}

TEST(Registry, SameSeedSameReport) {
  CheckOptions o;
  o.sample.samples = 300;
  for (const char* id : {"coarsening-cover-rank2", "interval-quotient-table", "orbital-non-homomorphism"})
    EXPECT_EQ(to_json(run_check(id, o)).dump(), to_json(run_check(id, o)).dump()) << id;
}

TEST(Registry, RestrictionToOneCarrier) {
  CheckOptions o;
  o.over = {"t5"};
  for (const char* id : {"saturated-chain", "radical-minimal-prime", "zero-class-maximal"}) {
    CheckResult r = run_check(id, o);
    EXPECT_TRUE(r.passed) << id;
    EXPECT_GT(r.cases, 0u) << id;
  }
}

TEST(Registry, FailuresAreReportedNotThrown) {
  CheckResult r("probe");
  r.expect(true, "fine");
  r.expect(false, "broken");
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.cases, 2u);
  EXPECT_EQ(r.failures, std::vector<std::string>{"broken"});
  for (int i = 0; i < 50; ++i) r.fail("more");
  EXPECT_LE(r.failures.size(), 20u);
}
