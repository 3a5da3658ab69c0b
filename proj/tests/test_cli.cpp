#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome strop(const std::string& args) {
  std::string cmd = std::string(STROP_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& file) { return std::string(STROP_SOURCE_DIR) + "/corpus/" + file; }

}  // namespace

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(strop("validate " + corpus("t5.json")).code, 0);
  EXPECT_EQ(strop("validate " + corpus("d_chain3.json")).code, 1);
  EXPECT_EQ(strop("validate " + corpus("interval.json")).code, 0);
  EXPECT_EQ(strop("validate t5").code, 0);
  EXPECT_EQ(strop("validate no_such_carrier").code, 2);
}

TEST(Cli, MalformedInput) {
  EXPECT_EQ(strop("").code, 2);
  EXPECT_EQ(strop("frobnicate").code, 2);
  EXPECT_EQ(strop("classify --over t5 --relation '{\"partition\": [[\"0\"]]}'").code, 2);
  EXPECT_EQ(strop("check no-such-check").code, 2);
  Outcome r = strop("quotient --over t5 --relation '{\"family\":\"initial_gamma\",\"gamma\":\"a->1\"}' --json");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("error"), "NotHomomorphism");
}

TEST(Cli, QuotientDocument) {
  Outcome r = strop("quotient --over t5 --relation '{\"family\":\"initial_gamma\",\"gamma\":\"a->0\"}' --json");
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("quotient").at("elements").size(), 3u);
  Outcome bad = strop("quotient --over t5 --relation '{\"partition\":[[\"0\",\"1\"],[\"a\"],[\"a^\"],[\"1^\"]]}' --json");
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, CheckAndEnumerate) {
  Outcome r = strop("check ideal-relation-classes --over t5 --all-ideals --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out).at("passed").get<bool>());
  auto count = [&](const std::string& args) { return nlohmann::json::parse(strop(args).out).at("count").get<int>(); };
  EXPECT_EQ(count("enumerate partitions 3 --json"), 5);
  EXPECT_EQ(count("enumerate partitions 5 --json"), 52);
  EXPECT_EQ(count("enumerate partitions 6 --json"), 203);
  EXPECT_EQ(count("enumerate ideals --over t5 --json"), 6);
  EXPECT_EQ(count("enumerate ideals --over t5 --filter saturated --json"), 3);
  EXPECT_EQ(strop("enumerate partitions 11").code, 2);
}

TEST(Cli, ReportsAreReproducible) {
  std::string args = "check interval-quotient-table orbital-coarsening --seed 7 --samples 500 --json";
  Outcome a = strop(args), b = strop(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out).at("seed"), 7);
}

TEST(Cli, ConstructWithGamma) {
  Outcome r = strop("construct --over stb --gamma '{\"1\":\"1\"}' --target '{\"kind\":\"bipotent\",\"variant\":\"finite\","
                "\"elements\":[\"0\",\"a\",\"1\"],\"order\":[\"0\",\"a\",\"1\"],\"one\":\"1\","
                "\"mul\":[[0,0,0],[0,1,1],[0,1,2]]}' --json");
  ASSERT_EQ(r.code, 0) << r.out;
  // Image {0,1} of chain3 is cancellative.
  EXPECT_EQ(nlohmann::json::parse(r.out).at("path"), "composite");
}
