#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cmtype::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, SemigroupInfoJson) {
  const auto doc = run_json({"semigroup", "info", "3,4,5"});
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["command"], "semigroup info");
  const auto& s = doc["semigroup"];
  EXPECT_EQ(s["type"], 2);
  EXPECT_EQ(s["frobenius"], 2);
  EXPECT_EQ(s["conductor"], 3);
  EXPECT_EQ(s["med"], true);
  EXPECT_EQ(s["symmetric"], false);
  EXPECT_EQ(s["pseudo_frobenius"], nlohmann::json({1, 2}));
  EXPECT_TRUE(doc["timing"].contains("elapsed_us"));
}

TEST(Cli, SemigroupInfoText) {
  const auto r = run({"semigroup", "info", "3,7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("frobenius            11"), std::string::npos) << r.out;
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"semigroup", "info", "4,5,6", "--json"},
           {"ideal", "analyze", "--semigroup", "3,7", "--gens", "t^6 - t^7, t^10", "--field",
            "fp:5", "--json"},
           {"verify", "paper", "--filter", "type-3-4-5", "--json"},
           {"sup-search", "--semigroup", "3,4,5", "--json"}}) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out).dump(2) + "\n", r.out);
  }
}

TEST(Cli, IdealAnalyzeThreeFourFive) {
  const auto doc = run_json({"ideal", "analyze", "--semigroup", "3,4,5", "--gens", "t^3, t^4"});
  const auto& rep = doc["report"];
  EXPECT_EQ(rep["engine"], "monomial");
  EXPECT_EQ(rep["r_idealization"], 1);
  EXPECT_EQ(rep["r_module"], 1);
  EXPECT_EQ(rep["closed"], true);
  for (const auto& v : doc["verdicts"]) EXPECT_TRUE(v["pass"].get<bool>()) << v.dump();

  const auto j = run_json({"ideal", "analyze", "--semigroup", "3,4,5", "--gens", "t^3, t^5"});
  EXPECT_EQ(j["report"]["r_idealization"], 3);
  EXPECT_EQ(j["report"]["r_module"], 2);
}

TEST(Cli, ForcedEngineAgreesWithAuto) {
  const auto a = run_json({"ideal", "analyze", "--semigroup", "4,5,6", "--gens", "t^8, t^9"});
  const auto s = run_json(
      {"ideal", "analyze", "--semigroup", "4,5,6", "--gens", "t^8, t^9", "--engine", "series"});
  EXPECT_EQ(s["report"]["engine"], "series");
  for (const char* key : {"mu", "r_module", "r_quotient", "colength", "r_idealization", "closed",
                          "trace", "residually_faithful", "ulrich_wrt_m", "canonical"}) {
    EXPECT_EQ(a["report"][key], s["report"][key]) << key;
  }
  EXPECT_EQ(a["report"]["r_quotient"], 2);
  EXPECT_EQ(a["report"]["r_idealization"], 3);
}

TEST(Cli, SeriesUlrichIdeal) {
  const auto doc = run_json(
      {"ideal", "analyze", "--semigroup", "3,7", "--gens", "t^6 - 2*t^7, t^10", "--field", "fp:5"});
  EXPECT_EQ(doc["report"]["engine"], "series");
  EXPECT_EQ(doc["report"]["ulrich_ideal"], true);
  EXPECT_EQ(doc["report"]["r_idealization"], 3);
}

TEST(Cli, InputErrorsExitTwo) {
  auto expect_two = [](std::vector<std::string> args) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << r.out << r.err;
  };
  expect_two({"ideal", "analyze", "--semigroup", "3,4,5", "--gens", "t^"});
  expect_two({"ideal", "analyze", "--semigroup", "3,4,5", "--gens", "t^3", "--field", "fp:6"});
  expect_two({"ideal", "analyze", "--semigroup", "3,4,5", "--gens", "t^3 + t^4", "--engine",
              "monomial"});
  expect_two({"ideal", "analyze", "--semigroup", "3,4,5", "--gens", "t^3", "--engine", "fast"});
  expect_two({"semigroup", "info", "4,6"});
  expect_two({"semigroup", "info", "3,x"});
  expect_two({"verify", "paper", "--filter", "no-such-case"});
  expect_two({"enumerate", "--semigroup", "3,4,5", "--filter", "bogus"});
  expect_two({"sup-search", "--semigroup", "3,4,5", "--bound", "0"});
  expect_two({"frobnicate"});
  expect_two({"--isa", "sse9", "semigroup", "info", "3,4,5"});
}

TEST(Cli, ParseErrorShowsCaret) {
  const auto r = run({"ideal", "analyze", "--semigroup", "3,4,5", "--gens", "t^3, t^"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("^"), std::string::npos) << r.err;
}

TEST(Cli, VerifyReferenceCasesPass) {
  const auto r = run({"verify", "paper"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto doc = run_json({"verify", "paper", "--filter", "trace"});
  EXPECT_EQ(doc["suite"]["failures"], 0);
  EXPECT_GT(doc["suite"]["total"].get<int>(), 0);
}

TEST(Cli, SupSearchAndEnumerate) {
  const auto sup = run_json({"sup-search", "--semigroup", "3,7"});
  EXPECT_EQ(sup["sup"]["value"], 4);
  EXPECT_EQ(sup["sup"]["predicted"], 4);
  const auto all = run_json({"enumerate", "--semigroup", "3,7"});
  EXPECT_EQ(all["enumerated"], 12);
  EXPECT_EQ(all["matched"], 12);
  const auto closed = run_json({"enumerate", "--semigroup", "3,7", "--filter", "closed"});
  for (const auto& rep : closed["ideals"]) EXPECT_EQ(rep["closed"], true);
}

TEST(Cli, IsaOverride) {
  EXPECT_EQ(run({"--isa", "scalar", "semigroup", "info", "3,4,5"}).code, 0);
}
