#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "commands.hpp"
#include "condenv/error.hpp"
#include "json.hpp"
#include "model_file.hpp"
#include "paths.hpp"

using namespace envctl;
using fixtures::path;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "envctl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

condenv::Rational r(long p, unsigned long q = 1) {
  condenv::Rational x(p, q);
  x.canonicalize();
  return x;
}

}  // namespace

TEST(ModelFile, RoundTripOnFixtures) {
  for (const auto& entry : std::filesystem::directory_iterator(CONDENV_FIXTURE_DIR)) {
    if (entry.path().extension() != ".model") continue;
    const ModelFile m = load_model(entry.path().string());
    const std::string text = serialize(m);
    EXPECT_EQ(parse_model(text), m) << entry.path() << "\n" << text;
    EXPECT_EQ(serialize(parse_model(text)), text);
  }
}

TEST(ModelFile, ParseErrorsCarryLocation) {
  auto code_and_message = [](const std::string& text) -> std::pair<condenv::ErrorCode, std::string> {
    try {
      parse_model(text, "m.model");
    } catch (const condenv::Error& e) {
      return {e.code(), e.what()};
    }
    return {condenv::ErrorCode::InvalidInput, "no error"};
  };
  auto [c1, m1] = code_and_message("[space]\nconditioning = 2\n\n[prior]\nmass = 5e-1 1/2\n");
  EXPECT_EQ(c1, condenv::ErrorCode::ParseError);
  EXPECT_NE(m1.find("m.model:5"), std::string::npos) << m1;
  auto [c2, m2] = code_and_message("[nonsense]\n");
  EXPECT_EQ(c2, condenv::ErrorCode::ParseError);
  EXPECT_NE(m2.find("m.model:1"), std::string::npos);
  auto [c3, m3] = code_and_message("[model]\nH2 = 1 0\n");
  EXPECT_NE(m3.find("m.model:2"), std::string::npos);
  EXPECT_EQ(code_and_message("conditioning = 2\n").first, condenv::ErrorCode::ParseError);
}

TEST(ModelFile, Queries) {
  auto m = parse_model("[queries]\nE1\nH1 | E2 # comment\n");
  ASSERT_EQ(m.queries.size(), 2u);
  EXPECT_EQ(m.queries[0].k, "Omega");
  EXPECT_EQ(m.queries[1].f, "H1");
  EXPECT_EQ(m.queries[1].k, "E2");
}

TEST(ModelFile, CapacityNeedsEverySubset) {
  auto m = parse_model("[capacity]\nground = a b c\na = 1/5\n");
  try {
    build_capacity(m);
    FAIL();
  } catch (const condenv::Error& e) {
    EXPECT_EQ(e.code(), condenv::ErrorCode::InvalidInput);
  }
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run_cli({"check", path("grid2x2.model")}).code, kOk);
  EXPECT_EQ(run_cli({"check", path("binomial_n2.model")}).code, kOk);
  auto bad = run_cli({"check", path("contradictory.model")});
  EXPECT_EQ(bad.code, kViolation);
  EXPECT_NE(bad.out.find("coherent  no"), std::string::npos);
  EXPECT_EQ(run_cli({"check", path("missing.model")}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
}

TEST(Cli, CheckWitnessJson) {
  auto res = run_cli({"--json", "check", path("grid2x2.model"), "--witness"});
  ASSERT_EQ(res.code, kOk);
  auto j = json::parse(res.out);
  EXPECT_TRUE(j["coherent"].get<bool>());
  EXPECT_EQ(j["witness"][0]["H1&E1"], "1/8");
}

TEST(Cli, BinomialEnvelopeWithOracle) {
  auto res = run_cli({"envelope", path("binomial_n2.model"), "--kind", "coherent", "--oracle", "--json"});
  ASSERT_EQ(res.code, kOk) << res.err;
  auto j = json::parse(res.out);
  EXPECT_TRUE(j["oracle_agree"].get<bool>());
  EXPECT_EQ(j["results"][0]["lower"]["exact"], "1/100");
  EXPECT_EQ(j["results"][0]["upper"]["exact"], "81/100");
  EXPECT_TRUE(j["results"][0]["oracle"]["agree"].get<bool>());
}

TEST(Cli, UltrafilterFullyDisintegrable) {
  auto res = run_cli({"envelope", path("ultrafilter.model"), "--kind", "fully-dis", "--json"});
  ASSERT_EQ(res.code, kOk) << res.err;
  auto j = json::parse(res.out);
  EXPECT_EQ(j["results"][0]["lower"]["exact"], "1/2");
  EXPECT_EQ(j["results"][0]["upper"]["exact"], "3/4");
}

TEST(Cli, StronglyConglomerable) {
  auto res = run_cli({"envelope", path("conglomerable.model"), "--kind", "sc", "--json"});
  ASSERT_EQ(res.code, kOk) << res.err;
  auto j = json::parse(res.out);
  EXPECT_EQ(j["results"][0]["lower"]["exact"], "0");
  EXPECT_EQ(j["results"][0]["upper"]["exact"], "1");
  EXPECT_EQ(run_cli({"envelope", path("conglomerable.model"), "--kind", "fully-dis"}).code, kUnsupported);
  EXPECT_EQ(run_cli({"envelope", path("ultrafilter.model"), "--kind", "coherent"}).code, kUnsupported);
  EXPECT_EQ(run_cli({"envelope", path("grid2x2.model"), "--kind", "weird"}).code, kUsage);
}

TEST(Cli, Bayes) {
  BayesOptions opt;
  opt.grid = 200;
  opt.n = 2;
  opt.theta1 = r(1, 5);
  opt.theta2 = r(1, 2);
  auto rows = bayes_table(opt);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].limit, r(117, 1000));
  EXPECT_LT(condenv::Rational(abs(rows[0].value - rows[0].limit)), r(1, 100));
  EXPECT_LT(condenv::Rational(abs(rows[1].value - rows[1].limit)), condenv::Rational(abs(rows[0].value - rows[0].limit)));

  opt.grid = 10;
  opt.theta1 = 0;
  opt.theta2 = 1;
  for (const auto& row : bayes_table(opt)) EXPECT_EQ(row.value, 1);

  opt.n = 0;
  opt.theta1 = r(1, 5);
  opt.theta2 = r(1, 2);
  opt.doublings = 0;
  EXPECT_EQ(bayes_table(opt)[0].value, r(3, 11));

  EXPECT_EQ(run_cli({"bayes", "--grid", "7", "--n", "2", "--theta1", "1/5", "--theta2", "1/2"}).code, kUsage);
  EXPECT_EQ(run_cli({"bayes", "--grid", "1", "--n", "2"}).code, kUsage);
  EXPECT_EQ(run_cli({"bayes", "--grid", "10", "--n", "2", "--theta1", "1/2", "--theta2", "1/5"}).code, kUsage);
}

TEST(Cli, Capacity) {
  auto res = run_cli({"--json", "capacity", path("capacity_2.model"), "--analyze"});
  ASSERT_EQ(res.code, kOk) << res.err;
  auto j = json::parse(res.out);
  EXPECT_EQ(j["mobius"]["{a}"]["exact"], "1/5");
  EXPECT_EQ(j["mobius"]["{b}"]["exact"], "3/10");
  EXPECT_EQ(j["mobius"]["{a,b}"]["exact"], "1/2");
  EXPECT_EQ(j["core_vertices"].size(), 2u);
  EXPECT_TRUE(j["totally_monotone"].get<bool>());

  auto bad = run_cli({"--json", "capacity", path("capacity_not2.model")});
  auto k = json::parse(bad.out);
  EXPECT_FALSE(k["two_monotone"].get<bool>());
  EXPECT_EQ(k["two_monotone_witness"]["sets"], json({"{a}", "{b}"}));

  auto additive = run_cli({"--json", "capacity", path("grid2x2.model")});
  auto a = json::parse(additive.out);
  EXPECT_TRUE(a["totally_monotone"].get<bool>());
  EXPECT_EQ(a["core_vertices"].size(), 1u);
}
