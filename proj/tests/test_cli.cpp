#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "repcur/cli.hpp"

using namespace repcur;
using namespace repcur::cli;

namespace {

struct Argv {
  std::vector<std::string> store;
  std::vector<const char*> ptrs;
  explicit Argv(std::initializer_list<std::string> args) : store(args) {
    store.insert(store.begin(), "repcur");
    for (const auto& s : store) ptrs.push_back(s.c_str());
  }
  int argc() const { return static_cast<int>(ptrs.size()); }
  const char* const* argv() const { return ptrs.data(); }
};

RunConfig parse(std::initializer_list<std::string> args) {
  Argv a(args);
  return parse_args(a.argc(), a.argv());
}

std::string usage_error(std::initializer_list<std::string> args) {
  try {
    parse(args);
  } catch (const UsageError& e) {
    return e.what();
  }
  return "";
}

int run(std::initializer_list<std::string> args, std::string* out_text = nullptr) {
  Argv a(args);
  std::ostringstream out, err;
  int code = cli::main(a.argc(), a.argv(), out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

}  // namespace

TEST(ParseArgs, SchurWeylHappyPath) {
  auto cfg = parse({"verify", "schur-weyl", "--n", "2", "--k", "2", "--points", "0,1", "--tau", "1,2"});
  EXPECT_EQ(cfg.command, "schur-weyl");
  EXPECT_EQ(cfg.n, 2u);
  EXPECT_EQ(cfg.k, 2u);
  EXPECT_EQ(cfg.points, (std::vector<Rat>{Rat(0), Rat(1)}));
  ASSERT_TRUE(cfg.tau.has_value());
  EXPECT_EQ(cfg.tau->first, 1u);
  EXPECT_EQ(cfg.tau->second, 2u);
  auto cyc = parse({"verify", "schur-weyl", "--n", "2", "--k", "3", "--tau", "(1 3)(2)"});
  EXPECT_EQ(cyc.tau->first, 1u);
  EXPECT_EQ(cyc.tau->second, 3u);
  EXPECT_EQ(cyc.points.size(), 3u);
}

TEST(ParseArgs, Diagnostics) {
  EXPECT_NE(usage_error({"verify", "schur-weyl", "--n", "2", "--points", "0,0", "--tau", "1,2"})
                .find("points must be pairwise distinct"),
            std::string::npos);
  std::string nd = usage_error({"verify", "casimir", "--weights", "1,2;1,0"});
  EXPECT_NE(nd.find("weight not dominant"), std::string::npos);
  EXPECT_NE(nd.find("1,2"), std::string::npos);
  std::string fam = usage_error({"verify", "span", "--family", "e8"});
  EXPECT_NE(fam.find("unknown family: 'e8'"), std::string::npos);
  std::string rat = usage_error({"verify", "span", "--points", "0,1/0"});
  EXPECT_NE(rat.find("malformed rational: '1/0'"), std::string::npos);
  EXPECT_NE(usage_error({"verify", "span", "--points", "1,1"}).find("pairwise distinct"), std::string::npos);
  EXPECT_NE(usage_error({"verify", "cycle-generation", "--points", "2,2"}).find("pairwise distinct"),
            std::string::npos);
  EXPECT_NE(usage_error({"verify", "bogus"}), "");
  EXPECT_NE(usage_error({"verify", "span", "--degree-cap", "x"}).find("degree cap"), std::string::npos);
  EXPECT_NE(usage_error({"verify", "commutant", "--k", "2", "--sigma", "(1 5)"}).find("malformed permutation"),
            std::string::npos);
  // Coincident points are allowed where the check reports the violated hypothesis.
  EXPECT_NO_THROW(parse({"verify", "irreducibility", "--points", "0,0,0"}));
}

TEST(ParseArgs, AutoDegreeCapAndDefaults) {
  auto cfg = parse({"verify", "span", "--family", "sp", "--n", "1"});
  EXPECT_FALSE(cfg.degree_cap.has_value());
  EXPECT_EQ(cfg.points, integer_points(2));
  auto cfg2 = parse({"verify", "span", "--d", "3", "--degree-cap", "4"});
  EXPECT_EQ(cfg2.points.size(), 3u);
  EXPECT_EQ(*cfg2.degree_cap, 4u);
}

TEST(RunAndReport, ExitCodes) {
  EXPECT_EQ(run({"verify", "schur-weyl", "--n", "2", "--k", "2", "--points", "0,1", "--tau", "1,2"}), 0);
  EXPECT_EQ(run({"verify", "schur-weyl", "--n", "2", "--points", "0,0"}), 2);
  EXPECT_EQ(run({"verify", "irreducibility", "--points", "0,0,0"}), 1);
  EXPECT_EQ(run({"verify", "irreducibility", "--points", "0,0,0", "--expect-fail"}), 0);
  EXPECT_EQ(run({"verify", "eval-irreducibility", "--points", "0,0"}), 1);
  EXPECT_EQ(run({"verify", "span", "--family", "so", "--n", "3", "--points", "0,1"}), 0);
  EXPECT_EQ(run({"verify", "casimir", "--weights", "1,0;1,0", "--points", "0,1", "--poly-p", "0,1",
                 "--poly-q", "1,1"}),
            0);
  EXPECT_EQ(run({"verify", "ad-invariance", "--family", "so", "--n", "3", "--k", "2"}), 0);
  EXPECT_EQ(run({"verify", "commutant", "--family", "sp", "--n", "1", "--k", "2"}), 0);
  EXPECT_EQ(run({"verify", "cycle-generation", "--d", "3"}), 0);
  std::string help;
  EXPECT_EQ(run({"verify", "--help"}, &help), 0);
  EXPECT_NE(help.find("--degree-cap"), std::string::npos);
}

TEST(RunAndReport, UnwritableOutputIsAFailure) {
  std::string text;
  EXPECT_EQ(run({"verify", "schur-weyl", "--output", "/nonexistent-dir/report.json"}, &text), 1);
  EXPECT_NE(text.find("cannot write report"), std::string::npos);
}

TEST(RunAndReport, JsonSchemaAndExactStrings) {
  auto path = std::filesystem::temp_directory_path() / "repcur_cli_test.json";
  ASSERT_EQ(run({"verify", "casimir", "--weights", "2,0;1,0", "--points", "1/2,-3", "--seed", "4",
                 "--output", path.string()}),
            0);
  std::ifstream f(path);
  Json j = Json::parse(f);
  EXPECT_EQ(j["version"], 1);
  EXPECT_EQ(j["config"]["command"], "casimir");
  EXPECT_EQ(j["config"]["degree_cap"], "auto");
  EXPECT_TRUE(j["config"].contains("degree_cap_note"));
  ASSERT_EQ(j["checks"].size(), 1u);
  const auto& c = j["checks"][0];
  for (const char* key : {"check_name", "parameters", "status", "expected", "actual", "runtime_ms"})
    EXPECT_TRUE(c.contains(key)) << key;
  EXPECT_EQ(c["status"], "pass");
  EXPECT_TRUE(c["runtime_ms"].is_number_integer());
  for (const auto& [k, v] : c["parameters"].items()) EXPECT_TRUE(v.is_string()) << k;
  for (const auto& [k, v] : j["config"].items()) EXPECT_TRUE(v.is_string()) << k;
  EXPECT_EQ(c["parameters"]["points"], "1/2,-3");
  std::filesystem::remove(path);
}

TEST(RunAndReport, DeterministicModuloRuntime) {
  auto dir = std::filesystem::temp_directory_path();
  auto a = dir / "repcur_det_a.json", b = dir / "repcur_det_b.json";
  ASSERT_EQ(run({"verify", "all", "--profile", "smoke", "--seed", "9", "--output", a.string()}), 0);
  ASSERT_EQ(run({"verify", "all", "--profile", "smoke", "--seed", "9", "--output", b.string()}), 0);
  std::ifstream fa(a), fb(b);
  Json ja = Json::parse(fa), jb = Json::parse(fb);
  EXPECT_GE(ja["checks"].size(), 20u);
  EXPECT_EQ(without_runtimes(ja).dump(), without_runtimes(jb).dump());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
