#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qjlab/cli.hpp"
#include "qjlab/serialize.hpp"
#include "qjlab/expr.hpp"

using namespace qjlab;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qjlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> records(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

bool has_line(const std::string& text, const std::string& start, const std::string& value) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(start, 0) == 0 && line.find(value) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Cli, Info) {
  auto r = invoke({"info", "Z 12"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "J ", "<6>"));
  EXPECT_TRUE(has_line(r.out, "N ", "<6>"));
  EXPECT_TRUE(has_line(r.out, "quasi_local", "false"));
  EXPECT_TRUE(has_line(invoke({"info", "Z 2"}).out, "field", "true"));
  r = invoke({"info", "idl (Z 4) selfmod"});
  EXPECT_NE(r.out.find("J = J(R)(+)M: true"), std::string::npos);
  const auto rec = records(invoke({"--format", "record", "info", "Z 12"}).out);
  ASSERT_EQ(rec.size(), 1u);
  EXPECT_EQ(rec[0]["jacobson"], "<6>");
  EXPECT_EQ(rec[0]["flags"]["quasi_local"], false);
}

TEST(Cli, ClassifyFinite) {
  auto r = invoke({"classify", "Z 8", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "quasi_j ", "true"));
  EXPECT_TRUE(has_line(r.out, "j_ideal ", "true"));
  EXPECT_TRUE(has_line(r.out, "n_ideal ", "true"));
  EXPECT_TRUE(has_line(invoke({"classify", "Z 6", "2"}).out, "quasi_j ", "false"));
  EXPECT_EQ(invoke({"classify", "Z 6", "1"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"classify", "Z 6", "9"}).code, cli::kUsage);
}

TEST(Cli, ClassifySymbolic) {
  const auto r = invoke({"classify", "--sym", "ZplusZ", "0,2Z"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "quasi_j ", "true"));
  EXPECT_TRUE(has_line(r.out, "j_ideal ", "false"));
  EXPECT_TRUE(has_line(r.out, "j_ideal ", "((2,0), (0,1))"));
  EXPECT_EQ(invoke({"classify", "--sym", "Q", "0"}).code, cli::kUsage);
}

// Text and record output agree, and records round-trip.
TEST(Cli, RecordTwinsAgree) {
  const auto text = invoke({"classify", "Z 12", "4"}).out;
  const auto rec = records(invoke({"--format", "record", "classify", "Z 12", "4"}).out);
  const auto R = construct::parse_ring("Z 12");
  ASSERT_EQ(rec.size(), classify::ideal_predicate_names().size());
  for (const auto& j : rec) {
    const auto v = serialize::verdict_from_record(j, *R);
    EXPECT_TRUE(has_line(text, v.predicate + " ", v.holds ? "true" : "false")) << v.predicate;
  }
  const auto sym = records(invoke({"classify", "--sym", "--format", "record", "Z(+)Z2", "0,1"}).out);
  ASSERT_FALSE(sym.empty());
  for (const auto& j : sym)
    EXPECT_NO_THROW(serialize::sym_verdict_from_record(j, zsym::SymRing::idealization(2)));
}

TEST(Cli, Ideals) {
  const auto r = invoke({"ideals", "Z 12"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
  EXPECT_EQ(records(invoke({"ideals", "--format", "record", "Z 12"}).out).size(), 6u);
  EXPECT_NE(invoke({"ideals", "--sym", "ZplusZ"}).out.find("0(+)2Z"), std::string::npos);
}

TEST(Cli, Verify) {
  auto r = invoke({"verify", "--only", "T-R"});
  EXPECT_EQ(r.code, 0) << r.out;
  r = invoke({"verify", "--only", "bogus"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("bogus"), std::string::npos);
  // T-ZERO fails on the default catalog, so the full suite exits 1.
  r = invoke({"verify", "--all"});
  EXPECT_EQ(r.code, cli::kFailed);
  EXPECT_NE(r.out.find("FAIL T-ZERO"), std::string::npos);
  const auto rec = records(invoke({"verify", "--format", "record", "--only", "T-EQ,T-JI"}).out);
  ASSERT_EQ(rec.size(), 1u);
  EXPECT_EQ(rec[0]["checks"].size(), 2u);
  EXPECT_EQ(rec[0]["failure_count"], 0);
}

TEST(Cli, VerifyWithRecipe) {
  const std::string path = ::testing::TempDir() + "qjlab_recipe.json";
  {
    std::ofstream f(path);
    f << R"j({"rings": ["prod (Z 2) (Z 3)", "prod (Z 4) (Z 2)"]})j";
  }
  auto r = invoke({"verify", "--recipe", path, "--only", "T-R"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rings: 2 finite"), std::string::npos);
  {
    std::ofstream f(path);
    f << R"j({"zmod": {"max": 9999}})j";
  }
  EXPECT_EQ(invoke({"verify", "--recipe", path}).code, cli::kUsage);
  EXPECT_EQ(invoke({"verify", "--recipe", "/nonexistent/recipe.json"}).code, cli::kUsage);
  std::remove(path.c_str());
}

TEST(Cli, Search) {
  EXPECT_EQ(invoke({"search", "quasiJ_not_J"}).out, "none\n");
  const auto r = invoke({"search", "--sym", "quasiJ_not_J"});
  EXPECT_NE(r.out.find("Z(+)Z 0(+)2Z"), std::string::npos);
  EXPECT_EQ(invoke({"search", "bogus"}).code, cli::kUsage);
}

TEST(Cli, Example) {
  auto r = invoke({"example", "example2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(r.out.size() - 5), "PASS\n");
  r = invoke({"example", "colon_example"});
  EXPECT_NE(r.out.find("<6>"), std::string::npos);
  EXPECT_NE(r.out.find("<3>"), std::string::npos);
  EXPECT_EQ(invoke({"example", "nope"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"example", "--all"}).code, 0);
  EXPECT_EQ(invoke({"example", "--all", "--mutate", "Idl.j-ideal"}).code, cli::kFailed);
  EXPECT_EQ(invoke({"example", "--all", "--mutate", "nope"}).code, cli::kUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, cli::kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"info"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"info", "Z"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"--format", "xml", "info", "Z 4"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}
