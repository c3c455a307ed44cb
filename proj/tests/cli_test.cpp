#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jsjd/cli.hpp"
#include "jsjd/ivanov.hpp"
#include "jsjd/parse.hpp"
#include "jsjd/random.hpp"
#include "support.hpp"

namespace jsjd {
namespace {

using testing::W;
using Json = nlohmann::ordered_json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_command(const cli::Command& cmd) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(cmd, out, err);
  return {code, out.str(), err.str()};
}

class ScopedEnv {
 public:
  explicit ScopedEnv(const char* value) { ::setenv(cli::kBoundVariable, value, 1); }
  ~ScopedEnv() { ::unsetenv(cli::kBoundVariable); }
};

TEST(Cli, ClassifySurface) {
  const auto r = run_command(cli::Classify{"[a,b]"});
  EXPECT_EQ(r.code, cli::kOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["input"], "abAB");
  EXPECT_EQ(j["verdict"], "SurfaceOrientableGenus2");
}

TEST(Cli, ClassifyRejectsBadInput) {
  EXPECT_EQ(run_command(cli::Classify{""}).code, cli::kUsage);
  EXPECT_EQ(run_command(cli::Classify{"aA"}).code, cli::kUsage);
  EXPECT_EQ(run_command(cli::Classify{"a^0"}).code, cli::kUsage);
  EXPECT_EQ(run_command(cli::Classify{"ac"}).code, cli::kUsage);
  const auto r = run_command(cli::Classify{"aabb", std::nullopt, "svg"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, BoundFlagTakesPrecedenceOverEnvironment) {
  ScopedEnv env("not-a-number");
  EXPECT_EQ(run_command(cli::Classify{"aaabbb"}).code, cli::kUsage);
  EXPECT_EQ(run_command(cli::Classify{"aaabbb", 100}).code, cli::kOk);
}

TEST(Cli, EnvironmentBoundIsRead) {
  ScopedEnv env("0");
  const auto r = run_command(cli::Classify{"aaabbb"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(Json::parse(r.out)["verdict"], "Case1_QH3");
}

TEST(Cli, ClassifyDotAndFileOutput) {
  const auto dot = run_command(cli::Classify{"aaabbb", std::nullopt, "dot"});
  EXPECT_EQ(dot.code, cli::kOk);
  EXPECT_EQ(dot.out.rfind("digraph jsj {", 0), 0u);
  EXPECT_NE(dot.out.find("shape=ellipse"), std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "jsjd_cli_test.json";
  const auto r = run_command(cli::Classify{"aaabb", std::nullopt, "json", path.string()});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  EXPECT_EQ(j["verdict"], "Case1_Moebius");
  std::filesystem::remove(path);
}

TEST(Cli, WhiteheadCommands) {
  const Json min = Json::parse(run_command(cli::OrbitMin{"a^3 b a b"}).out);
  EXPECT_EQ(min["length"], 4);
  const Json prim = Json::parse(run_command(cli::IsPrimitive{"aab"}).out);
  EXPECT_EQ(prim["primitive"], true);
  EXPECT_FALSE(prim["chain"].is_null());
  const Json not_prim = Json::parse(run_command(cli::IsPrimitive{"[a,b]"}).out);
  EXPECT_EQ(not_prim["primitive"], false);
  EXPECT_TRUE(not_prim["chain"].is_null());
  const Json eq = Json::parse(run_command(cli::AutEquiv{"aabb", "abAB"}).out);
  EXPECT_EQ(eq["equivalent"], false);
  EXPECT_EQ(Json::parse(run_command(cli::AutEquiv{"aab", "b"}).out)["equivalent"], true);
}

TEST(Cli, Membership) {
  const auto r = run_command(cli::Membership{"(ab)^3 aB", "ab,aB", true});
  EXPECT_EQ(r.code, cli::kOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["member"], true);
  EXPECT_FALSE(j["rewritten"].is_null());
  EXPECT_EQ(j["basis"].size(), 2u);
  EXPECT_EQ(Json::parse(run_command(cli::Membership{"a", "aa,c"}).out)["member"], false);
}

TEST(Cli, IvanovEmitAndVerify) {
  const Json word = Json::parse(run_command(cli::IvanovEmit{false}).out);
  EXPECT_EQ(word["length"], 115200);
  EXPECT_EQ(parse_word(word["word"].get<std::string>()), ivanov_word());
  const Json compact = Json::parse(run_command(cli::IvanovEmit{true}).out);
  EXPECT_EQ(parse_word(compact["word"].get<std::string>()), ivanov_word());

  const auto r = run_command(cli::IvanovVerify{"all", 20, 7, std::nullopt});
  EXPECT_EQ(r.code, cli::kOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_EQ(j["reports"].size(), 5u);
  EXPECT_EQ(run_command(cli::IvanovVerify{"bogus"}).code, cli::kUsage);
}

TEST(Cli, MrFactorExitCodes) {
  const WordPair a{W("ab"), W("aB")};
  const FreeWord shift = power(evaluate(ivanov_word(), a), 2);
  const Json hom = {{"a1", "ab"},
                    {"a2", "aB"},
                    {"b1", to_string(conjugate(a[0], shift))},
                    {"b2", to_string(conjugate(a[1], shift))}};
  const auto ok = run_command(cli::MrFactor{hom.dump()});
  EXPECT_EQ(ok.code, cli::kOk);
  const Json f = Json::parse(ok.out)["factorization"];
  EXPECT_EQ(f["factor"], "pi");
  EXPECT_EQ(f["k"], 2);

  const auto capped = run_command(cli::MrFactor{hom.dump(), 1});
  EXPECT_EQ(capped.code, cli::kUnfactored);
  EXPECT_TRUE(Json::parse(capped.out)["factorization"].is_null());

  EXPECT_EQ(run_command(cli::MrFactor{R"({"a1":"a","a2":"b","b1":"b","b2":"a"})"}).code, cli::kUsage);
  EXPECT_EQ(run_command(cli::MrFactor{R"({"a1":"a"})"}).code, cli::kUsage);
  EXPECT_EQ(run_command(cli::MrFactor{"{"}).code, cli::kUsage);
}

TEST(Cli, SeededCommandsAreByteIdentical) {
  const std::vector<cli::Command> commands = {
      cli::IvanovVerify{"noncyclic", 30, 9, std::nullopt},
      cli::MrSeparability{15, 4},
      cli::Classify{"bbabbbA"},
      cli::Version{},
  };
  for (const auto& c : commands) {
    const auto first = run_command(c);
    const auto second = run_command(c);
    EXPECT_EQ(first.code, second.code);
    EXPECT_EQ(first.out, second.out);
    EXPECT_FALSE(first.out.empty());
  }
}

TEST(Parse, CanonicalPrintRoundTrips) {
  Rng rng(71);
  for (int i = 0; i < 2000; ++i) {
    const FreeWord w = random_word(rng, 0, 30);
    if (w.empty()) continue;
    EXPECT_EQ(parse_word(to_string(w)), w);
    EXPECT_EQ(parse_word(to_compact_string(w)), w);
  }
}

}  // namespace
}  // namespace jsjd
