#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "commands.hpp"
#include "gtest/gtest.h"
#include "quadtile/document.hpp"

namespace quadtile::cli {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("quadtile_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  static std::string problem(const std::string& shapes, const std::string& target) {
    return R"({"p":"2","shapes":)" + shapes + R"(,"target":)" + target + "}";
  }

  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    args.insert(args.begin(), "quadtile");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

constexpr const char* kOnePlusRoot2 = R"([{"e":"1","f":"1"}])";
constexpr const char* kThreePlusRoot2 = R"([{"e":"3","f":"1"}])";
constexpr const char* kOne = R"({"e":"1","f":"0"})";

TEST_F(Cli, DecideExitCodes) {
  EXPECT_EQ(call({"decide", "--problem", file("no.json", problem(kOnePlusRoot2, kOne))}), kExitNo);
  EXPECT_NE(out_.str().find("verdict: NO"), std::string::npos);

  EXPECT_EQ(call({"decide", "--problem", file("yes.json", problem(kThreePlusRoot2, kOne))}), kExitYes);
  EXPECT_NE(out_.str().find("AllPositiveConj"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("1/3"), std::string::npos) << out_.str();

  const auto mixed = problem(R"([{"e":"3","f":"1"},{"e":"1","f":"1"}])", R"({"e":"5","f":"0"})");
  EXPECT_EQ(call({"decide", "--classify", "--problem", file("mixed.json", mixed)}), kExitYes);
  EXPECT_NE(out_.str().find("Mixed"), std::string::npos);
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(call({"decide", "--problem", file("bad.json", "{not json")}), kExitInputError);
  EXPECT_EQ(call({"decide", "--problem", path("missing.json")}), kExitInputError);
  const auto square_root = R"({"p":"9/4","shapes":[{"e":"1","f":"1"}],"target":{"e":"1","f":"0"}})";
  EXPECT_EQ(call({"decide", "--problem", file("p.json", square_root)}), kExitInputError);
  EXPECT_NE(err_.str().find("RationalSquareRoot"), std::string::npos) << err_.str();
  EXPECT_EQ(call({"frobnicate"}), kExitInputError);
  EXPECT_EQ(call({}), kExitInputError);
  EXPECT_EQ(call({"verify", "--problem", path("x.json")}), kExitInputError);
}

TEST_F(Cli, TileThenVerify) {
  const auto prob = file("root2.json", problem(kOnePlusRoot2, R"({"e":"0","f":"1"})"));
  ASSERT_EQ(call({"tile", "--problem", prob, "--out", path("t.json"), "--svg", path("t.svg")}), kExitYes);
  const Tiling t = parse_tiling(slurp(path("t.json")));
  EXPECT_EQ(t.size(), 4u);
  const std::string svg = slurp(path("t.svg"));
  std::size_t rects = 0;
  for (auto pos = svg.find("<rect"); pos != std::string::npos; pos = svg.find("<rect", pos + 1)) ++rects;
  EXPECT_EQ(rects, 4u);

  EXPECT_EQ(call({"verify", "--problem", prob, "--tiling", path("t.json")}), kExitYes);
  EXPECT_NE(out_.str().find("result: PASS"), std::string::npos);
  EXPECT_NE(out_.str().find("area_additivity: true"), std::string::npos);
}

TEST_F(Cli, TileDoubling) {
  const auto prob = file("d.json", problem(kOnePlusRoot2, R"({"e":"2","f":"2"})"));
  ASSERT_EQ(call({"tile", "--problem", prob}), kExitYes);
  EXPECT_EQ(parse_tiling(out_.str()).size(), 2u);
}

TEST_F(Cli, TileNoInstanceWritesCertificate) {
  const auto prob = file("no.json", problem(kOnePlusRoot2, kOne));
  ASSERT_EQ(call({"tile", "--problem", prob, "--out", path("c.json")}), kExitNo);
  const json doc = json::parse(slurp(path("c.json")));
  EXPECT_EQ(doc["core"]["coeffs"]["A"], "0");
  EXPECT_EQ(doc["core"]["coeffs"]["B"], "-1");
  EXPECT_EQ(doc["core"]["coeffs"]["C"], "0");
}

TEST_F(Cli, VerifyDetectsDamage) {
  const auto prob = file("sq.json", problem(kThreePlusRoot2, kOne));
  ASSERT_EQ(call({"tile", "--problem", prob, "--out", path("t.json")}), kExitYes);
  json doc = json::parse(slurp(path("t.json")));
  ASSERT_EQ(doc["tiles"].size(), 48u);

  json deleted = doc;
  deleted["tiles"].erase(deleted["tiles"].begin() + 5);
  EXPECT_EQ(call({"verify", "--problem", prob, "--tiling", file("del.json", deleted.dump())}), kExitNo);
  EXPECT_NE(out_.str().find("covered: false"), std::string::npos) << out_.str();

  // A 1 x (3+2 sqrt 2) tile does not have ratio 3 + sqrt 2.
  const auto wrong = R"({"p":"2","bounds":{"W":{"e":"1","f":"0"},"H":{"e":"3","f":"2"}},
    "tiles":[{"x":{"e":"0","f":"0"},"y":{"e":"0","f":"0"},"w":{"e":"1","f":"0"},"h":{"e":"3","f":"2"}}]})";
  const auto prob2 = file("w.json", problem(kOnePlusRoot2, R"({"e":"3","f":"2"})"));
  EXPECT_EQ(call({"verify", "--problem", prob2, "--tiling", file("wrong.json", wrong)}), kExitNo);
  EXPECT_NE(out_.str().find("ratios_ok: false"), std::string::npos) << out_.str();
}

TEST_F(Cli, VerifyRejectsMixedFields) {
  const auto prob = file("sq.json", problem(kThreePlusRoot2, kOne));
  ASSERT_EQ(call({"tile", "--problem", prob, "--out", path("t.json")}), kExitYes);
  const auto other = R"({"p":"3","shapes":[{"e":"3","f":"1"}],"target":{"e":"1","f":"0"}})";
  EXPECT_EQ(call({"verify", "--problem", file("p3.json", other), "--tiling", path("t.json")}), kExitInputError);
  EXPECT_NE(err_.str().find("ContextMismatch"), std::string::npos);
}

TEST_F(Cli, Certify) {
  ASSERT_EQ(call({"certify", "--problem", file("a.json", problem(kOnePlusRoot2, kOne))}), kExitYes);
  EXPECT_EQ(json::parse(out_.str())["core"]["quarter_discriminant"], "-1");

  const auto b = file("b.json", problem(kThreePlusRoot2, R"({"e":"1","f":"1"})"));
  ASSERT_EQ(call({"certify", "--problem", b, "--out", path("c.json")}), kExitYes);
  EXPECT_EQ(json::parse(slurp(path("c.json")))["core"]["quarter_discriminant"], "-56");

  EXPECT_EQ(call({"certify", "--problem", file("y.json", problem(kThreePlusRoot2, kOne))}), kExitInputError);
  EXPECT_NE(err_.str().find("NotAnImpossibleInstance"), std::string::npos);
}

}  // namespace
}  // namespace quadtile::cli
