#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "thuemorse/algebra.hpp"

namespace thuemorse {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, SpreadOfOneMinusXZero) {
  const Outcome r = run({"char", "spread", "1 - x0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, GeneratorOrder) {
  const Outcome r = run({"group", "trivial", "x1^3", "--q", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
}

TEST(Cli, InfinitesimalSuite) {
  const Outcome r = run({"verify", "lemma-infinitesimal", "--q", "3", "--kmax", "4"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("2/3^4"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
}

TEST(Cli, GlobalFlagsWorkOnEitherSide) {
  EXPECT_EQ(run({"--q", "3", "word", "prefix", "5"}).out, run({"word", "prefix", "5", "--q", "3"}).out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"group", "trivial", "x0"}).code, cli::kExitOk);
  EXPECT_EQ(run({"group", "trivial", "x0^2", "--cap-states", "1"}).code, cli::kExitUnknown);
  EXPECT_EQ(run({"algebra", "zero", "1 - x0^8", "--depth", "0"}).code, cli::kExitUnknown);
  EXPECT_EQ(run({"char", "spread", "1 - x0^8", "--cap-classes", "1"}).code, cli::kExitUnknown);
  EXPECT_EQ(run({"char", "spread", "x5"}).code, cli::kExitFail);
  EXPECT_EQ(run({"nonsense"}).code, cli::kExitFail);
  EXPECT_EQ(run({"char"}).code, cli::kExitFail);
  EXPECT_EQ(run({"--ring", "Fp:4", "char", "spread", "x0"}).code, cli::kExitFail);
  EXPECT_EQ(run({"--mode", "A", "algebra", "star", "x0"}).code, cli::kExitFail);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, UsageOnParseError) {
  const Outcome r = run({"word", "prefix"});
  EXPECT_EQ(r.code, cli::kExitFail);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, WreathJson) {
  const Outcome r = run({"--json", "--q", "3", "group", "decompose", "x0"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["perm"], nlohmann::json({2, 0, 1}));
  EXPECT_EQ(j["sections"], nlohmann::json({"x0", "x1", "x2"}));
}

TEST(Cli, ExactJson) {
  const auto j = nlohmann::json::parse(run({"--json", "char", "spread", "1 - x0^8"}).out);
  EXPECT_EQ(j["value"], "1/2");
  EXPECT_EQ(j["num"], "1");
  EXPECT_EQ(j["den"], "2");
  EXPECT_TRUE(j.contains("classes_used"));
  EXPECT_TRUE(j.contains("depth"));
}

TEST(Cli, VerdictJson) {
  EXPECT_EQ(nlohmann::json::parse(run({"--json", "group", "equal", "x1", "x1^-1"}).out), "true");
}

// Every element string the CLI emits reparses to the element it names.
TEST(Cli, ElementJsonRoundTrips) {
  const Algebra A(Alphabet(3));
  const auto phi_json = nlohmann::json::parse(run({"--json", "--q", "3", "algebra", "phi", "1 - x0 x1 + 2 x2^-1"}).out);
  const Matrix m = phi(A.parse("1 - x0 x1 + 2 x2^-1"));
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) EXPECT_EQ(A.parse(phi_json[i][j].get<std::string>()), m(i, j));

  const auto star_json = nlohmann::json::parse(run({"--json", "--q", "3", "algebra", "star", "3 x0 x1^-1 - 1/2"}).out);
  const Element s = A.parse(star_json["element"].get<std::string>());
  EXPECT_EQ(s, star(A.parse("3 x0 x1^-1 - 1/2")));
  Element from_terms = A.zero();
  for (const auto& [word, coeff] : star_json["terms"].items())
    from_terms += A.parse("(" + coeff.get<std::string>() + ") " + word);
  EXPECT_EQ(from_terms, s);

  const auto omega = nlohmann::json::parse(run({"--json", "algebra", "omega", "1", "--kmax", "1", "--limit", "20"}).out);
  const Algebra B(Alphabet(2));
  const auto expected = omega_enumerate(B, 1, 1, 20);
  ASSERT_EQ(omega["elements"].size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    EXPECT_EQ(B.parse(omega["elements"][i].get<std::string>()), expected[i]);
}

TEST(Cli, WitnessRoundTrips) {
  const auto j = nlohmann::json::parse(run({"--json", "char", "witness", "5/2^3"}).out);
  ASSERT_TRUE(j["found"].get<bool>());
  const Outcome r = run({"char", "spread", j["element"].get<std::string>()});
  EXPECT_EQ(r.out, "5/2^3\n");
}

TEST(Cli, JuliaRenderWritesImage) {
  const std::string path = ::testing::TempDir() + "thuemorse_cli_julia.pgm";
  const Outcome r = run({"julia", "render", "--preset", "2", "--points", "2000", "--width", "40",
                     "--height", "30", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path, std::ios::binary);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "P5");
  std::getline(in, header);
  EXPECT_EQ(header, "40 30");
  std::remove(path.c_str());
}

TEST(Cli, RepeatedRunsDoNotShareOptions) {
  EXPECT_EQ(run({"word", "subst", "x0", "--times", "3"}).out, "x0 x1 x1 x0 x1 x0 x0 x1\n");
  EXPECT_EQ(run({"word", "subst", "x0"}).out, "x0 x1\n");
}

}  // namespace
}  // namespace thuemorse
