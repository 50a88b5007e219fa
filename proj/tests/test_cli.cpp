#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "sntrank/cli.hpp"
#include "sntrank/errors.hpp"
#include "sntrank/families.hpp"
#include "sntrank/io.hpp"

namespace sntrank {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ParseTest, Examples) {
  EXPECT_EQ(std::get<SimpleGraph>(parse_graph("graph simple\nv 2\ne 0 1")), path_graph(2));
  const auto m = std::get<WeightedMultigraph>(parse_graph("graph multi\nv 1\ne 0 0 1\ne 0 0 1"));
  EXPECT_EQ(m.edge_count(), 2u);
  EXPECT_EQ(epsilon(m, Weight::kOne), 2u);
  const auto l = std::get<SimpleGraph>(parse_graph("graph simple\nv 1\ne 0 0"));
  EXPECT_TRUE(l.has_loop(0));
}

TEST(ParseTest, CommentsAndBlankLines) {
  const auto g = parse_graph("# header\n\ngraph simple\n# size\nv 3\ne 0 1\n\ne 1 2\n");
  EXPECT_EQ(std::get<SimpleGraph>(g), path_graph(3));
}

TEST(ParseTest, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("graph simple\nv 2\ne 0 5"), 3);
  EXPECT_EQ(line_of("graph simple\nv 2\ne 0 1\ne 1 0"), 4);
  EXPECT_EQ(line_of("graph multi\nv 2\ne 0 1 2"), 3);
  EXPECT_EQ(line_of("graph tree\n"), 1);
  EXPECT_EQ(line_of("# only a comment\nv 2"), 2);
}

TEST(ParseTest, SerializeRoundTrip) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    const auto s = sample_family_graph(8, rng);
    EXPECT_EQ(std::get<SimpleGraph>(parse_graph(serialize(s))), s);
    const auto m = sample_multigraph(5, 9, rng);
    const auto text = serialize(m);
    const auto back = std::get<WeightedMultigraph>(parse_graph(text));
    EXPECT_EQ(serialize(back), text);
    EXPECT_TRUE(isomorphic(back, m));
  }
}

TEST(DotTest, MarksOneEdges) {
  const auto dot = to_dot(fig13_gamma(), "fixture");
  EXPECT_NE(dot.find("graph fixture {"), std::string::npos);
  EXPECT_NE(dot.find("color=\"blue\""), std::string::npos);
}

TEST(CliTest, PetersenGap) {
  const auto r = run({"gap", "--family", "petersen"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "gap 0 stp 10\n");
}

TEST(CliTest, WheelOracle) {
  const auto r = run({"stp-oracle", "--family", "wheel:5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("stp 3\n", 0), 0u);
  EXPECT_NE(r.out.find("join "), std::string::npos);
}

TEST(CliTest, ReduceFixture) {
  const auto r = run({"reduce", "--family", "fig13_gamma"});
  EXPECT_EQ(r.code, 0);
  ASSERT_EQ(r.out.rfind("t 4\n", 0), 0u);
  const auto reduced = std::get<WeightedMultigraph>(parse_graph(r.out.substr(4)));
  EXPECT_TRUE(isomorphic(reduced, p2oo_weighted()));
}

TEST(CliTest, ReadsFiles) {
  const auto r = run({"gapstar", std::string(SNTRANK_DATA_DIR) + "/fig4_kappa.graph"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("gapstar 3 ", 0), 0u);
}

TEST(CliTest, CheckReportsViolation) {
  const auto r = run({"check", "--family", "wheel:5"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out, "in_family no\nviolation 0 2\n");
  EXPECT_EQ(run({"check", "--family", "petersen"}).out, "in_family yes\n");
}

TEST(CliTest, ExitCodes) {
  // Two 4-cycles sharing an edge: no preprocessing rule removes the squares.
  const auto path = std::filesystem::temp_directory_path() / "sntrank_two_squares.graph";
  std::ofstream(path) << "graph simple\nv 6\ne 0 1\ne 1 2\ne 2 3\ne 3 0\ne 0 4\ne 1 5\ne 4 5\n";
  EXPECT_EQ(run({"gap", path.string()}).code, 3);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"gap", "--family", "wheel:5"}).out, "gap 2 stp 3\n");
  EXPECT_EQ(run({"gap"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gap", "/nonexistent/graph.txt"}).code, 2);
  EXPECT_EQ(run({"stp-oracle", "--family", "petersen"}).code, 4);
  EXPECT_EQ(run({"gap", "--family", "garlic:1"}).code, 1);
}

TEST(CliTest, SampleIsSeeded) {
  const auto a = run({"--seed", "7", "sample", "--n", "9"});
  const auto b = run({"--seed", "7", "sample", "--n", "9"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"--seed", "8", "sample", "--n", "9"}).out);
}

TEST(CliTest, GoldenJson) {
  const auto r = run({"--format", "json", "gapstar", "--trace", "--family", "fig13_gamma"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(std::string(SNTRANK_GOLDEN_DIR) + "/gapstar_fig13.json"));
}

TEST(CliTest, DotDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "sntrank_dot_test";
  std::filesystem::remove_all(dir);
  const auto r = run({"--dot", dir.string(), "reduce", "--family", "fig13_gamma"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "input.dot"));
  EXPECT_TRUE(std::filesystem::exists(dir / "output.dot"));
  EXPECT_TRUE(std::filesystem::exists(dir / "step_01_tau1.dot"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace sntrank
