#include <random>

#include "gtest/gtest.h"
#include "sntrank/engine.hpp"
#include "sntrank/errors.hpp"
#include "sntrank/families.hpp"
#include "sntrank/reductions.hpp"
#include "sntrank/transforms.hpp"
#include "support.hpp"

namespace sntrank {
namespace {

constexpr Weight k0 = Weight::kZero;
constexpr Weight k1 = Weight::kOne;

WeightedMultigraph star(std::size_t m) { return as_zero_weight(complete_bipartite(1, m)); }

TEST(EliminateLeafTest, OneEdgeDropsLeafOnly) {
  WeightedMultigraph g(2);
  g.add_edge(0, 1, k1);
  const auto r = eliminate_leaf(g, 1);
  EXPECT_EQ(r.n(), 1u);
  EXPECT_EQ(r.edge_count(), 0u);
}

TEST(EliminateLeafTest, ZeroEdgeRemovesNeighbourToo) {
  const auto r = eliminate_leaf(star(3), 1);
  EXPECT_EQ(r.n(), 2u);
  EXPECT_EQ(r.edge_count(), 0u);
}

TEST(EliminateLeafTest, NonLeafRejected) {
  EXPECT_THROW(eliminate_leaf(star(3), 0), PreconditionViolated);
}

TEST(SuppressDeg2Test, WeightFormula) {
  const std::pair<Weight, Weight> in[] = {{k0, k0}, {k1, k1}, {k0, k1}};
  const Weight out[] = {k1, k1, k0};
  for (int i = 0; i < 3; ++i) {
    WeightedMultigraph g(3);
    g.add_edge(0, 1, in[i].first);
    g.add_edge(1, 2, in[i].second);
    const auto r = suppress_deg2(g, 1);
    ASSERT_EQ(r.edge_count(), 1u);
    EXPECT_EQ(r.edge(0).w, out[i]);
  }
}

TEST(SuppressDeg2Test, ParallelPairBecomesOneLoop) {
  WeightedMultigraph g(2);
  g.add_edge(0, 1, k0);
  g.add_edge(0, 1, k0);
  g.add_edge(0, 0, k0);
  const auto r = suppress_deg2(g, 1);
  ASSERT_EQ(r.n(), 1u);
  EXPECT_EQ(epsilon(r, k1), 1u);
}

TEST(SuppressDeg2Test, LoneLoopVanishes) {
  WeightedMultigraph g(1);
  g.add_edge(0, 0, k1);
  EXPECT_EQ(suppress_deg2(g, 0).n(), 0u);
}

TEST(Contract1EdgeTest, RejectsZeroEdge) {
  WeightedMultigraph g(2);
  g.add_edge(0, 1, k0);
  EXPECT_THROW(contract_1edge(g, 0), PreconditionViolated);
}

TEST(Eliminate1LoopTest, Examples) {
  WeightedMultigraph three(1);
  for (int i = 0; i < 3; ++i) three.add_edge(0, 0, k1);
  const auto r = eliminate_1loop(three, 0);
  EXPECT_EQ(r.n(), 2u);
  EXPECT_EQ(r.edge_count(), 0u);

  WeightedMultigraph one(1);
  one.add_edge(0, 0, k1);
  EXPECT_EQ(eliminate_1loop(one, 0).n(), 0u);
}

TEST(Eliminate1LoopTest, ZeroLoopRejected) {
  WeightedMultigraph g(1);
  g.add_edge(0, 0, k0);
  EXPECT_THROW(eliminate_1loop(g, 0), PreconditionViolated);
}

TEST(Dedupe0EdgesTest, Examples) {
  WeightedMultigraph par(2);
  par.add_edge(0, 1, k0);
  par.add_edge(1, 0, k0);
  EXPECT_EQ(dedupe_0edges(par).edge_count(), 1u);

  WeightedMultigraph loops(1);
  for (int i = 0; i < 3; ++i) loops.add_edge(0, 0, k0);
  EXPECT_EQ(dedupe_0edges(loops).edge_count(), 1u);

  const auto pet = as_zero_weight(petersen_graph());
  EXPECT_EQ(dedupe_0edges(pet), pet);
}

TEST(Dedupe0EdgesTest, KeepsOneEdges) {
  WeightedMultigraph g(2);
  g.add_edge(0, 1, k1);
  g.add_edge(0, 1, k1);
  EXPECT_EQ(dedupe_0edges(g).edge_count(), 2u);
}

TEST(Tau1Test, FixtureCredit) {
  const auto p = tau1(fig13_gamma());
  EXPECT_EQ(p.t, 4);
  EXPECT_EQ(p.graph.n(), 4u);
  EXPECT_TRUE(all_zero_weight(p.graph));
}

TEST(Tau1Test, AllZeroUnchanged) {
  const auto g = as_zero_weight(petersen_graph());
  const auto p = tau1(g);
  EXPECT_EQ(p.t, 0);
  EXPECT_FALSE(p.changed);
  EXPECT_TRUE(isomorphic(p.graph, g));
}

TEST(Tau1Test, TwoOneLoops) {
  WeightedMultigraph g(1);
  g.add_edge(0, 0, k1);
  g.add_edge(0, 0, k1);
  const auto p = tau1(g);
  EXPECT_EQ(p.graph.n(), 0u);
  EXPECT_EQ(p.t, 1);
}

TEST(Tau2Test, StarCredit) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto p = tau2(star(m));
    EXPECT_EQ(p.graph.n(), 0u);
    EXPECT_EQ(p.t, static_cast<long>(m) - 1);
  }
}

TEST(Tau2Test, PathOfFive) {
  // Leaves 0, 4 with neighbours 1, 3; the centre survives alone.
  const auto p = tau2(as_zero_weight(path_graph(5)));
  EXPECT_EQ(p.t, 0);
  EXPECT_EQ(p.graph.n(), 1u);
}

TEST(Tau2Test, LeaflessUnchanged) {
  const auto g = as_zero_weight(cycle_graph(5));
  const auto p = tau2(g);
  EXPECT_EQ(p.t, 0);
  EXPECT_FALSE(p.changed);
}

TEST(Tau2Test, RequiresZeroWeights) {
  WeightedMultigraph g(2);
  g.add_edge(0, 1, k1);
  EXPECT_THROW(tau2(g), PreconditionViolated);
}

TEST(Tau3Test, IsolatedCredit) {
  const auto p = tau3(WeightedMultigraph(5));
  EXPECT_EQ(p.graph.n(), 0u);
  EXPECT_EQ(p.t, 5);
}

TEST(Tau3Test, LoopedStarKeepsShape) {
  // K_{1,3} with 0-loops on the leaves, plus two lone looped vertices.
  auto g = star(3);
  for (Vertex v = 1; v <= 3; ++v) g.add_edge(v, v, k0);
  const Vertex a = g.add_vertex(), b = g.add_vertex();
  g.add_edge(a, a, k0);
  g.add_edge(b, b, k0);
  auto want = star(3);
  for (Vertex v = 1; v <= 3; ++v) want.add_edge(v, v, k0);
  const auto p = tau3(g);
  EXPECT_EQ(p.t, 0);
  EXPECT_TRUE(isomorphic(p.graph, want));
}

TEST(Tau3Test, AgreesWithKappaZeta) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 300; ++i) {
    const auto g = sample_multigraph(5, 7, rng, 0.25, 0.5);
    std::vector<Vertex> iso;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (g.degree(v) == 0) iso.push_back(v);
    }
    const auto trimmed = remove_vertices(g, iso).graph;
    EXPECT_TRUE(isomorphic(tau3(g).graph, kappa(zeta(trimmed)).gamma));
  }
}

TEST(TauTest, FixtureReducesToLoopedPair) {
  const auto r = tau(fig13_gamma());
  EXPECT_EQ(r.t, 4);
  EXPECT_TRUE(isomorphic(r.reduced, p2oo_weighted()));
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace[0].op, Op::kTau1);
  EXPECT_EQ(r.trace[0].t_delta, 4);
}

TEST(TauTest, TrivialInputs) {
  const auto pet = as_zero_weight(petersen_graph());
  const auto r = tau(pet);
  EXPECT_EQ(r.t, 0);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(r.reduced, pet);
  EXPECT_EQ(tau(WeightedMultigraph()).reduced.n(), 0u);
}

TEST(TauTest, FixedPointInvariants) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    const auto g = sample_multigraph(7, 11, rng, 0.2, 0.4);
    const auto r = tau(g);
    EXPECT_TRUE(is_tau_reduced(r.reduced));
    const auto again = tau(r.reduced);
    EXPECT_EQ(again.t, 0);
    EXPECT_TRUE(isomorphic(again.reduced, r.reduced));
  }
}

TEST(TauTest, IndependentOfVertexOrder) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 200; ++i) {
    const auto g = sample_multigraph(6, 9, rng, 0.2, 0.4);
    std::vector<Vertex> perm(g.n());
    for (Vertex v = 0; v < g.n(); ++v) perm[v] = g.n() - 1 - v;
    const auto a = tau(g);
    const auto b = tau(permute(g, perm));
    EXPECT_EQ(a.t, b.t);
    EXPECT_TRUE(isomorphic(a.reduced, b.reduced));
  }
}

TEST(TauTest, PreservesGapStar) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 150; ++i) {
    const auto g = testing::small_multigraph(rng, 14);
    const auto r = tau(g);
    EXPECT_EQ(gap_direct(zeta(g)), gap_direct(zeta(r.reduced)) + r.t);
  }
}

TEST(OpNameTest, Names) {
  EXPECT_EQ(op_name(Op::kTau2), "tau2");
  EXPECT_EQ(op_name(Op::kElim1Loop), "elim_1loop");
}

}  // namespace
}  // namespace sntrank
