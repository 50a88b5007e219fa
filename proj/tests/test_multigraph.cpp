#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "sntrank/errors.hpp"
#include "sntrank/families.hpp"
#include "sntrank/multigraph.hpp"

namespace sntrank {
namespace {

constexpr Weight k0 = Weight::kZero;
constexpr Weight k1 = Weight::kOne;

TEST(MdegreeTest, LoopsCountTwice) {
  WeightedMultigraph g(2);
  for (int i = 0; i < 3; ++i) g.add_edge(0, 0, k1);
  g.add_edge(0, 1, k0);
  EXPECT_EQ(mdegree(g, 0), 7);
  EXPECT_EQ(mdegree(g, 1), 1);
  EXPECT_EQ(mdegree(WeightedMultigraph(1), 0), 0);
}

TEST(MdegreeTest, SumIsTwiceEdgeCount) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    const auto g = sample_multigraph(6, 9, rng);
    int sum = 0;
    for (Vertex v = 0; v < g.n(); ++v) sum += mdegree(g, v);
    EXPECT_EQ(sum, 2 * static_cast<int>(g.edge_count()));
  }
}

TEST(MultigraphTest, IncidentListsLoopOnce) {
  WeightedMultigraph g(1);
  g.add_edge(0, 0, k0);
  EXPECT_EQ(g.incident(0).size(), 1u);
  EXPECT_EQ(g.degree(0), 2);
}

TEST(MultigraphTest, BadVertexThrows) {
  WeightedMultigraph g(1);
  EXPECT_THROW(g.add_edge(0, 1, k0), InvalidArgument);
}

TEST(OneComponentsTest, AllZeroGivesSingletons) {
  const auto rep = one_components(as_zero_weight(petersen_graph()));
  ASSERT_EQ(rep.parts.size(), 10u);
  for (const auto& p : rep.parts) {
    EXPECT_EQ(p.vertices.size(), 1u);
    EXPECT_TRUE(p.tree_like);
  }
}

TEST(OneComponentsTest, OneLoopIsNotTreeLike) {
  WeightedMultigraph g(1);
  g.add_edge(0, 0, k1);
  const auto rep = one_components(g);
  ASSERT_EQ(rep.parts.size(), 1u);
  EXPECT_EQ(rep.parts[0].eps1, 1u);
  EXPECT_FALSE(rep.parts[0].tree_like);
}

TEST(OneComponentsTest, FixtureParts) {
  const auto rep = one_components(fig13_gamma());
  std::vector<std::pair<std::size_t, std::size_t>> sizes;  // (eps1, |V|) of non-tree parts
  std::size_t tree_like = 0;
  for (const auto& p : rep.parts) {
    if (p.tree_like) {
      ++tree_like;
    } else {
      sizes.emplace_back(p.eps1, p.vertices.size());
    }
  }
  std::sort(sizes.begin(), sizes.end());
  const std::vector<std::pair<std::size_t, std::size_t>> want{{1, 1}, {5, 4}, {8, 5}};
  EXPECT_EQ(sizes, want);
  EXPECT_EQ(tree_like, 4u);
}

TEST(ContractEdgeTest, Examples) {
  WeightedMultigraph p2(2);
  p2.add_edge(0, 1, k1);
  EXPECT_EQ(contract_edge(p2, 0).graph.n(), 1u);
  EXPECT_EQ(contract_edge(p2, 0).graph.edge_count(), 0u);

  WeightedMultigraph garlic(2);
  for (int i = 0; i < 4; ++i) garlic.add_edge(0, 1, k1);
  const auto c = contract_edge(garlic, 2).graph;
  ASSERT_EQ(c.n(), 1u);
  EXPECT_EQ(c.edge_count(), 3u);
  for (const auto& e : c.edges()) {
    EXPECT_TRUE(e.is_loop());
    EXPECT_EQ(e.w, k1);
  }
}

TEST(ContractEdgeTest, TriangleLeavesWeightedParallelPair) {
  WeightedMultigraph t(3);
  t.add_edge(0, 1, k0);
  t.add_edge(1, 2, k1);
  t.add_edge(2, 0, k0);
  const auto c = contract_edge(t, 0).graph;
  ASSERT_EQ(c.n(), 2u);
  ASSERT_EQ(c.edge_count(), 2u);
  EXPECT_EQ(c.edge(0), (MultiEdge{0, 1, k1}));
  EXPECT_EQ(c.edge(1), (MultiEdge{1, 0, k0}));
}

TEST(ContractEdgeTest, LoopRejected) {
  WeightedMultigraph g(1);
  g.add_edge(0, 0, k1);
  EXPECT_THROW(contract_edge(g, 0), PreconditionViolated);
}

TEST(CanonicalFormTest, WeightsDistinguishLoops) {
  WeightedMultigraph a(1), b(1);
  a.add_edge(0, 0, k0);
  b.add_edge(0, 0, k1);
  EXPECT_NE(canonical_code(a), canonical_code(b));
}

TEST(CanonicalFormTest, RelabeledPathsAgree) {
  WeightedMultigraph a(3), b(3);
  a.add_edge(0, 1, k0);
  a.add_edge(1, 2, k0);
  b.add_edge(1, 0, k0);
  b.add_edge(0, 2, k0);
  EXPECT_EQ(canonical_code(a), canonical_code(b));
}

TEST(CanonicalFormTest, ParallelMultiplicityMatters) {
  WeightedMultigraph a(2), b(2);
  a.add_edge(0, 1, k0);
  b.add_edge(0, 1, k0);
  b.add_edge(0, 1, k0);
  EXPECT_FALSE(isomorphic(a, b));
}

TEST(CanonicalFormTest, InvariantUnderRandomPermutation) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 10;
    const auto g = sample_multigraph(n, rng() % 16, rng, 0.2, 0.5);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(g), canonical_code(permute(g, perm)));
  }
}

TEST(CanonicalFormTest, RegularGraphsNeedIndividualization) {
  // Petersen and the 5-prism are both 3-regular on 10 vertices.
  auto prism = as_zero_weight(disjoint_union(cycle_graph(5), cycle_graph(5)));
  for (Vertex i = 0; i < 5; ++i) prism.add_edge(i, i + 5, k0);
  const auto pet = as_zero_weight(petersen_graph());
  EXPECT_FALSE(isomorphic(pet, prism));
  std::vector<Vertex> perm{3, 7, 1, 9, 0, 2, 8, 4, 6, 5};
  EXPECT_TRUE(isomorphic(pet, permute(pet, perm)));
}

TEST(CanonicalFormTest, OrderReconstructsCode) {
  std::mt19937_64 rng(29);
  const auto g = sample_multigraph(7, 10, rng);
  const auto cf = canonical_form(g);
  std::vector<Vertex> perm(g.n());
  for (Vertex i = 0; i < g.n(); ++i) perm[cf.order[i]] = i;
  EXPECT_EQ(canonical_code(permute(g, perm)), cf.code);
}

TEST(CanonicalFormTest, SizeCapThrows) {
  EXPECT_THROW(canonical_form(WeightedMultigraph(5), 4), ResourceLimit);
}

TEST(RemoveEdgesTest, KeepsOrder) {
  WeightedMultigraph g(3);
  g.add_edge(0, 1, k0);
  g.add_edge(1, 2, k1);
  g.add_edge(2, 2, k0);
  const EdgeId drop[] = {1};
  const auto r = remove_edges(g, drop);
  ASSERT_EQ(r.edge_count(), 2u);
  EXPECT_EQ(r.edge(1), (MultiEdge{2, 2, k0}));
}

TEST(UnderlyingSimpleTest, MergesParallels) {
  WeightedMultigraph g(2);
  g.add_edge(0, 1, k0);
  g.add_edge(0, 1, k1);
  g.add_edge(1, 1, k1);
  const auto s = underlying_simple(g);
  EXPECT_EQ(s.edge_count(), 2u);
  EXPECT_TRUE(s.has_loop(1));
}

}  // namespace
}  // namespace sntrank
