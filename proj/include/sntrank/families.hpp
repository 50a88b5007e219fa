#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sntrank/multigraph.hpp"
#include "sntrank/simple_graph.hpp"

namespace sntrank {

// name:k1,k2,... e.g. "garlic:3,5,2".
struct FamilySpec {
  std::string name;
  std::vector<int> params;

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

using AnyGraph = std::variant<SimpleGraph, WeightedMultigraph>;

// Families and their parameters:
//   path:n  cycle:n  complete:n  complete_bipartite:m,n  wheel:n (hub + C_{n-1})
//   petersen  gstar:l1,...,lt (centre with pendant paths of li vertices)
//   garlic:k1,...,kt (two hubs joined by paths with ki internal vertices)
//   clover:f,e,o[,even lengths...,odd lengths...] (cycles through one vertex;
//     f 4-cycles, e even cycles of length != 4 default 6, o odd default 3)
//   planar_example:k  fig4_kappa  fig13_gamma  p2oo_weighted
// The last four are weighted multigraphs; the rest are simple graphs.
// Throws InvalidArgument on unknown names or bad parameters.
AnyGraph generate(const FamilySpec& spec);

// Closed-form gap of a simple family instance, when known.
std::optional<long> expected_gap(const FamilySpec& spec);
// Closed-form gap* of the multigraph instance; simple families are read as
// all-0-weight multigraphs.
std::optional<long> expected_gap_star(const FamilySpec& spec);

SimpleGraph path_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph complete_graph(std::size_t n);
SimpleGraph complete_bipartite(std::size_t m, std::size_t n);
SimpleGraph wheel_graph(std::size_t n);
SimpleGraph petersen_graph();
SimpleGraph gstar_graph(const std::vector<int>& lengths);
SimpleGraph garlic_graph(const std::vector<int>& internal);
SimpleGraph clover_graph(std::size_t f, const std::vector<int>& even_lengths,
                         const std::vector<int>& odd_lengths);
WeightedMultigraph planar_example(std::size_t k);
WeightedMultigraph fig4_kappa();
WeightedMultigraph fig13_gamma();
WeightedMultigraph p2oo_weighted();

// Seeded samplers used by property tests and `sntrank sample`.
// Edges (loops included with loop_p) are offered in random order and kept
// when the graph stays square-free.
SimpleGraph sample_family_graph(std::size_t n, std::mt19937_64& rng, double edge_p = 0.5,
                                double loop_p = 0.2);
// Random forest: edges offered in random order, kept when they join two trees.
SimpleGraph sample_forest(std::size_t n, std::mt19937_64& rng, double edge_p = 0.7);
// m random edges; each is a loop with probability loop_p and has weight 1
// with probability one_p.
WeightedMultigraph sample_multigraph(std::size_t n, std::size_t m, std::mt19937_64& rng,
                                     double loop_p = 0.2, double one_p = 0.5);

}  // namespace sntrank
