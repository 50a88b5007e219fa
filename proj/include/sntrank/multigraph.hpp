#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sntrank/simple_graph.hpp"

namespace sntrank {

enum class Weight : std::uint8_t { kZero = 0, kOne = 1 };

inline int to_int(Weight w) { return static_cast<int>(w); }
Weight weight_from_int(int w);

using EdgeId = std::uint32_t;

struct MultiEdge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = Weight::kZero;
  bool is_loop() const { return u == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

// Undirected multigraph with 0/1 edge weights, parallel edges and loops.
// Edges are stored in insertion order; EdgeId is the index into edges().
class WeightedMultigraph {
 public:
  WeightedMultigraph() = default;
  explicit WeightedMultigraph(std::size_t n) : inc_(n) {}

  std::size_t n() const { return inc_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  Vertex add_vertex();
  EdgeId add_edge(Vertex u, Vertex v, Weight w);

  const MultiEdge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const MultiEdge> edges() const { return edges_; }
  // Ids of edges incident to v; a loop appears once.
  std::span<const EdgeId> incident(Vertex v) const { return inc_.at(v); }

  // Loops count 2.
  int degree(Vertex v) const;

  friend bool operator==(const WeightedMultigraph&, const WeightedMultigraph&) = default;

 private:
  std::vector<MultiEdge> edges_;
  std::vector<std::vector<EdgeId>> inc_;
};

// Number of edges (loops included) of weight w.
std::size_t epsilon(const WeightedMultigraph& g, Weight w);
bool all_zero_weight(const WeightedMultigraph& g);

// Plain vertex deletion; surviving vertices keep their relative order and
// surviving edges keep their relative order.
struct InducedMultigraph {
  WeightedMultigraph graph;
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;
};

InducedMultigraph induced_subgraph(const WeightedMultigraph& g, std::span<const Vertex> keep);
InducedMultigraph remove_vertices(const WeightedMultigraph& g, std::span<const Vertex> drop);
WeightedMultigraph remove_edges(const WeightedMultigraph& g, std::span<const EdgeId> drop);

std::vector<std::vector<Vertex>> connected_component_sets(const WeightedMultigraph& g);
std::vector<InducedMultigraph> connected_components(const WeightedMultigraph& g);

inline int mdegree(const WeightedMultigraph& g, Vertex v) { return g.degree(v); }

// Components of the spanning subgraph of weight-1 edges. eps1 counts weight-1
// edges and loops inside the part; a part is tree-like iff eps1 == |part| - 1.
struct OneComponent {
  std::vector<Vertex> vertices;
  std::size_t eps1 = 0;
  bool tree_like = false;
};

struct OneComponentReport {
  std::vector<OneComponent> parts;   // ordered by smallest vertex
  std::vector<std::size_t> part_of;  // vertex -> index into parts
};

OneComponentReport one_components(const WeightedMultigraph& g);

// Merge the endpoints of a non-loop edge e into min(u, v); e is removed and
// the higher endpoint disappears.
InducedMultigraph contract_edge(const WeightedMultigraph& g, EdgeId e);

WeightedMultigraph disjoint_union(const WeightedMultigraph& a, const WeightedMultigraph& b);

// Relabel: vertex v becomes perm[v]. Edge order is kept.
WeightedMultigraph permute(const WeightedMultigraph& g, std::span<const Vertex> perm);

// Every edge of g with weight 0.
WeightedMultigraph as_zero_weight(const SimpleGraph& g);
// Underlying simple graph: parallel edges merged, weights dropped.
SimpleGraph underlying_simple(const WeightedMultigraph& g);

// Canonical labelling under vertex permutation, with edge multiset per
// (pair, weight) preserved. Two graphs are isomorphic iff their codes are
// equal. Throws ResourceLimit above max_n vertices.
struct CanonicalForm {
  std::vector<Vertex> order;  // order[i] = vertex placed at position i
  std::string code;
};

inline constexpr std::size_t kCanonicalMaxN = 64;

CanonicalForm canonical_form(const WeightedMultigraph& g, std::size_t max_n = kCanonicalMaxN);
std::string canonical_code(const WeightedMultigraph& g, std::size_t max_n = kCanonicalMaxN);
std::string canonical_code(const SimpleGraph& g, std::size_t max_n = kCanonicalMaxN);
bool isomorphic(const WeightedMultigraph& a, const WeightedMultigraph& b);

}  // namespace sntrank
