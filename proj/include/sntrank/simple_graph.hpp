#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sntrank {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = ~Vertex{0};

// Undirected simple graph with optional loops. Vertices are 0..n-1.
// Neighbour lists are sorted and never contain the vertex itself; loops are
// kept in a separate flag. N[v] denotes neighbours(v) plus v when looped.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n), loop_(n, 0) {}
  SimpleGraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t n() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  Vertex add_vertex();
  // Returns false when the edge already existed. u == v adds a loop.
  bool add_edge(Vertex u, Vertex v);

  bool has_loop(Vertex v) const { return loop_.at(v) != 0; }
  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  // |N[v]| counted with a loop contributing 2.
  int degree(Vertex v) const;
  // N[v] as a sorted list.
  std::vector<Vertex> closed_neighborhood(Vertex v) const;

  // Edges {u, v} with u <= v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> loop_;
  std::size_t edges_ = 0;
};

inline int degree(const SimpleGraph& g, Vertex v) { return g.degree(v); }

struct DegreePartition {
  std::vector<Vertex> d0, d1, d2, d3plus;
};

DegreePartition degree_partition(const SimpleGraph& g);

// Result of deleting or keeping a vertex subset. old_to_new[v] is kNoVertex
// for deleted vertices; new_to_old lists survivors in ascending order.
struct InducedGraph {
  SimpleGraph graph;
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;
};

InducedGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> keep);
InducedGraph remove_vertices(const SimpleGraph& g, std::span<const Vertex> drop);

std::vector<std::vector<Vertex>> connected_component_sets(const SimpleGraph& g);
std::vector<InducedGraph> connected_components(const SimpleGraph& g);

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

// First pair u < u' (lexicographic) with |N[u] ∩ N[u']| >= 2.
std::optional<std::pair<Vertex, Vertex>> first_square_violation(const SimpleGraph& g);
// True iff no two distinct vertices share two closed neighbours, which
// excludes C4, a looped triangle and two adjacent looped vertices.
bool is_no_square(const SimpleGraph& g);

// Pairs u < v with N[u] == N[v].
std::vector<std::pair<Vertex, Vertex>> twins(const SimpleGraph& g);

}  // namespace sntrank
