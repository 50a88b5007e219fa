#pragma once

#include <cstddef>
#include <vector>

#include "sntrank/multigraph.hpp"
#include "sntrank/simple_graph.hpp"

namespace sntrank {

struct KappaResult {
  WeightedMultigraph gamma;
  // vertex_map[v] is the multigraph vertex of v, kNoVertex when deg(v) == 2.
  std::vector<Vertex> vertex_map;
  // Components made only of degree-2 vertices (cycles, lone looped vertices).
  std::size_t dropped_cycles = 0;
};

// Collapse maximal degree-2 chains: vertices of degree != 2 survive in
// ascending order, each chain with k internal vertices becomes one edge of
// weight k mod 2, and a loop on a surviving vertex becomes a 0-loop.
// Throws NotInFamily unless force is set.
KappaResult kappa(const SimpleGraph& g, bool force = false);

// Subdivide: a 0-edge becomes a path with 2 internal vertices, a 1-edge one
// with 3; 0-loops become pendant triangles, 1-loops pendant 6-cycles.
// Original vertices keep their ids; new vertices follow in edge order.
// The result is loop-free and square-free.
SimpleGraph zeta(const WeightedMultigraph& g);

// Vertex v removed with its weight-1 neighbourhood rewired:
//  * every 1-loop at v leaves a fresh isolated vertex;
//  * a leaf hanging on v by a 1-edge is deleted, by a 0-edge it stays;
//  * a non-leaf u joined to v by a 1-edge gets a fresh leaf u' via a 0-edge.
// Surviving vertices keep relative order; fresh vertices follow, loops first,
// then leaves by edge id. With no 1-edge at v this is plain deletion.
struct GammaMinusResult {
  WeightedMultigraph graph;
  std::vector<Vertex> old_to_new;
};

GammaMinusResult gamma_minus(const WeightedMultigraph& g, Vertex v);

}  // namespace sntrank
