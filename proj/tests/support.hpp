#pragma once

#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "sntrank/families.hpp"
#include "sntrank/multigraph.hpp"
#include "sntrank/simple_graph.hpp"

namespace sntrank::testing {

// Square-free graphs with loops, one per isomorphism class, grouped by
// vertex count 0..max_n. Grows by one vertex with every neighbourhood and
// loop choice; membership is hereditary, so every class is reached.
inline std::vector<std::vector<SimpleGraph>> family_classes(std::size_t max_n) {
  std::vector<std::vector<SimpleGraph>> out(max_n + 1);
  out[0].push_back(SimpleGraph(0));
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::unordered_set<std::string> seen;
    for (const auto& base : out[n - 1]) {
      const std::size_t m = base.n();
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        for (int loop = 0; loop < 2; ++loop) {
          SimpleGraph g = base;
          const Vertex x = g.add_vertex();
          for (Vertex u = 0; u < m; ++u) {
            if (mask >> u & 1) g.add_edge(u, x);
          }
          if (loop) g.add_edge(x, x);
          if (!is_no_square(g)) continue;
          if (seen.insert(canonical_code(g)).second) out[n].push_back(std::move(g));
        }
      }
    }
  }
  return out;
}

inline bool is_connected(const SimpleGraph& g) {
  return g.n() > 0 && connected_component_sets(g).size() == 1;
}

// Random multigraph whose zeta expansion has at most max_zeta vertices.
inline WeightedMultigraph small_multigraph(std::mt19937_64& rng, std::size_t max_zeta) {
  for (;;) {
    std::uniform_int_distribution<int> nd(1, 4);
    const std::size_t n = nd(rng);
    std::uniform_int_distribution<int> md(0, 3);
    auto g = sample_multigraph(n, md(rng), rng, 0.3, 0.5);
    std::size_t z = g.n();
    for (const auto& e : g.edges()) z += e.is_loop() ? (e.w == Weight::kZero ? 2 : 5) : (e.w == Weight::kZero ? 2 : 3);
    if (z <= max_zeta) return g;
  }
}

}  // namespace sntrank::testing
