#include "sntrank/transforms.hpp"

#include <algorithm>
#include <string>

#include "sntrank/errors.hpp"

namespace sntrank {

KappaResult kappa(const SimpleGraph& g, bool force) {
  if (!force) {
    if (auto bad = first_square_violation(g)) {
      throw NotInFamily("vertices " + std::to_string(bad->first) + " and " +
                        std::to_string(bad->second) + " share two closed neighbours");
    }
  }
  const std::size_t n = g.n();
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);

  KappaResult r;
  r.vertex_map.assign(n, kNoVertex);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] != 2) r.vertex_map[v] = next++;
  }
  r.gamma = WeightedMultigraph(next);

  std::vector<std::uint8_t> visited(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (deg[u] == 2) continue;
    visited[u] = 1;
    if (g.has_loop(u)) r.gamma.add_edge(r.vertex_map[u], r.vertex_map[u], Weight::kZero);
    for (Vertex first : g.neighbors(u)) {
      Vertex prev = u;
      Vertex cur = first;
      std::size_t internal = 0;
      Vertex last_internal = kNoVertex;
      // A degree-2 vertex reached from a neighbour has no loop, so the walk
      // stays on a simple path until it meets a degree != 2 vertex.
      while (deg[cur] == 2) {
        visited[cur] = 1;
        ++internal;
        last_internal = cur;
        const auto nb = g.neighbors(cur);
        const Vertex nxt = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
      }
      // Each chain is seen from both ends; keep the walk from the smaller
      // end, and for a closed chain the one leaving by the smaller vertex.
      const bool take = (u < cur) || (u == cur && internal > 0 && first < last_internal);
      if (take) {
        r.gamma.add_edge(r.vertex_map[u], r.vertex_map[cur],
                         (internal % 2) ? Weight::kOne : Weight::kZero);
      }
    }
  }

  for (Vertex s = 0; s < n; ++s) {
    if (visited[s]) continue;
    ++r.dropped_cycles;
    std::vector<Vertex> stack{s};
    visited[s] = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (!visited[y]) {
          visited[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return r;
}

SimpleGraph zeta(const WeightedMultigraph& g) {
  SimpleGraph s(g.n());
  for (const auto& e : g.edges()) {
    std::size_t internal = 0;
    if (e.is_loop()) {
      internal = (e.w == Weight::kZero) ? 2 : 5;
    } else {
      internal = (e.w == Weight::kZero) ? 2 : 3;
    }
    Vertex prev = e.u;
    for (std::size_t i = 0; i < internal; ++i) {
      const Vertex x = s.add_vertex();
      s.add_edge(prev, x);
      prev = x;
    }
    s.add_edge(prev, e.v);
  }
  return s;
}

GammaMinusResult gamma_minus(const WeightedMultigraph& g, Vertex v) {
  if (v >= g.n()) throw InvalidArgument("vertex out of range");
  std::size_t one_loops = 0;
  std::vector<std::uint8_t> drop(g.n(), 0);
  drop[v] = 1;
  std::vector<Vertex> needs_leaf;  // non-leaf 1-neighbours, by edge id
  for (EdgeId id : g.incident(v)) {
    const auto& e = g.edge(id);
    if (e.w != Weight::kOne) continue;
    if (e.is_loop()) {
      ++one_loops;
      continue;
    }
    const Vertex u = e.other(v);
    if (g.degree(u) == 1) {
      drop[u] = 1;
    } else {
      needs_leaf.push_back(u);
    }
  }
  std::vector<Vertex> dropped;
  for (Vertex x = 0; x < g.n(); ++x) {
    if (drop[x]) dropped.push_back(x);
  }
  auto base = remove_vertices(g, dropped);
  GammaMinusResult r{std::move(base.graph), std::move(base.old_to_new)};
  for (std::size_t i = 0; i < one_loops; ++i) r.graph.add_vertex();
  for (Vertex u : needs_leaf) {
    const Vertex leaf = r.graph.add_vertex();
    r.graph.add_edge(r.old_to_new[u], leaf, Weight::kZero);
  }
  return r;
}

}  // namespace sntrank
