#include "sntrank/simple_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sntrank/errors.hpp"

namespace sntrank {

namespace {

void check_vertex(const SimpleGraph& g, Vertex v) {
  if (v >= g.n()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range (n = " +
                          std::to_string(g.n()) + ")");
  }
}

// Size of the intersection of two sorted closed neighbourhoods.
int common_count(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  int c = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
    : SimpleGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Vertex SimpleGraph::add_vertex() {
  adj_.emplace_back();
  loop_.push_back(0);
  return static_cast<Vertex>(adj_.size() - 1);
}

bool SimpleGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) {
    if (loop_[u]) return false;
    loop_[u] = 1;
    ++edges_;
    return true;
  }
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edges_;
  return true;
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) return loop_[u] != 0;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int SimpleGraph::degree(Vertex v) const {
  check_vertex(*this, v);
  return static_cast<int>(adj_[v].size()) + (loop_[v] ? 2 : 0);
}

std::vector<Vertex> SimpleGraph::closed_neighborhood(Vertex v) const {
  check_vertex(*this, v);
  std::vector<Vertex> out = adj_[v];
  if (loop_[v]) out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n(); ++u) {
    if (loop_[u]) out.emplace_back(u, u);
    for (Vertex v : adj_[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

DegreePartition degree_partition(const SimpleGraph& g) {
  DegreePartition p;
  for (Vertex v = 0; v < g.n(); ++v) {
    switch (g.degree(v)) {
      case 0: p.d0.push_back(v); break;
      case 1: p.d1.push_back(v); break;
      case 2: p.d2.push_back(v); break;
      default: p.d3plus.push_back(v); break;
    }
  }
  return p;
}

InducedGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> keep) {
  InducedGraph r;
  r.old_to_new.assign(g.n(), kNoVertex);
  r.new_to_old.assign(keep.begin(), keep.end());
  std::sort(r.new_to_old.begin(), r.new_to_old.end());
  r.new_to_old.erase(std::unique(r.new_to_old.begin(), r.new_to_old.end()),
                     r.new_to_old.end());
  for (Vertex i = 0; i < r.new_to_old.size(); ++i) {
    check_vertex(g, r.new_to_old[i]);
    r.old_to_new[r.new_to_old[i]] = i;
  }
  r.graph = SimpleGraph(r.new_to_old.size());
  for (auto [u, v] : g.edges()) {
    if (r.old_to_new[u] != kNoVertex && r.old_to_new[v] != kNoVertex) {
      r.graph.add_edge(r.old_to_new[u], r.old_to_new[v]);
    }
  }
  return r;
}

InducedGraph remove_vertices(const SimpleGraph& g, std::span<const Vertex> drop) {
  std::vector<std::uint8_t> gone(g.n(), 0);
  for (Vertex v : drop) {
    check_vertex(g, v);
    gone[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<std::vector<Vertex>> connected_component_sets(const SimpleGraph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<std::uint8_t> seen(g.n(), 0);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<InducedGraph> connected_components(const SimpleGraph& g) {
  std::vector<InducedGraph> out;
  for (const auto& c : connected_component_sets(g)) out.push_back(induced_subgraph(g, c));
  return out;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph r(a.n() + b.n());
  for (auto [u, v] : a.edges()) r.add_edge(u, v);
  const auto off = static_cast<Vertex>(a.n());
  for (auto [u, v] : b.edges()) r.add_edge(u + off, v + off);
  return r;
}

std::optional<std::pair<Vertex, Vertex>> first_square_violation(const SimpleGraph& g) {
  std::vector<std::vector<Vertex>> closed(g.n());
  for (Vertex v = 0; v < g.n(); ++v) closed[v] = g.closed_neighborhood(v);
  // Two vertices sharing a closed neighbour are at distance <= 2, so only
  // pairs reachable through some closed neighbourhood need checking.
  for (Vertex u = 0; u < g.n(); ++u) {
    std::vector<Vertex> cand;
    for (Vertex w : closed[u]) {
      for (Vertex x : closed[w]) {
        if (x > u) cand.push_back(x);
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (Vertex x : cand) {
      if (common_count(closed[u], closed[x]) >= 2) return std::make_pair(u, x);
    }
  }
  return std::nullopt;
}

bool is_no_square(const SimpleGraph& g) { return !first_square_violation(g).has_value(); }

std::vector<std::pair<Vertex, Vertex>> twins(const SimpleGraph& g) {
  std::vector<std::vector<Vertex>> closed(g.n());
  for (Vertex v = 0; v < g.n(); ++v) closed[v] = g.closed_neighborhood(v);
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return closed[a] < closed[b]; });
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && closed[order[j]] == closed[order[i]]) ++j;
    for (std::size_t a = i; a < j; ++a) {
      for (std::size_t b = a + 1; b < j; ++b) {
        out.emplace_back(std::min(order[a], order[b]), std::max(order[a], order[b]));
      }
    }
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sntrank
