#include "sntrank/multigraph.hpp"

#include <algorithm>
#include <numeric>

#include "sntrank/errors.hpp"

namespace sntrank {

Weight weight_from_int(int w) {
  if (w != 0 && w != 1) throw InvalidArgument("edge weight must be 0 or 1");
  return static_cast<Weight>(w);
}

Vertex WeightedMultigraph::add_vertex() {
  inc_.emplace_back();
  return static_cast<Vertex>(inc_.size() - 1);
}

EdgeId WeightedMultigraph::add_edge(Vertex u, Vertex v, Weight w) {
  if (u >= n() || v >= n()) {
    throw InvalidArgument("edge endpoint out of range (n = " + std::to_string(n()) + ")");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v, w});
  inc_[u].push_back(id);
  if (v != u) inc_[v].push_back(id);
  return id;
}

int WeightedMultigraph::degree(Vertex v) const {
  int d = 0;
  for (EdgeId e : inc_.at(v)) d += edges_[e].is_loop() ? 2 : 1;
  return d;
}

std::size_t epsilon(const WeightedMultigraph& g, Weight w) {
  return static_cast<std::size_t>(std::count_if(
      g.edges().begin(), g.edges().end(), [w](const MultiEdge& e) { return e.w == w; }));
}

bool all_zero_weight(const WeightedMultigraph& g) { return epsilon(g, Weight::kOne) == 0; }

InducedMultigraph induced_subgraph(const WeightedMultigraph& g, std::span<const Vertex> keep) {
  InducedMultigraph r;
  r.old_to_new.assign(g.n(), kNoVertex);
  r.new_to_old.assign(keep.begin(), keep.end());
  std::sort(r.new_to_old.begin(), r.new_to_old.end());
  r.new_to_old.erase(std::unique(r.new_to_old.begin(), r.new_to_old.end()),
                     r.new_to_old.end());
  for (Vertex i = 0; i < r.new_to_old.size(); ++i) {
    if (r.new_to_old[i] >= g.n()) throw InvalidArgument("vertex out of range");
    r.old_to_new[r.new_to_old[i]] = i;
  }
  r.graph = WeightedMultigraph(r.new_to_old.size());
  for (const auto& e : g.edges()) {
    if (r.old_to_new[e.u] != kNoVertex && r.old_to_new[e.v] != kNoVertex) {
      r.graph.add_edge(r.old_to_new[e.u], r.old_to_new[e.v], e.w);
    }
  }
  return r;
}

InducedMultigraph remove_vertices(const WeightedMultigraph& g, std::span<const Vertex> drop) {
  std::vector<std::uint8_t> gone(g.n(), 0);
  for (Vertex v : drop) {
    if (v >= g.n()) throw InvalidArgument("vertex out of range");
    gone[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

WeightedMultigraph remove_edges(const WeightedMultigraph& g, std::span<const EdgeId> drop) {
  std::vector<std::uint8_t> gone(g.edge_count(), 0);
  for (EdgeId e : drop) gone.at(e) = 1;
  WeightedMultigraph r(g.n());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!gone[e]) r.add_edge(g.edge(e).u, g.edge(e).v, g.edge(e).w);
  }
  return r;
}

namespace {

std::vector<std::vector<Vertex>> components_by(const WeightedMultigraph& g, bool only_one) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<std::uint8_t> seen(g.n(), 0);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (EdgeId id : g.incident(comp[i])) {
        const auto& e = g.edge(id);
        if (only_one && e.w != Weight::kOne) continue;
        const Vertex w = e.other(comp[i]);
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

}  // namespace

std::vector<std::vector<Vertex>> connected_component_sets(const WeightedMultigraph& g) {
  return components_by(g, false);
}

std::vector<InducedMultigraph> connected_components(const WeightedMultigraph& g) {
  std::vector<InducedMultigraph> out;
  for (const auto& c : components_by(g, false)) out.push_back(induced_subgraph(g, c));
  return out;
}

OneComponentReport one_components(const WeightedMultigraph& g) {
  OneComponentReport r;
  r.part_of.assign(g.n(), 0);
  for (auto& vs : components_by(g, true)) {
    for (Vertex v : vs) r.part_of[v] = r.parts.size();
    r.parts.push_back({std::move(vs), 0, false});
  }
  for (const auto& e : g.edges()) {
    if (e.w == Weight::kOne) ++r.parts[r.part_of[e.u]].eps1;
  }
  for (auto& p : r.parts) p.tree_like = (p.eps1 + 1 == p.vertices.size());
  return r;
}

InducedMultigraph contract_edge(const WeightedMultigraph& g, EdgeId id) {
  const auto& ce = g.edge(id);
  if (ce.is_loop()) throw PreconditionViolated("cannot contract a loop");
  const Vertex keep = std::min(ce.u, ce.v);
  const Vertex gone = std::max(ce.u, ce.v);
  InducedMultigraph r;
  r.old_to_new.assign(g.n(), kNoVertex);
  for (Vertex v = 0, k = 0; v < g.n(); ++v) {
    if (v == gone) continue;
    r.old_to_new[v] = k++;
    r.new_to_old.push_back(v);
  }
  r.graph = WeightedMultigraph(g.n() - 1);
  auto map = [&](Vertex v) { return r.old_to_new[v == gone ? keep : v]; };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == id) continue;
    const auto& x = g.edge(e);
    r.graph.add_edge(map(x.u), map(x.v), x.w);
  }
  // The merged vertex is reported under the surviving endpoint only.
  r.old_to_new[gone] = r.old_to_new[keep];
  return r;
}

WeightedMultigraph disjoint_union(const WeightedMultigraph& a, const WeightedMultigraph& b) {
  WeightedMultigraph r(a.n() + b.n());
  for (const auto& e : a.edges()) r.add_edge(e.u, e.v, e.w);
  const auto off = static_cast<Vertex>(a.n());
  for (const auto& e : b.edges()) r.add_edge(e.u + off, e.v + off, e.w);
  return r;
}

WeightedMultigraph permute(const WeightedMultigraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.n()) throw InvalidArgument("permutation size mismatch");
  WeightedMultigraph r(g.n());
  for (const auto& e : g.edges()) r.add_edge(perm[e.u], perm[e.v], e.w);
  return r;
}

WeightedMultigraph as_zero_weight(const SimpleGraph& g) {
  WeightedMultigraph r(g.n());
  for (auto [u, v] : g.edges()) r.add_edge(u, v, Weight::kZero);
  return r;
}

SimpleGraph underlying_simple(const WeightedMultigraph& g) {
  SimpleGraph r(g.n());
  for (const auto& e : g.edges()) r.add_edge(e.u, e.v);
  return r;
}

}  // namespace sntrank
