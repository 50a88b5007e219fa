#include "sntrank/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>

#include "sntrank/errors.hpp"
#include "sntrank/transforms.hpp"

namespace sntrank {

std::string_view op_name(Op op) {
  switch (op) {
    case Op::kLeafElim: return "leaf_elim";
    case Op::kDeg2Suppress: return "deg2_suppress";
    case Op::kContract1Edge: return "contract_1edge";
    case Op::kElim1Loop: return "elim_1loop";
    case Op::kDedupe0Edges: return "dedupe_0edges";
    case Op::kTau1: return "tau1";
    case Op::kTau2: return "tau2";
    case Op::kTau3: return "tau3";
    case Op::kLeafPair: return "leaf_pair";
    case Op::kTwin: return "twin";
    case Op::kPendantC4: return "pendant_c4";
    case Op::kKappa: return "kappa";
  }
  return "unknown";
}

namespace {

void check_vertex(const WeightedMultigraph& g, Vertex v) {
  if (v >= g.n()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

void check_edge(const WeightedMultigraph& g, EdgeId e) {
  if (e >= g.edge_count()) throw InvalidArgument("edge " + std::to_string(e) + " out of range");
}

}  // namespace

WeightedMultigraph eliminate_leaf(const WeightedMultigraph& g, Vertex v) {
  check_vertex(g, v);
  if (g.degree(v) != 1) throw PreconditionViolated("vertex " + std::to_string(v) + " is not a leaf");
  const auto& e = g.edge(g.incident(v)[0]);
  const Vertex u = e.other(v);
  const Vertex drop[] = {v};
  auto r = remove_vertices(g, drop);
  if (e.w == Weight::kOne) return std::move(r.graph);
  return gamma_minus(r.graph, r.old_to_new[u]).graph;
}

WeightedMultigraph suppress_deg2(const WeightedMultigraph& g, Vertex u) {
  check_vertex(g, u);
  if (g.degree(u) != 2) throw PreconditionViolated("vertex " + std::to_string(u) + " has degree != 2");
  const auto inc = g.incident(u);
  const Vertex drop[] = {u};
  auto r = remove_vertices(g, drop);
  if (inc.size() == 1) return std::move(r.graph);  // a lone loop
  const auto& e1 = g.edge(inc[0]);
  const auto& e2 = g.edge(inc[1]);
  const int w = std::abs(to_int(e1.w) + to_int(e2.w) - 1);
  r.graph.add_edge(r.old_to_new[e1.other(u)], r.old_to_new[e2.other(u)], weight_from_int(w));
  return std::move(r.graph);
}

WeightedMultigraph contract_1edge(const WeightedMultigraph& g, EdgeId e) {
  check_edge(g, e);
  const auto& x = g.edge(e);
  if (x.is_loop() || x.w != Weight::kOne) {
    throw PreconditionViolated("edge " + std::to_string(e) + " is not a non-loop 1-edge");
  }
  return contract_edge(g, e).graph;
}

WeightedMultigraph eliminate_1loop(const WeightedMultigraph& g, EdgeId e) {
  check_edge(g, e);
  const auto& x = g.edge(e);
  if (!x.is_loop() || x.w != Weight::kOne) {
    throw PreconditionViolated("edge " + std::to_string(e) + " is not a 1-loop");
  }
  const EdgeId drop[] = {e};
  return gamma_minus(remove_edges(g, drop), x.u).graph;
}

WeightedMultigraph dedupe_0edges(const WeightedMultigraph& g) {
  WeightedMultigraph r(g.n());
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& e : g.edges()) {
    if (e.w == Weight::kZero && !seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      continue;
    }
    r.add_edge(e.u, e.v, e.w);
  }
  return r;
}

PassResult tau1(const WeightedMultigraph& g) {
  const auto rep = one_components(g);
  PassResult out;
  std::vector<Vertex> part_vertex(rep.parts.size(), kNoVertex);
  Vertex next = 0;
  for (std::size_t i = 0; i < rep.parts.size(); ++i) {
    const auto& p = rep.parts[i];
    if (p.tree_like) {
      part_vertex[i] = next++;
    } else {
      out.t += static_cast<long>(p.eps1) - static_cast<long>(p.vertices.size());
    }
  }
  std::set<std::pair<Vertex, Vertex>> zero;
  for (const auto& e : g.edges()) {
    if (e.w != Weight::kZero) continue;
    const Vertex a = part_vertex[rep.part_of[e.u]];
    const Vertex b = part_vertex[rep.part_of[e.v]];
    if (a == kNoVertex || b == kNoVertex) continue;
    zero.emplace(std::min(a, b), std::max(a, b));
  }
  out.graph = WeightedMultigraph(next);
  for (auto [a, b] : zero) out.graph.add_edge(a, b, Weight::kZero);
  out.changed = out.t != 0 || next != g.n() || out.graph.edge_count() != g.edge_count();
  return out;
}

PassResult tau2(const WeightedMultigraph& g) {
  if (!all_zero_weight(g)) throw PreconditionViolated("tau2 requires a graph without 1-edges");
  std::vector<std::uint8_t> leaf(g.n(), 0);
  std::vector<std::uint8_t> nbr(g.n(), 0);
  long leaves = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) != 1) continue;
    leaf[v] = 1;
    ++leaves;
    nbr[g.edge(g.incident(v)[0]).other(v)] = 1;
  }
  PassResult out;
  std::vector<Vertex> drop;
  long nbrs = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    nbrs += nbr[v];
    if (leaf[v] || nbr[v]) drop.push_back(v);
  }
  out.t = leaves - nbrs;
  out.changed = leaves > 0;
  out.graph = out.changed ? remove_vertices(g, drop).graph : g;
  return out;
}

PassResult tau3(const WeightedMultigraph& g) {
  PassResult out;
  std::vector<Vertex> isolated;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) isolated.push_back(v);
  }
  out.t = static_cast<long>(isolated.size());
  out.changed = !isolated.empty();
  WeightedMultigraph cur = isolated.empty() ? g : remove_vertices(g, isolated).graph;
  // Suppression keeps other degrees unchanged, so a single forward scan that
  // re-examines the current index after each removal visits every candidate.
  for (Vertex v = 0; v < cur.n();) {
    if (cur.degree(v) == 2) {
      cur = suppress_deg2(cur, v);
      out.changed = true;
    } else {
      ++v;
    }
  }
  out.graph = std::move(cur);
  return out;
}

TauResult tau(const WeightedMultigraph& g) {
  TauResult r;
  r.reduced = g;
  auto record = [&r](Op op, const PassResult& p, std::size_t before) {
    if (!p.changed) return;
    ReductionStep s;
    s.op = op;
    s.t_delta = p.t;
    s.vertices_before = before;
    s.vertices_after = p.graph.n();
    s.snapshot = p.graph;
    r.trace.push_back(std::move(s));
  };
  for (;;) {
    const std::size_t n0 = r.reduced.n();
    auto p1 = tau1(r.reduced);
    record(Op::kTau1, p1, n0);
    auto p2 = tau2(p1.graph);
    record(Op::kTau2, p2, p1.graph.n());
    auto p3 = tau3(p2.graph);
    record(Op::kTau3, p3, p2.graph.n());
    r.t += p1.t + p2.t + p3.t;
    r.reduced = std::move(p3.graph);
    if (!p1.changed && !p2.changed && !p3.changed) break;
  }
  return r;
}

bool is_tau_reduced(const WeightedMultigraph& g) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& e : g.edges()) {
    if (e.w != Weight::kZero) return false;
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return false;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) < 3) return false;
  }
  return true;
}

}  // namespace sntrank
