#include "sntrank/engine.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <vector>

#include "sntrank/errors.hpp"
#include "sntrank/transforms.hpp"

namespace sntrank {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kKappaTauRecursion: return "kappa_tau_recursion";
    case Method::kDirectRecursion: return "direct_recursion";
    case Method::kTreeLinear: return "tree_linear";
    case Method::kOracle: return "oracle";
  }
  return "unknown";
}

std::size_t zeta_order(const WeightedMultigraph& g) {
  std::size_t n = g.n();
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      n += (e.w == Weight::kZero) ? 2 : 5;
    } else {
      n += (e.w == Weight::kZero) ? 2 : 3;
    }
  }
  return n;
}

GapEngine::GapEngine(EngineConfig cfg) : cfg_(cfg) {
  if (cfg_.memo_cap == 0 || cfg_.max_recursion_vertices == 0) {
    throw InvalidArgument("engine caps must be positive");
  }
  if (cfg_.threads == 0) cfg_.threads = 1;
}

std::size_t GapEngine::memo_size() const {
  std::lock_guard lock(mu_);
  return memo_.size();
}

long GapEngine::value(const WeightedMultigraph& g, int depth) {
  const TauResult tr = tau(g);
  long total = tr.t;
  for (const auto& comp : connected_components(tr.reduced)) {
    total += component_value(comp.graph, depth);
  }
  return total;
}

// comp is connected, tau-reduced and therefore all-0 with min degree 3, so
// vertex deletion is plain deletion.
long GapEngine::component_value(const WeightedMultigraph& comp, int depth) {
  const std::size_t n = comp.n();
  if (cfg_.enable_prop6_base && n <= 6) return 0;
  if (n > cfg_.max_recursion_vertices) {
    throw ResourceLimit("reduced component has " + std::to_string(n) +
                        " vertices, above the recursion cap of " +
                        std::to_string(cfg_.max_recursion_vertices));
  }
  std::optional<std::string> key;
  if (n <= cfg_.memo_cap) {
    key = canonical_code(comp, cfg_.memo_cap);
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(*key); it != memo_.end()) return it->second;
  }

  auto child = [&](Vertex v) {
    const Vertex drop[] = {v};
    return value(remove_vertices(comp, drop).graph, depth + 1);
  };
  std::vector<long> kids(n);
  if (depth == 0 && cfg_.threads > 1 && n > 1) {
    std::vector<std::future<void>> jobs;
    const unsigned workers = std::min<unsigned>(cfg_.threads, static_cast<unsigned>(n));
    for (unsigned w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (Vertex v = w; v < n; v += workers) kids[v] = child(v);
      }));
    }
    for (auto& j : jobs) j.get();
  } else {
    for (Vertex v = 0; v < n; ++v) kids[v] = child(v);
  }
  const long best = *std::max_element(kids.begin(), kids.end());
  const long result = std::max(0L, best - 1);
  // gap* moves by at most one under vertex deletion.
  assert(result <= *std::min_element(kids.begin(), kids.end()) + 1);

  if (key) {
    std::lock_guard lock(mu_);
    memo_.emplace(std::move(*key), result);
  }
  return result;
}

GapResult GapEngine::gap_star(const WeightedMultigraph& g) {
  GapResult r;
  const TauResult tr = tau(g);
  r.t = tr.t;
  r.trace = tr.trace;
  r.gap = tr.t;
  for (const auto& comp : connected_components(tr.reduced)) {
    r.gap += component_value(comp.graph, 0);
  }
  r.stp = static_cast<long>(zeta_order(g)) - r.gap;
  r.method = Method::kKappaTauRecursion;
  return r;
}

namespace {

struct Preprocessed {
  SimpleGraph graph;
  long credit = 0;
  ReductionTrace trace;
};

std::optional<Vertex> find_leaf(const SimpleGraph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!g.has_loop(v) && g.neighbors(v).size() == 1) return v;
  }
  return std::nullopt;
}

bool plain_deg2(const SimpleGraph& g, Vertex v) {
  return !g.has_loop(v) && g.neighbors(v).size() == 2;
}

// A 4-cycle w-a-x-b-w hanging on w, with a, x, b of degree 2 and deg(w) >= 3.
// Returns {a, x, b}.
std::optional<std::vector<Vertex>> find_pendant_c4(const SimpleGraph& g) {
  for (Vertex x = 0; x < g.n(); ++x) {
    if (!plain_deg2(g, x)) continue;
    const Vertex a = g.neighbors(x)[0];
    const Vertex b = g.neighbors(x)[1];
    if (!plain_deg2(g, a) || !plain_deg2(g, b)) continue;
    const auto na = g.neighbors(a);
    const auto nb = g.neighbors(b);
    const Vertex wa = (na[0] == x) ? na[1] : na[0];
    const Vertex wb = (nb[0] == x) ? nb[1] : nb[0];
    if (wa != wb || wa == x || g.degree(wa) < 3) continue;
    return std::vector<Vertex>{a, x, b};
  }
  return std::nullopt;
}

Preprocessed preprocess(const SimpleGraph& input) {
  Preprocessed p;
  p.graph = input;
  auto apply = [&p](Op op, std::vector<Vertex> drop, long credit) {
    ReductionStep s;
    s.op = op;
    s.t_delta = credit;
    s.vertices_before = p.graph.n();
    s.detail = drop;
    p.graph = remove_vertices(p.graph, drop).graph;
    s.vertices_after = p.graph.n();
    p.credit += credit;
    p.trace.push_back(std::move(s));
  };
  for (;;) {
    if (auto v = find_leaf(p.graph)) {
      apply(Op::kLeafPair, {*v, p.graph.neighbors(*v)[0]}, 0);
      continue;
    }
    if (auto c4 = find_pendant_c4(p.graph)) {
      apply(Op::kPendantC4, *c4, 1);
      continue;
    }
    const auto tw = twins(p.graph);
    if (!tw.empty()) {
      apply(Op::kTwin, {tw.front().second}, 1);
      continue;
    }
    break;
  }
  return p;
}

}  // namespace

GapResult GapEngine::gap(const SimpleGraph& g) {
  Preprocessed p = preprocess(g);
  if (auto bad = first_square_violation(p.graph)) {
    throw NotSupported("after preprocessing, vertices " + std::to_string(bad->first) + " and " +
                       std::to_string(bad->second) +
                       " share two closed neighbours; use the oracle for small inputs");
  }
  KappaResult k = kappa(p.graph);
  ReductionStep ks;
  ks.op = Op::kKappa;
  ks.vertices_before = p.graph.n();
  ks.vertices_after = k.gamma.n();
  ks.snapshot = k.gamma;
  p.trace.push_back(std::move(ks));

  GapResult inner = gap_star(k.gamma);
  GapResult r;
  r.gap = p.credit + inner.gap;
  r.t = p.credit + inner.t;
  r.stp = static_cast<long>(g.n()) - r.gap;
  r.method = Method::kKappaTauRecursion;
  r.trace = std::move(p.trace);
  for (auto& s : inner.trace) r.trace.push_back(std::move(s));
  return r;
}

GapResult gap_star(const WeightedMultigraph& g, const EngineConfig& cfg) {
  return GapEngine(cfg).gap_star(g);
}

GapResult gap(const SimpleGraph& g, const EngineConfig& cfg) { return GapEngine(cfg).gap(g); }

namespace {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

class DirectRecursion {
 public:
  explicit DirectRecursion(const SimpleGraph& g) : n_(g.n()), adj_(n_, 0), loop_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u : g.neighbors(v)) adj_[v] |= bit(u);
      loop_[v] = g.has_loop(v);
    }
  }

  long run() { return value(n_ == 64 ? ~Mask{0} : (bit(static_cast<Vertex>(n_)) - 1)); }

 private:
  int degree(Vertex v, Mask m) const {
    return std::popcount(adj_[v] & m) + (loop_[v] ? 2 : 0);
  }

  long value(Mask m) {
    long total = 0;
    while (m) {
      Mask comp = m & (~m + 1);
      Mask frontier = comp;
      while (frontier) {
        Mask grow = 0;
        for (Mask f = frontier; f; f &= f - 1) grow |= adj_[std::countr_zero(f)];
        grow &= m & ~comp;
        comp |= grow;
        frontier = grow;
      }
      m &= ~comp;
      total += component(comp);
    }
    return total;
  }

  long component(Mask c) {
    if (std::popcount(c) == 1) return loop_[std::countr_zero(c)] ? 0 : 1;
    if (auto it = memo_.find(c); it != memo_.end()) return it->second;
    const Mask s = candidates(c);
    long best = 0;
    for (Mask f = s; f; f &= f - 1) {
      best = std::max(best, value(c & ~bit(std::countr_zero(f))) - 1);
    }
    memo_.emplace(c, best);
    return best;
  }

  // Vertices of degree != 2, plus both ends of every chain holding an odd
  // number of degree-2 vertices.
  Mask candidates(Mask c) const {
    Mask s = 0;
    for (Mask f = c; f; f &= f - 1) {
      const Vertex u = std::countr_zero(f);
      if (degree(u, c) == 2) continue;
      s |= bit(u);
      for (Mask nb = adj_[u] & c; nb; nb &= nb - 1) {
        const Vertex first = std::countr_zero(nb);
        Vertex prev = u;
        Vertex cur = first;
        Vertex last = first;
        int inner = 0;
        while (degree(cur, c) == 2) {
          ++inner;
          last = cur;
          const Mask rest = adj_[cur] & c & ~bit(prev);
          prev = cur;
          cur = std::countr_zero(rest);
        }
        if (inner % 2 == 1) s |= bit(first) | bit(last);
      }
    }
    return s;
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<std::uint8_t> loop_;
  std::unordered_map<Mask, long> memo_;
};

}  // namespace

long gap_direct(const SimpleGraph& g) {
  if (g.n() > 64) throw ResourceLimit("gap_direct supports at most 64 vertices");
  if (auto bad = first_square_violation(g)) {
    throw NotInFamily("vertices " + std::to_string(bad->first) + " and " +
                      std::to_string(bad->second) + " share two closed neighbours");
  }
  return DirectRecursion(g).run();
}

long tree_gap(const SimpleGraph& f) {
  const std::size_t n = f.n();
  for (Vertex v = 0; v < n; ++v) {
    if (f.has_loop(v)) throw InvalidArgument("tree_gap: input has a loop");
  }
  if (f.edge_count() + connected_component_sets(f).size() != n) {
    throw InvalidArgument("tree_gap: input has a cycle");
  }
  std::vector<int> deg(n);
  std::vector<std::uint8_t> alive(n, 1);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(f.neighbors(v).size());
    if (deg[v] <= 1) queue.push_back(v);
  }
  long gap = 0;
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    if (!alive[v]) continue;
    if (deg[v] == 0) {
      ++gap;
      alive[v] = 0;
      continue;
    }
    Vertex w = kNoVertex;
    for (Vertex x : f.neighbors(v)) {
      if (alive[x]) w = x;
    }
    alive[v] = alive[w] = 0;
    for (Vertex x : f.neighbors(w)) {
      if (alive[x] && --deg[x] <= 1) queue.push_back(x);
    }
  }
  return gap;
}

namespace {

class IndependentSet {
 public:
  explicit IndependentSet(const WeightedMultigraph& g) : adj_(g.n(), 0) {
    for (const auto& e : g.edges()) {
      if (e.is_loop()) {
        looped_ |= bit(e.u);
      } else {
        adj_[e.u] |= bit(e.v);
        adj_[e.v] |= bit(e.u);
      }
    }
  }

  long run(std::size_t n) {
    const Mask all = n == 64 ? ~Mask{0} : (bit(static_cast<Vertex>(n)) - 1);
    search(all & ~looped_, 0);
    return best_;
  }

 private:
  void search(Mask p, long size) {
    if (size + std::popcount(p) <= best_) return;
    if (!p) {
      best_ = size;
      return;
    }
    // Vertices of degree <= 1 in p belong to some maximum set.
    Vertex pick = kNoVertex;
    int max_deg = -1;
    for (Mask f = p; f; f &= f - 1) {
      const Vertex v = std::countr_zero(f);
      const int d = std::popcount(adj_[v] & p);
      if (d <= 1) {
        search(p & ~adj_[v] & ~bit(v), size + 1);
        return;
      }
      if (d > max_deg) {
        max_deg = d;
        pick = v;
      }
    }
    search(p & ~adj_[pick] & ~bit(pick), size + 1);
    search(p & ~bit(pick), size);
  }

  std::vector<Mask> adj_;
  Mask looped_ = 0;
  long best_ = 0;
};

}  // namespace

long alpha(const WeightedMultigraph& g, std::size_t cap) {
  if (g.n() > std::min<std::size_t>(cap, 64)) {
    throw ResourceLimit("alpha supports at most " + std::to_string(std::min<std::size_t>(cap, 64)) +
                        " vertices");
  }
  return IndependentSet(g).run(g.n());
}

long lower_bound(const WeightedMultigraph& g) {
  if (!all_zero_weight(g)) throw PreconditionViolated("lower_bound requires all weights 0");
  return std::max(0L, 2 * alpha(g) - static_cast<long>(g.n()));
}

}  // namespace sntrank
