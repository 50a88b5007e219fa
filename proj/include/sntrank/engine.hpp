#pragma once

#include <cstddef>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "sntrank/multigraph.hpp"
#include "sntrank/reductions.hpp"
#include "sntrank/simple_graph.hpp"

namespace sntrank {

enum class Method { kKappaTauRecursion, kDirectRecursion, kTreeLinear, kOracle };

std::string_view method_name(Method m);

struct EngineConfig {
  // Largest post-reduction component memoized by canonical form.
  std::size_t memo_cap = 12;
  // Largest post-reduction component the vertex recursion will enter.
  std::size_t max_recursion_vertices = 16;
  // Components with at most six vertices have gap* 0 after reduction.
  bool enable_prop6_base = true;
  // Worker threads for the top-level vertex branches.
  unsigned threads = 1;
};

struct GapResult {
  long gap = 0;
  // |V| - gap of the simple graph in question (zeta(g) for gap_star).
  long stp = 0;
  // Credit collected by tau and preprocessing before the recursion.
  long t = 0;
  Method method = Method::kKappaTauRecursion;
  ReductionTrace trace;
};

// Memoizing evaluator. The memo is shared across calls and guarded by a
// mutex, so one engine may serve several threads.
class GapEngine {
 public:
  explicit GapEngine(EngineConfig cfg = {});

  GapResult gap_star(const WeightedMultigraph& g);
  // Throws NotSupported when preprocessing leaves a graph outside the family.
  GapResult gap(const SimpleGraph& g);

  const EngineConfig& config() const { return cfg_; }
  std::size_t memo_size() const;

 private:
  long value(const WeightedMultigraph& g, int depth);
  long component_value(const WeightedMultigraph& comp, int depth);

  EngineConfig cfg_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, long> memo_;
};

GapResult gap_star(const WeightedMultigraph& g, const EngineConfig& cfg = {});
GapResult gap(const SimpleGraph& g, const EngineConfig& cfg = {});

// Recursion on simple graphs in the family, deleting only vertices of the
// reduced candidate set. Throws NotInFamily; ResourceLimit above 64 vertices.
long gap_direct(const SimpleGraph& g);

// Leaf-pair peeling for loop-free forests; throws InvalidArgument otherwise.
long tree_gap(const SimpleGraph& forest);

// Maximum independent set; looped vertices are never members.
long alpha(const WeightedMultigraph& g, std::size_t cap = 64);

// max(0, 2 alpha - |V|); requires all weights 0.
long lower_bound(const WeightedMultigraph& g);

// Number of vertices of zeta(g).
std::size_t zeta_order(const WeightedMultigraph& g);

}  // namespace sntrank
