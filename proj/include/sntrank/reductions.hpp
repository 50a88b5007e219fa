#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "sntrank/multigraph.hpp"

namespace sntrank {

enum class Op {
  kLeafElim,
  kDeg2Suppress,
  kContract1Edge,
  kElim1Loop,
  kDedupe0Edges,
  kTau1,
  kTau2,
  kTau3,
  // Simple-graph preprocessing performed by gap().
  kLeafPair,
  kTwin,
  kPendantC4,
  kKappa,
};

std::string_view op_name(Op op);

struct ReductionStep {
  Op op = Op::kTau1;
  long t_delta = 0;
  std::size_t vertices_before = 0;
  std::size_t vertices_after = 0;
  std::vector<Vertex> detail;
  // Multigraph after the step; empty for simple-graph preprocessing.
  WeightedMultigraph snapshot;
};

using ReductionTrace = std::vector<ReductionStep>;

// Elementary operations. Each throws PreconditionViolated when the site does
// not satisfy the operation's precondition.
WeightedMultigraph eliminate_leaf(const WeightedMultigraph& g, Vertex v);
WeightedMultigraph suppress_deg2(const WeightedMultigraph& g, Vertex u);
WeightedMultigraph contract_1edge(const WeightedMultigraph& g, EdgeId e);
WeightedMultigraph eliminate_1loop(const WeightedMultigraph& g, EdgeId e);
WeightedMultigraph dedupe_0edges(const WeightedMultigraph& g);

struct PassResult {
  WeightedMultigraph graph;
  long t = 0;
  bool changed = false;
};

// Collapse tree-like 1-components to single vertices and delete the others,
// crediting eps1 - |part| for each deleted part. Output is all-0, simple
// apart from at most one loop per vertex.
PassResult tau1(const WeightedMultigraph& g);
// Delete leaves L and their neighbours N(L), crediting |L| - |N(L)|.
// Requires no weight-1 edges.
PassResult tau2(const WeightedMultigraph& g);
// Delete isolated vertices (credited one each), then suppress degree-2
// vertices in ascending id order until none is left.
PassResult tau3(const WeightedMultigraph& g);

struct TauResult {
  WeightedMultigraph reduced;
  long t = 0;
  ReductionTrace trace;
};

// Iterate tau1, tau2, tau3 until a full round reports no change.
TauResult tau(const WeightedMultigraph& g);

// Scan for the fixed-point invariants: weights 0, no parallel edges, at most
// one loop per vertex, minimum degree 3.
bool is_tau_reduced(const WeightedMultigraph& g);

}  // namespace sntrank
