#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "sntrank/simple_graph.hpp"

namespace sntrank {

using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free

// K v L: every edge {k, l} with k in K, l in L; a loop at i when i in K and L.
struct SetJoin {
  VertexSet k;
  VertexSet l;
  friend bool operator==(const SetJoin&, const SetJoin&) = default;
};

struct SetJoinCover {
  std::vector<SetJoin> joins;
  // Distinct components, sorted.
  std::vector<VertexSet> components() const;
  std::size_t order() const { return components().size(); }
};

enum class VertexType { kA, kB, kC, kUntyped };

std::string_view type_name(VertexType t);

struct CoverAnalysis {
  std::vector<VertexSet> components;
  std::size_t order = 0;
  VertexSet v1;                     // v with {v} a component
  std::vector<VertexSet> n1;        // N[x] restricted to v1
  std::vector<VertexSet> nstar;     // N[x] outside v1
  std::vector<VertexType> types;
};

// Throws InvalidCover naming the first excess or uncovered edge.
CoverAnalysis validate_cover(const SimpleGraph& g, const SetJoinCover& c);

std::vector<VertexType> classify_types(const SimpleGraph& g, const SetJoinCover& c);

// Rewrites the joins at every x in V1 that has a non-singleton partner as
// {x} v N*[x] plus {x} v {v} for v in N1[x], until stable. Requires the
// family; the order never increases and every vertex ends typed.
SetJoinCover abc_normalize(const SimpleGraph& g, const SetJoinCover& c);

struct OracleResult {
  long stp = 0;
  SetJoinCover witness;
};

inline constexpr std::size_t kOracleMaxN = 9;

// Exact minimum cover order by iterative deepening over component families.
// Throws ResourceLimit when n exceeds max_n (hard limit kOracleMaxN).
OracleResult stp_bruteforce(const SimpleGraph& g, std::size_t max_n = 8);

}  // namespace sntrank
