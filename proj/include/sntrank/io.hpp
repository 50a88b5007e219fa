#pragma once

#include <string>
#include <string_view>

#include "sntrank/families.hpp"
#include "sntrank/multigraph.hpp"
#include "sntrank/simple_graph.hpp"

namespace sntrank {

// Text format. Lines starting with '#' and blank lines are ignored.
//   graph simple|multi
//   v <n>
//   e <u> <v>        simple; u == v is a loop
//   e <u> <v> <w>    multi; w in {0, 1}; parallel lines allowed
// Throws ParseError with the 1-based line number.
AnyGraph parse_graph(std::string_view text);
AnyGraph read_graph_file(const std::string& path);

// Normalized form: simple edges sorted with u <= v; multigraph edges keep
// their order with u <= v inside each line.
std::string serialize(const SimpleGraph& g);
std::string serialize(const WeightedMultigraph& g);
std::string serialize(const AnyGraph& g);

// Graphviz. Multigraph edges are labelled with their weight and weight-1
// edges are coloured.
std::string to_dot(const WeightedMultigraph& g, std::string_view name = "G");
std::string to_dot(const SimpleGraph& g, std::string_view name = "G");

}  // namespace sntrank
