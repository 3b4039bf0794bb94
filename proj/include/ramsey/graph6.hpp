#pragma once

#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

// Standard graph6 ASCII encoding: N(n) header, then the upper triangle in
// column order x(0,1), x(0,2), x(1,2), x(0,3), ..., six bits per byte offset
// by 63, high bit first, zero padding.  parse accepts both the one-byte
// header and the '~'-prefixed long form; emit uses the long form only for
// orders above 62.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Edge-list text format: first line "p m", then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// Auto-detects the two formats by the first byte (digits start an edge list,
// graph6 bytes are always >= 63).  Leading whitespace ignored.
Graph parse_graph_auto(std::string_view text);

} // namespace ramsey
