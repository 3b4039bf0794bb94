#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Lexicographic minimum over all vertex permutations of the upper-triangle
// bit string (column order, matching graph6).  Two graphs share a code iff
// they are isomorphic.  Brute force over order! labelings, so orders above
// 10 are rejected with OrderTooLargeForCanonicalization.
// Layout: one order byte, then the packed triangle bits, high bit first.
std::vector<std::uint8_t> canonical_code(const Graph& g);

// The relabeled graph realizing the canonical code.
Graph canonical_form(const Graph& g);

} // namespace ramsey
