#pragma once

#include <optional>

#include "ramsey/graph.hpp"

namespace ramsey {

// Vertices outside x_set adjacent to x and to no other member of x_set.
// x must belong to x_set (VertexNotInSet otherwise).
VertexSet private_neighbors(const Graph& g, VertexSet x_set, int x);

// Every member is isolated in the induced subgraph or owns a private
// neighbor.  The empty set qualifies.
bool is_irredundant(const Graph& g, VertexSet x_set);

// Depth-first extension of irredundant partial sets, vertices tried in
// increasing index order.  Irredundance is hereditary, so pruning partial
// sets that fail the predicate is exact.  Returns the lexicographically
// least k-element witness (as a sorted index sequence) or nothing.
// k = 0 yields the empty set.
std::optional<VertexSet> has_irredundant_set(const Graph& g, int k);

// Same search over common non-neighbors.
std::optional<VertexSet> has_independent_set(const Graph& g, int k);

// Exact IR(g) and alpha(g); IR >= alpha always.
int max_irredundant_size(const Graph& g);
int max_independent_size(const Graph& g);

} // namespace ramsey
