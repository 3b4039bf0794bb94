#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/registry.hpp"

namespace ramsey {

// Least triangle by sorted-vertex-sequence order, or nothing.
std::optional<VertexSet> find_triangle(const Graph& g);

// Least 6-set inducing exactly a 6-cycle.  Subset scan up to order 12, path
// extension with non-adjacency pruning above; identical least-witness
// contract either way.  Both entry points stay visible for equivalence
// testing.
std::optional<VertexSet> find_induced_c6(const Graph& g);
std::optional<VertexSet> find_induced_c6_scan(const Graph& g);
std::optional<VertexSet> find_induced_c6_dfs(const Graph& g);

// Whether the blue side of the coloring whose red subgraph is g_red contains
// a 3-element irredundant set.  characterization mode answers via red
// triangle-or-induced-6-cycle, brute_force searches the complement directly;
// the two must agree on every input.
enum class Irr3Mode { characterization, brute_force };
bool blue_has_irredundant3(const Graph& g_red, Irr3Mode mode);

// Proper 2-colorings of the connected components, normalized: |X_i| >= |Y_i|
// (ties keep the component's least vertex in X), components ordered by
// decreasing |X_i|, ties by least vertex.  When the graph is not bipartite,
// valid is false and odd_cycle holds the witness cycle.
struct BipartitionComponents {
    struct Component {
        VertexSet x, y;
    };
    bool valid = false;
    std::vector<Component> components;
    std::vector<int> odd_cycle;
};
BipartitionComponents bipartition_components(const Graph& g);

// For a red graph with no blue 3-irredundant set, every subset of the
// non-neighborhood of v taking at most one vertex from beyond distance 2
// induces a bipartite red subgraph.  Bipartiteness is hereditary, so checking
// <D2> and each <D2 + u>, u at distance > 2 (unreachable counts), covers all
// of them.  Throws PreconditionViolated when blue does have a 3-irredundant
// set.
struct D2BipartiteResult {
    bool ok = true;
    VertexSet violating_set; // the X whose induced red subgraph is odd
    std::vector<int> odd_cycle;
};
D2BipartiteResult check_d2_bipartite(const Graph& g_red, int v);

// The four degree inequalities a valid witness coloring must satisfy, each
// resolved against registry values (unknown when the registry lacks the
// needed number).
enum class BoundStatus { pass, fail, unknown };
struct DegreeBoundCheck {
    std::string name;
    BoundStatus status = BoundStatus::unknown;
    int lhs = 0;
    std::optional<int> rhs;
};
struct DegreeBoundReport {
    std::vector<DegreeBoundCheck> checks;
    bool any_fail() const;
    bool all_known_pass() const;
};
DegreeBoundReport check_degree_bounds(const Graph& g_red, const RamseyQuery& query,
                                      const KnownValuesRegistry& registry);

// Quadruple scan over triangle-free graphs: for every v of degree >= 2 and
// distinct v1, v2, v3 outside N[v] with v1v2 an edge, tests two disjunctions
// with A = N(v1) & N(v), B = N(v3) & N(v):
//   variant_one:  A subset of N(v3)   OR  B subset of A
//   variant_two:  A subset of N(v3)   OR  B subset of N(v1)
// Returns every quadruple failing each variant (GraphHasTriangle if the
// precondition fails).
struct ContainmentQuad {
    int v, v1, v2, v3;
    auto operator<=>(const ContainmentQuad&) const = default;
};
struct ContainmentViolations {
    std::vector<ContainmentQuad> variant_one;
    std::vector<ContainmentQuad> variant_two;
};
ContainmentViolations scan_neighborhood_containment(const Graph& g);

} // namespace ramsey
