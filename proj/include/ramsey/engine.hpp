#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/registry.hpp"
#include "ramsey/structure.hpp"

namespace ramsey {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::optional<VertexSet> witness; // the violating set when pass is false

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ConditionSummary {
    bool pass = false;
    std::optional<VertexSet> witness;
};

// Everything verify_witness establishes about one candidate coloring.  The
// stored graph is the red subgraph; blue is its complement.  is_valid_witness
// holds exactly when both chromatic conditions pass; the degree bounds are
// informational.
struct VerificationReport {
    RamseyQuery query;
    int order = 0;
    ConditionSummary blue_condition;
    ConditionSummary red_condition;
    DegreeBoundReport degree_bounds;
    std::vector<CheckResult> checks;
    bool is_valid_witness = false;
};

// Kind dispatch lives here and only here:
//   s — blue m-irredundant absent, red n-irredundant absent
//   t — blue m-irredundant absent, red n-independent absent
//   r — blue m-independent absent, red n-independent absent
// For m = 3 with kinds s and t the blue side is evaluated both through the
// red triangle-or-induced-6-cycle characterization and by brute force over
// blue triples; the two must agree.
VerificationReport verify_witness(const Graph& g_red, const RamseyQuery& query);

// validity alone, cheapest checks first; agrees with verify_witness
bool is_valid_witness_fast(const Graph& g_red, const RamseyQuery& query);

struct SearchLimits {
    std::uint64_t max_nodes = std::uint64_t{1} << 62;
    double max_seconds = 1e18;
    int workers = 1;
};

struct DecideOutcome {
    enum class Status { forced, witness, limit_exceeded };
    Status status = Status::forced;
    std::optional<Graph> witness;
    std::uint64_t nodes = 0;
};

// Exhaustively decides whether a valid witness coloring of order p exists.
// m = 3 runs the specialized edge-variable DFS (fixed lexicographic pair
// order, vertex 0 seeded as a maximum-red-degree vertex, triangle /
// fully-decided-induced-6-cycle / blue-clique / degree pruning, exact leaf
// verification); other m fall back to enumerating all colorings, accepted
// only for p <= 7.  Deterministic across worker counts: the returned witness
// is the least one the fixed scheme encounters, by red-edge bit vector.
DecideOutcome decide(const RamseyQuery& query, int p, const SearchLimits& limits = {},
                     const KnownValuesRegistry& registry = KnownValuesRegistry::standard());

// the generic all-colorings path, exposed for cross-validation
DecideOutcome decide_exhaustive(const RamseyQuery& query, int p, const SearchLimits& limits = {});

// Every connection set (all 2^floor(p/2) - 1 nonempty ones) whose circulant
// graph is a valid witness, sorted by size then lexicographically.
std::vector<CirculantSpec> circulant_search(int p, const RamseyQuery& query);

// All isomorphism classes of 7-vertex graphs that are triangle-free, have no
// induced 6-cycle, no independent 4-set, and maximum degree at most 3.
struct FamilyMember {
    Graph graph; // canonical form
    std::vector<std::uint8_t> code;
};
struct FamilyEnumeration {
    std::vector<FamilyMember> classes; // sorted by code
    std::uint64_t labeled_count = 0;
};
FamilyEnumeration enumerate_f_family();

} // namespace ramsey
