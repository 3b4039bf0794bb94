#pragma once

#include <optional>
#include <string>

#include "ramsey/engine.hpp"

namespace ramsey {

// Serializable record binding a graph, a query, a claim and the checks that
// were run.  lower_bound(v) certificates carry a graph6 encoding of a valid
// witness of order v-1; forced(p) certificates carry no graph and replay the
// decision search on recheck.
struct Certificate {
    static constexpr int kSchemaVersion = 1;

    int schema_version = kSchemaVersion;
    RamseyQuery query;
    struct Claim {
        enum class Type { lower_bound, forced };
        Type type = Type::lower_bound;
        int value = 0;
    } claim;
    std::optional<std::string> graph6;
    std::vector<CheckResult> checks;
    SearchLimits limits;
    std::string tool_version;
    std::string timestamp;
};

// from a verification of a valid witness; throws CheckMismatch if the report
// is not valid (certificates never attest failures)
Certificate make_certificate(const VerificationReport& report, const Graph& g_red);

// from a completed decision at order p
Certificate make_certificate(const RamseyQuery& query, int p, const DecideOutcome& outcome,
                             const SearchLimits& limits);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(std::string_view text); // SchemaMismatch, UnsupportedKind

// Re-runs every named check from scratch and compares.  Throws GraphMissing
// for a lower_bound certificate without a graph, CheckMismatch when any
// recomputed check differs, LimitExceededError when a forced replay hits its
// recorded limits.  Returns true when everything reproduces.
bool recheck(const Certificate& cert);

} // namespace ramsey
