#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph construction
struct OrderOutOfRange : Error { using Error::Error; };
struct LoopEdge : Error { using Error::Error; };
struct VertexOutOfRange : Error { using Error::Error; };
struct ConnectionOutOfRange : Error { using Error::Error; };

// graph6 / edge-list I/O
struct MalformedHeader : Error { using Error::Error; };
struct TruncatedBits : Error { using Error::Error; };
struct TrailingGarbage : Error { using Error::Error; };

// canonicalization
struct OrderTooLargeForCanonicalization : Error { using Error::Error; };

// irredundance
struct VertexNotInSet : Error { using Error::Error; };

// structure checks
struct PreconditionViolated : Error { using Error::Error; };
struct GraphHasTriangle : Error { using Error::Error; };
struct UnsupportedKind : Error { using Error::Error; };

// bounds
struct DomainError : Error { using Error::Error; };
struct NoSignChange : Error { using Error::Error; };
struct MissingSeed : Error { using Error::Error; };

// engine
struct OrderTooLarge : Error { using Error::Error; };
struct GenericPathTooLarge : Error { using Error::Error; };

// certificates
struct SchemaMismatch : Error { using Error::Error; };
struct GraphMissing : Error { using Error::Error; };
struct CheckMismatch : Error { using Error::Error; };

// a recheck replay ran into its recorded search limits
struct LimitExceededError : Error { using Error::Error; };

} // namespace ramsey
