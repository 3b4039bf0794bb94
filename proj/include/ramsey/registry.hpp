#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

// Which pair of chromatic conditions a query imposes:
//   s — irredundant sets on both sides,
//   t — blue irredundant, red independent,
//   r — independent sets on both sides (classical).
enum class Kind { s, t, r };

char kind_char(Kind k);
Kind parse_kind(std::string_view text); // throws UnsupportedKind

struct RamseyQuery {
    Kind kind = Kind::s;
    int m = 1;
    int n = 1;

    void validate() const; // m, n >= 1
    std::string to_string() const; // "s(3,9)"
};

struct RegistryEntry {
    int value = 0;
    // "exact-table" for curated exact values, "base-case" for the rules
    // x(m,1)=1, x(2,n)=n and the curated small mixed values
    std::string_view provenance;
};

// Exactly known values plus base-case rules, shared by the degree-bound
// checks, the recurrence table and the reports.
class KnownValuesRegistry {
public:
    static const KnownValuesRegistry& standard();

    std::optional<RegistryEntry> lookup(Kind kind, int m, int n) const;

    struct CuratedRow {
        int n;
        int s, t, r;
    };
    // the seven curated rows, n = 3..9
    const std::vector<CuratedRow>& curated() const { return rows_; }

private:
    KnownValuesRegistry();
    std::vector<CuratedRow> rows_;
};

} // namespace ramsey
