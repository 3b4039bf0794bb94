#include "ramsey/registry.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

char kind_char(Kind k) {
    switch (k) {
        case Kind::s: return 's';
        case Kind::t: return 't';
        case Kind::r: return 'r';
    }
    return '?';
}

Kind parse_kind(std::string_view text) {
    if (text == "s") return Kind::s;
    if (text == "t") return Kind::t;
    if (text == "r") return Kind::r;
    throw UnsupportedKind("kind must be one of s, t, r; got \"" + std::string(text) + "\"");
}

void RamseyQuery::validate() const {
    if (m < 1 || n < 1)
        throw DomainError("query parameters must satisfy m, n >= 1; got m=" + std::to_string(m) +
                          " n=" + std::to_string(n));
}

std::string RamseyQuery::to_string() const {
    return std::string(1, kind_char(kind)) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

KnownValuesRegistry::KnownValuesRegistry() {
    rows_ = {
        {3, 6, 6, 6},   {4, 8, 9, 9},    {5, 12, 12, 14}, {6, 15, 15, 18},
        {7, 18, 18, 23}, {8, 21, 22, 28}, {9, 26, 26, 36},
    };
}

const KnownValuesRegistry& KnownValuesRegistry::standard() {
    static const KnownValuesRegistry reg;
    return reg;
}

std::optional<RegistryEntry> KnownValuesRegistry::lookup(Kind kind, int m, int n) const {
    if (m < 1 || n < 1) return std::nullopt;
    if (n == 1) return RegistryEntry{1, "base-case"};          // x(m,1) = 1
    if (m == 1) return RegistryEntry{1, "base-case"};          // one vertex is always irredundant
    if (m == 2) return RegistryEntry{n, "base-case"};          // x(2,n) = n
    if (n == 2 && m == 3 && kind == Kind::t) return RegistryEntry{3, "base-case"}; // t(3,2) = 3
    if (m == 3) {
        for (const auto& row : rows_)
            if (row.n == n) {
                const int v = kind == Kind::s ? row.s : kind == Kind::t ? row.t : row.r;
                return RegistryEntry{v, "exact-table"};
            }
    }
    return std::nullopt;
}

} // namespace ramsey
