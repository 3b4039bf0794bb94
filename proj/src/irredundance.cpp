#include "ramsey/irredundance.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// raw-mask core shared by the predicate and the searches
bool irredundant_mask(const Graph& g, std::uint64_t x) {
    for (std::uint64_t rem = x; rem != 0; rem &= rem - 1) {
        const int v = std::countr_zero(rem);
        const std::uint64_t nv = g.neighbors(v);
        if ((nv & x) == 0) continue; // isolated in <X>
        bool has_private = false;
        for (std::uint64_t cand = nv & ~x; cand != 0; cand &= cand - 1) {
            const int y = std::countr_zero(cand);
            if ((g.neighbors(y) & x) == (std::uint64_t{1} << v)) {
                has_private = true;
                break;
            }
        }
        if (!has_private) return false;
    }
    return true;
}

bool irredundant_dfs(const Graph& g, std::uint64_t x, int count, int start, int k,
                     std::uint64_t& out) {
    if (count == k) {
        out = x;
        return true;
    }
    const int n = g.order();
    for (int v = start; v < n; ++v) {
        if (count + (n - v) < k) break;
        const std::uint64_t x2 = x | (std::uint64_t{1} << v);
        if (irredundant_mask(g, x2) && irredundant_dfs(g, x2, count + 1, v + 1, k, out))
            return true;
    }
    return false;
}

bool independent_dfs(const Graph& g, std::uint64_t x, std::uint64_t candidates, int count,
                     int k, std::uint64_t& out) {
    if (count == k) {
        out = x;
        return true;
    }
    while (candidates != 0) {
        if (count + std::popcount(candidates) < k) return false;
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        const std::uint64_t rest = candidates & ~g.neighbors(v);
        if (independent_dfs(g, x | (std::uint64_t{1} << v), rest, count + 1, k, out))
            return true;
    }
    return false;
}

} // namespace

VertexSet private_neighbors(const Graph& g, VertexSet x_set, int x) {
    if (x < 0 || x >= g.order())
        throw VertexOutOfRange("vertex " + std::to_string(x) + " outside graph");
    if (!x_set.contains(x))
        throw VertexNotInSet("vertex " + std::to_string(x) + " not in the queried set");
    const std::uint64_t xs = x_set.bits & g.vertices().bits;
    std::uint64_t result = 0;
    for (std::uint64_t cand = g.neighbors(x) & ~xs; cand != 0; cand &= cand - 1) {
        const int y = std::countr_zero(cand);
        if ((g.neighbors(y) & xs) == (std::uint64_t{1} << x))
            result |= std::uint64_t{1} << y;
    }
    return VertexSet{result};
}

bool is_irredundant(const Graph& g, VertexSet x_set) {
    return irredundant_mask(g, x_set.bits & g.vertices().bits);
}

std::optional<VertexSet> has_irredundant_set(const Graph& g, int k) {
    if (k < 0 || k > g.order()) return std::nullopt;
    std::uint64_t out = 0;
    if (irredundant_dfs(g, 0, 0, 0, k, out)) return VertexSet{out};
    return std::nullopt;
}

std::optional<VertexSet> has_independent_set(const Graph& g, int k) {
    if (k < 0 || k > g.order()) return std::nullopt;
    std::uint64_t out = 0;
    if (independent_dfs(g, 0, g.vertices().bits, 0, k, out)) return VertexSet{out};
    return std::nullopt;
}

int max_irredundant_size(const Graph& g) {
    int best = 0;
    for (int k = 1; k <= g.order(); ++k) {
        if (!has_irredundant_set(g, k)) break;
        best = k;
    }
    return best;
}

int max_independent_size(const Graph& g) {
    int best = 0;
    for (int k = 1; k <= g.order(); ++k) {
        if (!has_independent_set(g, k)) break;
        best = k;
    }
    return best;
}

} // namespace ramsey
