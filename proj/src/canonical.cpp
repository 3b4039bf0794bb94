#include "ramsey/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

constexpr int kMaxCanonicalOrder = 10; // 10! permutations, 45 triangle bits

// triangle bits of g under perm, packed high-bit-first into one word
std::uint64_t triangle_bits(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    const int total = n * (n - 1) / 2;
    std::uint64_t bits = 0;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                bits |= std::uint64_t{1} << (total - 1 - k);
    return bits;
}

std::pair<std::uint64_t, std::vector<int>> minimal_labeling(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonicalOrder)
        throw OrderTooLargeForCanonicalization("canonical code limited to order 10, got " +
                                               std::to_string(n));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> best_perm = perm;
    do {
        const std::uint64_t bits = triangle_bits(g, perm);
        if (bits < best) {
            best = bits;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, best_perm};
}

} // namespace

std::vector<std::uint8_t> canonical_code(const Graph& g) {
    const int n = g.order();
    auto [bits, perm] = minimal_labeling(g);
    const int total = n * (n - 1) / 2;
    const int nbytes = (total + 7) / 8;
    std::vector<std::uint8_t> code;
    code.reserve(static_cast<std::size_t>(1 + nbytes));
    code.push_back(static_cast<std::uint8_t>(n));
    for (int b = 0; b < nbytes; ++b) {
        const int shift = total - 8 * (b + 1);
        const std::uint64_t byte =
            shift >= 0 ? (bits >> shift) & 0xff : (bits << -shift) & 0xff;
        code.push_back(static_cast<std::uint8_t>(byte));
    }
    return code;
}

Graph canonical_form(const Graph& g) {
    auto [bits, perm] = minimal_labeling(g);
    const int n = g.order();
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                b.add_edge(i, j);
    return b.finish();
}

} // namespace ramsey
