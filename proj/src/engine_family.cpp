#include <algorithm>
#include <numeric>

#include "ramsey/canonical.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/irredundance.hpp"

namespace ramsey {

namespace {

constexpr int kN = 7;
constexpr int kPairs = kN * (kN - 1) / 2; // 21

struct PairIndex {
    std::array<std::array<int, kN>, kN> at{};
    std::array<std::pair<int, int>, kPairs> pair{};

    PairIndex() {
        int idx = 0;
        for (int i = 0; i < kN; ++i)
            for (int j = i + 1; j < kN; ++j, ++idx) {
                at[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = idx;
                at[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = idx;
                pair[static_cast<std::size_t>(idx)] = {i, j};
            }
    }
};

std::uint32_t apply_perm(std::uint32_t mask, const std::array<int, kPairs>& remap) {
    std::uint32_t out = 0;
    while (mask != 0) {
        const int b = std::countr_zero(mask);
        mask &= mask - 1;
        out |= std::uint32_t{1} << remap[static_cast<std::size_t>(b)];
    }
    return out;
}

} // namespace

FamilyEnumeration enumerate_f_family() {
    const PairIndex pidx;

    // edge-relabeling table for all 7! vertex permutations
    std::vector<std::array<int, kPairs>> remaps;
    {
        std::array<int, kN> perm{};
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::array<int, kPairs> rm{};
            for (int b = 0; b < kPairs; ++b) {
                const auto [i, j] = pidx.pair[static_cast<std::size_t>(b)];
                rm[static_cast<std::size_t>(b)] =
                    pidx.at[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                           [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
            }
            remaps.push_back(rm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<std::uint8_t> seen(std::size_t{1} << kPairs, 0);
    FamilyEnumeration result;
    std::vector<std::uint32_t> class_masks;

    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << kPairs); ++mask) {
        if (seen[mask]) { // an earlier class member: already known to qualify
            ++result.labeled_count;
            continue;
        }
        std::array<std::uint64_t, kN> adj{};
        for (std::uint32_t m = mask; m != 0; m &= m - 1) {
            const auto [i, j] = pidx.pair[static_cast<std::size_t>(std::countr_zero(m))];
            adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
            adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
        }
        bool ok = true;
        for (int v = 0; v < kN && ok; ++v)
            ok = std::popcount(adj[static_cast<std::size_t>(v)]) <= 3;
        if (!ok) continue;
        GraphBuilder b(kN);
        for (std::uint32_t m = mask; m != 0; m &= m - 1) {
            const auto [i, j] = pidx.pair[static_cast<std::size_t>(std::countr_zero(m))];
            b.add_edge(i, j);
        }
        const Graph g = b.finish();
        if (find_triangle(g)) continue;
        if (has_independent_set(g, 4)) continue;
        if (find_induced_c6(g)) continue;
        ++result.labeled_count;
        class_masks.push_back(mask);
        for (const auto& rm : remaps) seen[apply_perm(mask, rm)] = 1;
    }

    for (std::uint32_t mask : class_masks) {
        GraphBuilder b(kN);
        for (std::uint32_t m = mask; m != 0; m &= m - 1) {
            const auto [i, j] = pidx.pair[static_cast<std::size_t>(std::countr_zero(m))];
            b.add_edge(i, j);
        }
        FamilyMember member{canonical_form(b.finish()), {}};
        member.code = canonical_code(member.graph);
        result.classes.push_back(std::move(member));
    }
    std::sort(result.classes.begin(), result.classes.end(),
              [](const FamilyMember& a, const FamilyMember& b) { return a.code < b.code; });
    return result;
}

} // namespace ramsey
