#pragma once

#include <random>
#include <vector>

#include "ramsey/graph.hpp"

namespace testutil {

inline ramsey::Graph cycle(int n) {
    ramsey::GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.finish();
}

inline ramsey::Graph complete(int n) {
    ramsey::GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.finish();
}

inline ramsey::Graph path(int n) {
    ramsey::GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.finish();
}

inline ramsey::Graph star(int leaves) { // center 0
    ramsey::GraphBuilder b(leaves + 1);
    for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
    return b.finish();
}

inline ramsey::Graph petersen() {
    ramsey::GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i + 5, ((i + 2) % 5) + 5);
        b.add_edge(i, i + 5);
    }
    return b.finish();
}

inline ramsey::Graph random_graph(std::mt19937& rng, int n, double p) {
    ramsey::GraphBuilder b(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.add_edge(i, j);
    return b.finish();
}

// all labeled graphs of one order, by edge mask over pairs (0,1),(0,2),(1,2),...
inline ramsey::Graph graph_from_mask(int n, std::uint32_t mask) {
    ramsey::GraphBuilder b(n);
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            if ((mask >> idx) & 1u) b.add_edge(i, j);
    return b.finish();
}

inline std::uint32_t mask_count(int n) { return std::uint32_t{1} << (n * (n - 1) / 2); }

// ---- independent oracles, deliberately naive and separate from the library ----

// subset enumeration over vectors; its own irredundance logic
inline bool oracle_is_irredundant(const ramsey::Graph& g, const std::vector<int>& xs) {
    for (int x : xs) {
        bool isolated = true;
        for (int y : xs)
            if (y != x && g.adjacent(x, y)) isolated = false;
        if (isolated) continue;
        bool has_private = false;
        for (int y = 0; y < g.order() && !has_private; ++y) {
            bool in_x = false;
            for (int m : xs)
                if (m == y) in_x = true;
            if (in_x || !g.adjacent(x, y)) continue;
            bool sees_other = false;
            for (int m : xs)
                if (m != x && g.adjacent(y, m)) sees_other = true;
            if (!sees_other) has_private = true;
        }
        if (!has_private) return false;
    }
    return true;
}

// first k-subset (in lexicographic order) satisfying pred, as a sorted vector
template <class Pred>
inline bool oracle_first_subset(int n, int k, Pred pred, std::vector<int>& out) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int depth, int start) -> bool {
        if (depth == k) return pred(idx);
        for (int v = start; v < n; ++v) {
            idx[static_cast<std::size_t>(depth)] = v;
            if (self(self, depth + 1, v + 1)) return true;
        }
        return false;
    };
    if (k == 0) {
        out.clear();
        return pred(std::vector<int>{});
    }
    if (rec(rec, 0, 0)) {
        out = idx;
        return true;
    }
    return false;
}

} // namespace testutil
