#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "ramsey/engine.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

using Clock = std::chrono::steady_clock;

// Edge variables in fixed lexicographic pair order: (0,1), (0,2), ...,
// (0,p-1), (1,2), ...  Row 0 occupies the first p-1 positions, so seeding
// vertex 0's red neighborhood decides a prefix of the bit vector.
struct PairTable {
    int p;
    std::vector<std::pair<int, int>> pairs;

    explicit PairTable(int p_) : p(p_) {
        for (int u = 0; u < p; ++u)
            for (int v = u + 1; v < p; ++v) pairs.push_back({u, v});
    }
    int total() const { return static_cast<int>(pairs.size()); }
    int index(int u, int v) const { // u < v
        return u * (2 * p - u - 1) / 2 + (v - u - 1);
    }
};

struct SharedSearch {
    RamseyQuery query;
    int p = 0;
    const PairTable* table = nullptr;
    int delta = 0;    // vertex 0 is seeded as a maximum-red-degree vertex
    int minred = 0;   // p - x(3, n-1) when the registry knows it, else 0
    int bluecap = -1; // x(3, n-1) - 1 when known, else -1
    bool prune_c6 = false;
    int clique_n = 0; // a fully blue clique of this size violates the red condition

    std::atomic<std::uint64_t>* nodes = nullptr;
    std::uint64_t max_nodes = 0;
    Clock::time_point deadline;
    std::atomic<bool>* stop = nullptr;
    std::atomic<bool>* limit_hit = nullptr;
};

struct SearchState {
    std::array<std::uint64_t, 64> red{};
    std::array<std::uint64_t, 64> blue{};
    std::array<int, 64> redcnt{};
    std::array<int, 64> bluecnt{};
    std::array<int, 64> undec{};
    std::uint64_t local_nodes = 0;
};

void init_state(SearchState& st, int p) {
    st = SearchState{};
    for (int v = 0; v < p; ++v) st.undec[static_cast<std::size_t>(v)] = p - 1;
}

bool flush_nodes(const SharedSearch& sh, SearchState& st) {
    sh.nodes->fetch_add(st.local_nodes, std::memory_order_relaxed);
    st.local_nodes = 0;
    if (sh.nodes->load(std::memory_order_relaxed) > sh.max_nodes ||
        Clock::now() > sh.deadline) {
        sh.limit_hit->store(true);
        sh.stop->store(true);
        return false;
    }
    return true;
}

bool count_node(const SharedSearch& sh, SearchState& st) {
    if ((++st.local_nodes & 255u) == 0) return flush_nodes(sh, st);
    return true;
}

bool blue_clique_exists(const SearchState& st, std::uint64_t cand, int need) {
    if (need <= 0) return true;
    while (cand != 0) {
        if (std::popcount(cand) < need) return false;
        const int x = std::countr_zero(cand);
        cand &= cand - 1;
        if (blue_clique_exists(st, cand & st.blue[static_cast<std::size_t>(x)], need - 1))
            return true;
    }
    return false;
}

bool mask_induces_c6(const SearchState& st, std::uint64_t s) {
    int start = -1;
    for (std::uint64_t rem = s; rem != 0; rem &= rem - 1) {
        const int v = std::countr_zero(rem);
        if (std::popcount(st.red[static_cast<std::size_t>(v)] & s) != 2) return false;
        if (start < 0) start = v;
    }
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t rem = frontier; rem != 0; rem &= rem - 1)
            next |= st.red[static_cast<std::size_t>(std::countr_zero(rem))];
        frontier = next & s & ~seen;
        seen |= frontier;
    }
    return std::popcount(seen) == 6;
}

// Only 6-subsets whose fifteen pairs are all decided can be tested; with
// lexicographic assignment that is exactly idx(secondmax, max) <= pos.
bool completes_decided_c6(const SharedSearch& sh, const SearchState& st, int pos, int u, int v) {
    const int p = sh.p;
    const std::uint64_t uv = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    std::array<int, 4> w{};
    for (w[0] = 0; w[0] < p; ++w[0]) {
        if ((uv >> w[0]) & 1u) continue;
        for (w[1] = w[0] + 1; w[1] < p; ++w[1]) {
            if ((uv >> w[1]) & 1u) continue;
            for (w[2] = w[1] + 1; w[2] < p; ++w[2]) {
                if ((uv >> w[2]) & 1u) continue;
                for (w[3] = w[2] + 1; w[3] < p; ++w[3]) {
                    if ((uv >> w[3]) & 1u) continue;
                    std::array<int, 6> mem{u, v, w[0], w[1], w[2], w[3]};
                    std::sort(mem.begin(), mem.end());
                    if (sh.table->index(mem[4], mem[5]) > pos) continue;
                    const std::uint64_t s = uv | (std::uint64_t{1} << w[0]) |
                                            (std::uint64_t{1} << w[1]) |
                                            (std::uint64_t{1} << w[2]) |
                                            (std::uint64_t{1} << w[3]);
                    if (mask_induces_c6(st, s)) return true;
                }
            }
        }
    }
    return false;
}

bool try_assign(const SharedSearch& sh, SearchState& st, int pos, int color) {
    const auto [u, v] = sh.table->pairs[static_cast<std::size_t>(pos)];
    const auto su = static_cast<std::size_t>(u);
    const auto sv = static_cast<std::size_t>(v);
    const std::uint64_t bu = std::uint64_t{1} << u;
    const std::uint64_t bv = std::uint64_t{1} << v;
    if (color == 1) {
        if ((st.red[su] & st.red[sv]) != 0) return false; // red triangle
        if (st.redcnt[su] + 1 > sh.delta || st.redcnt[sv] + 1 > sh.delta) return false;
        st.red[su] |= bv;
        st.red[sv] |= bu;
        ++st.redcnt[su];
        ++st.redcnt[sv];
        --st.undec[su];
        --st.undec[sv];
        if (sh.prune_c6 && completes_decided_c6(sh, st, pos, u, v)) {
            st.red[su] &= ~bv;
            st.red[sv] &= ~bu;
            --st.redcnt[su];
            --st.redcnt[sv];
            ++st.undec[su];
            ++st.undec[sv];
            return false;
        }
    } else {
        if (sh.bluecap >= 0 &&
            (st.bluecnt[su] + 1 > sh.bluecap || st.bluecnt[sv] + 1 > sh.bluecap))
            return false;
        if (blue_clique_exists(st, st.blue[su] & st.blue[sv], sh.clique_n - 2)) return false;
        st.blue[su] |= bv;
        st.blue[sv] |= bu;
        ++st.bluecnt[su];
        ++st.bluecnt[sv];
        --st.undec[su];
        --st.undec[sv];
        if (st.redcnt[su] + st.undec[su] < sh.minred ||
            st.redcnt[sv] + st.undec[sv] < sh.minred) {
            st.blue[su] &= ~bv;
            st.blue[sv] &= ~bu;
            --st.bluecnt[su];
            --st.bluecnt[sv];
            ++st.undec[su];
            ++st.undec[sv];
            return false;
        }
    }
    return true;
}

void unassign(const SharedSearch& sh, SearchState& st, int pos, int color) {
    const auto [u, v] = sh.table->pairs[static_cast<std::size_t>(pos)];
    const auto su = static_cast<std::size_t>(u);
    const auto sv = static_cast<std::size_t>(v);
    const std::uint64_t bu = std::uint64_t{1} << u;
    const std::uint64_t bv = std::uint64_t{1} << v;
    if (color == 1) {
        st.red[su] &= ~bv;
        st.red[sv] &= ~bu;
        --st.redcnt[su];
        --st.redcnt[sv];
    } else {
        st.blue[su] &= ~bv;
        st.blue[sv] &= ~bu;
        --st.bluecnt[su];
        --st.bluecnt[sv];
    }
    ++st.undec[su];
    ++st.undec[sv];
}

// blue (0) before red (1): leaves arrive in increasing red-edge bit vector
// order.  on_end returning false aborts the whole traversal.
template <class F>
bool dfs(const SharedSearch& sh, SearchState& st, int pos, int end_pos, F&& on_end) {
    if (sh.stop->load(std::memory_order_relaxed)) return false;
    if (pos == end_pos) return on_end(st);
    for (int color = 0; color < 2; ++color) {
        if (!count_node(sh, st)) return false;
        if (try_assign(sh, st, pos, color)) {
            const bool keep_going = dfs(sh, st, pos + 1, end_pos, on_end);
            unassign(sh, st, pos, color);
            if (!keep_going) return false;
        }
    }
    return true;
}

Graph graph_from_state(const SearchState& st, int p) {
    GraphBuilder b(p);
    for (int u = 0; u < p; ++u)
        for (std::uint64_t m = st.red[static_cast<std::size_t>(u)] >> (u + 1); m != 0; m &= m - 1)
            b.add_edge(u, u + 1 + std::countr_zero(m));
    return b.finish();
}

bool apply_seed(const SharedSearch& sh, SearchState& st) {
    for (int j = 1; j < sh.p; ++j)
        if (!try_assign(sh, st, j - 1, j <= sh.delta ? 1 : 0)) return false;
    return true;
}

// search one delta; returns the least witness or nothing; honours stop flag
std::optional<Graph> search_delta(const SharedSearch& sh, int workers) {
    const int p = sh.p;
    const int total = sh.table->total();
    const int seed_end = p - 1;

    SearchState base;
    init_state(base, p);
    if (!apply_seed(sh, base)) return std::nullopt;
    if (seed_end >= total) { // p <= 2: the seed decides everything
        const Graph g = graph_from_state(base, p);
        return is_valid_witness_fast(g, sh.query) ? std::optional<Graph>(g) : std::nullopt;
    }

    const int block_end = std::min(seed_end + 12, total);

    // enumerate surviving prefixes of the first undecided block, in order
    std::vector<std::vector<int>> prefixes;
    {
        SearchState st = base;
        dfs(sh, st, seed_end, block_end, [&](SearchState& s) {
            std::vector<int> colors;
            colors.reserve(static_cast<std::size_t>(block_end - seed_end));
            for (int i = seed_end; i < block_end; ++i) {
                const auto [u, v] = sh.table->pairs[static_cast<std::size_t>(i)];
                colors.push_back((s.red[static_cast<std::size_t>(u)] >> v) & 1u ? 1 : 0);
            }
            prefixes.push_back(std::move(colors));
            return true;
        });
        flush_nodes(sh, st);
    }
    if (prefixes.empty() || sh.stop->load()) return std::nullopt;

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best_task{prefixes.size()};
    std::optional<Graph> best_witness;
    std::mutex best_mutex;

    auto worker = [&]() {
        SearchState st;
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size() || sh.stop->load(std::memory_order_relaxed)) return;
            if (i > best_task.load(std::memory_order_relaxed)) continue;
            st = base;
            bool ok = true;
            for (int k = 0; k < static_cast<int>(prefixes[i].size()) && ok; ++k)
                ok = try_assign(sh, st, seed_end + k, prefixes[i][static_cast<std::size_t>(k)]);
            if (!ok) continue; // cannot happen: prefixes already passed these checks
            std::optional<Graph> found;
            dfs(sh, st, block_end, total, [&](SearchState& s) {
                const Graph g = graph_from_state(s, p);
                if (is_valid_witness_fast(g, sh.query)) {
                    found = g;
                    return false;
                }
                return true;
            });
            flush_nodes(sh, st);
            if (found) {
                std::lock_guard<std::mutex> lock(best_mutex);
                if (i < best_task.load()) {
                    best_task.store(i);
                    best_witness = std::move(found);
                }
            }
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return best_witness;
}

DecideOutcome decide_m3(const RamseyQuery& query, int p, const SearchLimits& limits,
                        const KnownValuesRegistry& registry) {
    PairTable table(p);
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> limit_hit{false};

    SharedSearch sh;
    sh.query = query;
    sh.p = p;
    sh.table = &table;
    sh.prune_c6 = query.kind != Kind::r;
    sh.clique_n = query.n;
    sh.nodes = &nodes;
    sh.max_nodes = limits.max_nodes;
    sh.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(
                                         std::min(limits.max_seconds, 1e9)));
    sh.stop = &stop;
    sh.limit_hit = &limit_hit;

    int delta_hi = p - 1;
    if (const auto cap = registry.lookup(query.kind, 2, query.n))
        delta_hi = std::min(delta_hi, cap->value - 1);
    sh.minred = 0;
    if (const auto prev = registry.lookup(query.kind, 3, query.n - 1)) {
        sh.minred = std::max(0, p - prev->value);
        sh.bluecap = prev->value - 1;
    }

    for (int delta = sh.minred; delta <= delta_hi; ++delta) {
        sh.delta = delta;
        auto witness = search_delta(sh, limits.workers);
        // a verified witness stands even if another worker tripped the limit
        if (witness) return {DecideOutcome::Status::witness, std::move(witness), nodes.load()};
        if (limit_hit.load())
            return {DecideOutcome::Status::limit_exceeded, std::nullopt, nodes.load()};
    }
    return {DecideOutcome::Status::forced, std::nullopt, nodes.load()};
}

} // namespace

DecideOutcome decide_exhaustive(const RamseyQuery& query, int p, const SearchLimits& limits) {
    query.validate();
    if (p < 1 || p > Graph::max_order)
        throw OrderTooLarge("decide order must be in 1..64, got " + std::to_string(p));
    if (p > 7)
        throw GenericPathTooLarge("the all-colorings path enumerates 2^C(p,2) graphs; p <= 7 only");
    PairTable table(p);
    const int total = table.total();
    const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(
                                                 std::min(limits.max_seconds, 1e9)));
    std::uint64_t nodes = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
        ++nodes;
        if (nodes > limits.max_nodes ||
            ((nodes & 255u) == 0 && Clock::now() > deadline))
            return {DecideOutcome::Status::limit_exceeded, std::nullopt, nodes};
        GraphBuilder b(p);
        for (int i = 0; i < total; ++i)
            if ((mask >> (total - 1 - i)) & 1u) {
                const auto [u, v] = table.pairs[static_cast<std::size_t>(i)];
                b.add_edge(u, v);
            }
        const Graph g = b.finish();
        if (is_valid_witness_fast(g, query))
            return {DecideOutcome::Status::witness, g, nodes};
    }
    return {DecideOutcome::Status::forced, std::nullopt, nodes};
}

DecideOutcome decide(const RamseyQuery& query, int p, const SearchLimits& limits,
                     const KnownValuesRegistry& registry) {
    query.validate();
    if (p < 1 || p > Graph::max_order)
        throw OrderTooLarge("decide order must be in 1..64, got " + std::to_string(p));
    if (query.m == 1 || query.n == 1) {
        // a single vertex is irredundant and independent, so one side of the
        // query is always satisfied and no coloring of any order avoids it
        return {DecideOutcome::Status::forced, std::nullopt, 0};
    }
    if (query.m == 3) return decide_m3(query, p, limits, registry);
    return decide_exhaustive(query, p, limits);
}

std::vector<CirculantSpec> circulant_search(int p, const RamseyQuery& query) {
    query.validate();
    if (p > Graph::max_order)
        throw OrderTooLarge("circulant search limited to order 64, got " + std::to_string(p));
    const int half = p / 2;
    std::vector<CirculantSpec> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << half); ++mask) {
        CirculantSpec spec;
        spec.p = p;
        for (int s = 1; s <= half; ++s)
            if ((mask >> (s - 1)) & 1u) spec.connections.push_back(s);
        if (is_valid_witness_fast(circulant(spec), query)) out.push_back(std::move(spec));
    }
    std::sort(out.begin(), out.end(), [](const CirculantSpec& a, const CirculantSpec& b) {
        if (a.connections.size() != b.connections.size())
            return a.connections.size() < b.connections.size();
        return a.connections < b.connections;
    });
    return out;
}

} // namespace ramsey
