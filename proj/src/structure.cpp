#include "ramsey/structure.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"
#include "ramsey/irredundance.hpp"

namespace ramsey {

namespace {

// order on vertex sets as sorted index sequences
bool lex_set_less(std::uint64_t a, std::uint64_t b) {
    while (a != 0 && b != 0) {
        const int va = std::countr_zero(a);
        const int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

bool induces_c6(const Graph& g, std::uint64_t s) {
    int start = -1;
    for (std::uint64_t rem = s; rem != 0; rem &= rem - 1) {
        const int v = std::countr_zero(rem);
        if (std::popcount(g.neighbors(v) & s) != 2) return false;
        start = start < 0 ? v : start;
    }
    // 2-regular on six vertices is either one 6-cycle or two triangles
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t rem = frontier; rem != 0; rem &= rem - 1)
            next |= g.neighbors(std::countr_zero(rem));
        frontier = next & s & ~seen;
        seen |= frontier;
    }
    return std::popcount(seen) == 6;
}

} // namespace

std::optional<VertexSet> find_triangle(const Graph& g) {
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        const std::uint64_t nu = g.neighbors(u);
        for (std::uint64_t vm = nu >> (u + 1); vm != 0; vm &= vm - 1) {
            const int v = u + 1 + std::countr_zero(vm);
            std::uint64_t common = nu & g.neighbors(v);
            common &= ~((std::uint64_t{2} << v) - 1); // w > v
            if (common != 0) {
                const int w = std::countr_zero(common);
                return VertexSet::of({u, v, w});
            }
        }
    }
    return std::nullopt;
}

std::optional<VertexSet> find_induced_c6_scan(const Graph& g) {
    const int n = g.order();
    if (n < 6) return std::nullopt;
    for (int a = 0; a < n - 5; ++a)
        for (int b = a + 1; b < n - 4; ++b)
            for (int c = b + 1; c < n - 3; ++c)
                for (int d = c + 1; d < n - 2; ++d)
                    for (int e = d + 1; e < n - 1; ++e)
                        for (int f = e + 1; f < n; ++f) {
                            const std::uint64_t s = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                                                    (std::uint64_t{1} << c) | (std::uint64_t{1} << d) |
                                                    (std::uint64_t{1} << e) | (std::uint64_t{1} << f);
                            if (induces_c6(g, s)) return VertexSet{s};
                        }
    return std::nullopt;
}

std::optional<VertexSet> find_induced_c6_dfs(const Graph& g) {
    const int n = g.order();
    if (n < 6) return std::nullopt;
    for (int a = 0; a < n - 5; ++a) {
        const std::uint64_t na = g.neighbors(a);
        const std::uint64_t above = ~((std::uint64_t{2} << a) - 1); // vertices > a
        std::uint64_t best = 0;
        bool found = false;
        // cycle a-p1-p2-p3-p4-p5-a; p5 > p1 kills the reflection
        for (std::uint64_t m1 = na & above; m1 != 0; m1 &= m1 - 1) {
            const int p1 = std::countr_zero(m1);
            const std::uint64_t n1 = g.neighbors(p1);
            for (std::uint64_t m2 = n1 & above & ~na; m2 != 0; m2 &= m2 - 1) {
                const int p2 = std::countr_zero(m2);
                if (p2 == p1) continue;
                const std::uint64_t n2 = g.neighbors(p2);
                for (std::uint64_t m3 = n2 & above & ~na & ~n1; m3 != 0; m3 &= m3 - 1) {
                    const int p3 = std::countr_zero(m3);
                    if (p3 == p1 || p3 == p2) continue;
                    const std::uint64_t n3 = g.neighbors(p3);
                    for (std::uint64_t m4 = n3 & above & ~na & ~n1 & ~n2; m4 != 0; m4 &= m4 - 1) {
                        const int p4 = std::countr_zero(m4);
                        if (p4 == p1 || p4 == p2 || p4 == p3) continue;
                        const std::uint64_t n4 = g.neighbors(p4);
                        std::uint64_t m5 = n4 & na & ~n1 & ~n2 & ~n3;
                        m5 &= ~((std::uint64_t{2} << p1) - 1); // p5 > p1
                        for (; m5 != 0; m5 &= m5 - 1) {
                            const int p5 = std::countr_zero(m5);
                            if (p5 == p2 || p5 == p3 || p5 == p4) continue;
                            const std::uint64_t s = (std::uint64_t{1} << a) | (std::uint64_t{1} << p1) |
                                                    (std::uint64_t{1} << p2) | (std::uint64_t{1} << p3) |
                                                    (std::uint64_t{1} << p4) | (std::uint64_t{1} << p5);
                            if (!found || lex_set_less(s, best)) {
                                best = s;
                                found = true;
                            }
                        }
                    }
                }
            }
        }
        if (found) return VertexSet{best};
    }
    return std::nullopt;
}

std::optional<VertexSet> find_induced_c6(const Graph& g) {
    return g.order() <= 12 ? find_induced_c6_scan(g) : find_induced_c6_dfs(g);
}

bool blue_has_irredundant3(const Graph& g_red, Irr3Mode mode) {
    if (mode == Irr3Mode::characterization)
        return find_triangle(g_red).has_value() || find_induced_c6(g_red).has_value();
    return has_irredundant_set(g_red.complement(), 3).has_value();
}

namespace {

// BFS 2-coloring of one component; on failure returns the odd cycle
bool two_color_component(const Graph& g, std::uint64_t within, int root, std::uint64_t& colored,
                         std::uint64_t& side_a, std::vector<int>& odd_cycle) {
    std::array<int, Graph::max_order> parent{};
    std::array<int, Graph::max_order> depth{};
    parent.fill(-1);
    std::vector<int> queue{root};
    colored |= std::uint64_t{1} << root;
    side_a |= std::uint64_t{1} << root;
    depth[static_cast<std::size_t>(root)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (std::uint64_t m = g.neighbors(u) & within; m != 0; m &= m - 1) {
            const int w = std::countr_zero(m);
            const std::uint64_t wb = std::uint64_t{1} << w;
            if (!(colored & wb)) {
                colored |= wb;
                if (!((side_a >> u) & 1u)) side_a |= wb;
                parent[static_cast<std::size_t>(w)] = u;
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            } else if (((side_a >> u) & 1u) == ((side_a >> w) & 1u)) {
                // same side: walk both ends up to the meeting point
                std::vector<int> up_u{u}, up_w{w};
                int cu = u, cw = w;
                while (depth[static_cast<std::size_t>(cu)] > depth[static_cast<std::size_t>(cw)])
                    up_u.push_back(cu = parent[static_cast<std::size_t>(cu)]);
                while (depth[static_cast<std::size_t>(cw)] > depth[static_cast<std::size_t>(cu)])
                    up_w.push_back(cw = parent[static_cast<std::size_t>(cw)]);
                while (cu != cw) {
                    up_u.push_back(cu = parent[static_cast<std::size_t>(cu)]);
                    up_w.push_back(cw = parent[static_cast<std::size_t>(cw)]);
                }
                // u .. meeting vertex .. w, closed by the conflict edge wu
                odd_cycle.assign(up_u.begin(), up_u.end());
                odd_cycle.insert(odd_cycle.end(), up_w.rbegin() + 1, up_w.rend());
                return false;
            }
        }
    }
    return true;
}

} // namespace

BipartitionComponents bipartition_components(const Graph& g) {
    BipartitionComponents out;
    const std::uint64_t all = g.vertices().bits;
    std::uint64_t colored = 0;
    std::uint64_t side_a = 0;
    std::vector<std::pair<int, BipartitionComponents::Component>> comps; // least vertex, parts
    for (int v = 0; v < g.order(); ++v) {
        if ((colored >> v) & 1u) continue;
        const std::uint64_t before = colored;
        if (!two_color_component(g, all, v, colored, side_a, out.odd_cycle)) {
            out.valid = false;
            out.components.clear();
            return out;
        }
        const std::uint64_t members = colored & ~before;
        VertexSet x{members & side_a};
        VertexSet y{members & ~side_a};
        if (x.count() < y.count()) std::swap(x, y);
        // equal sizes: keep the least vertex of the component in X
        if (x.count() == y.count() && !y.empty() && y.least() == std::countr_zero(members))
            std::swap(x, y);
        comps.push_back({std::countr_zero(members), {x, y}});
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        const int ca = a.second.x.count(), cb = b.second.x.count();
        if (ca != cb) return ca > cb;
        return a.first < b.first;
    });
    out.valid = true;
    for (auto& [least, comp] : comps) out.components.push_back(comp);
    return out;
}

namespace {

// bipartite test of the induced red subgraph on `subset`, with the odd cycle
// reported in original vertex labels
bool subset_bipartite(const Graph& g, VertexSet subset, std::vector<int>& odd_cycle) {
    auto [sub, mapping] = induced(g, subset);
    if (mapping.empty()) return true;
    const auto parts = bipartition_components(sub);
    if (parts.valid) return true;
    odd_cycle.clear();
    for (int v : parts.odd_cycle) odd_cycle.push_back(mapping[static_cast<std::size_t>(v)]);
    return false;
}

} // namespace

D2BipartiteResult check_d2_bipartite(const Graph& g_red, int v) {
    if (v < 0 || v >= g_red.order())
        throw VertexOutOfRange("vertex " + std::to_string(v) + " outside graph");
    if (blue_has_irredundant3(g_red, Irr3Mode::characterization))
        throw PreconditionViolated(
            "blue side contains a 3-element irredundant set; the bipartite property is not implied");
    const DistanceClasses dc = distance_classes(g_red, v);
    const VertexSet d2 = dc.at(2);
    D2BipartiteResult result;
    if (!subset_bipartite(g_red, d2, result.odd_cycle)) {
        result.ok = false;
        result.violating_set = d2;
        return result;
    }
    VertexSet far = dc.beyond(2);
    bool failed = false;
    far.for_each([&](int u) {
        if (failed) return;
        VertexSet x = d2;
        x.add(u);
        if (!subset_bipartite(g_red, x, result.odd_cycle)) {
            result.ok = false;
            result.violating_set = x;
            failed = true;
        }
    });
    return result;
}

bool DegreeBoundReport::any_fail() const {
    for (const auto& c : checks)
        if (c.status == BoundStatus::fail) return true;
    return false;
}

bool DegreeBoundReport::all_known_pass() const { return !any_fail(); }

DegreeBoundReport check_degree_bounds(const Graph& g_red, const RamseyQuery& query,
                                      const KnownValuesRegistry& registry) {
    query.validate();
    const Graph blue = g_red.complement();
    const int p = g_red.order();
    const auto x_m1_n = registry.lookup(query.kind, query.m - 1, query.n);
    const auto x_m_n1 = registry.lookup(query.kind, query.m, query.n - 1);

    DegreeBoundReport report;
    auto push = [&](std::string name, int lhs, const std::optional<RegistryEntry>& bound,
                    auto predicate) {
        DegreeBoundCheck c;
        c.name = std::move(name);
        c.lhs = lhs;
        if (bound) {
            c.rhs = bound->value;
            c.status = predicate(lhs, bound->value) ? BoundStatus::pass : BoundStatus::fail;
        }
        report.checks.push_back(std::move(c));
    };
    auto strictly_below = [](int lhs, int x) { return lhs < x; };
    auto at_least_p_minus = [p](int lhs, int x) { return lhs >= p - x; };

    push("max_red_degree", g_red.max_degree(), x_m1_n, strictly_below);
    push("max_blue_degree", blue.max_degree(), x_m_n1, strictly_below);
    push("min_red_degree", g_red.min_degree(), x_m_n1, at_least_p_minus);
    push("min_blue_degree", blue.min_degree(), x_m1_n, at_least_p_minus);
    return report;
}

ContainmentViolations scan_neighborhood_containment(const Graph& g) {
    if (auto t = find_triangle(g))
        throw GraphHasTriangle("graph contains triangle " + t->to_string());
    ContainmentViolations out;
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        const std::uint64_t nv = g.neighbors(v);
        if (std::popcount(nv) < 2) continue;
        const std::uint64_t outside = g.vertices().bits & ~nv & ~(std::uint64_t{1} << v);
        for (std::uint64_t m1 = outside; m1 != 0; m1 &= m1 - 1) {
            const int v1 = std::countr_zero(m1);
            const std::uint64_t a = g.neighbors(v1) & nv;
            for (std::uint64_t m2 = g.neighbors(v1) & outside; m2 != 0; m2 &= m2 - 1) {
                const int v2 = std::countr_zero(m2);
                for (std::uint64_t m3 = outside; m3 != 0; m3 &= m3 - 1) {
                    const int v3 = std::countr_zero(m3);
                    if (v3 == v1 || v3 == v2) continue;
                    const std::uint64_t n3 = g.neighbors(v3);
                    const std::uint64_t b = n3 & nv;
                    const bool first = (a & ~n3) == 0; // A subset of N(v3)
                    if (first) continue;
                    if ((b & ~a) != 0) out.variant_one.push_back({v, v1, v2, v3});
                    if ((b & ~g.neighbors(v1)) != 0) out.variant_two.push_back({v, v1, v2, v3});
                }
            }
        }
    }
    return out;
}

} // namespace ramsey
