#include "ramsey/graph.hpp"

#include <algorithm>
#include <deque>

#include "ramsey/errors.hpp"

namespace ramsey {

Graph::Graph(int order) : order_(order) {
    if (order < 1 || order > max_order)
        throw OrderOutOfRange("graph order must be in 1..64, got " + std::to_string(order));
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw LoopEdge("loop edge at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw VertexOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") exceeds order " + std::to_string(order_));
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(order, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    int d = order_;
    for (int v = 0; v < order_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < order_; ++v) twice += degree(v);
    return twice / 2;
}

Graph Graph::complement() const {
    Graph c(order_);
    const std::uint64_t all = full_vertex_set(order_).bits;
    for (int v = 0; v < order_; ++v)
        c.adj_[static_cast<std::size_t>(v)] =
            all & ~adj_[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
    return c;
}

std::string CirculantSpec::to_string() const {
    std::string s = "C" + std::to_string(p) + "<";
    for (std::size_t i = 0; i < connections.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(connections[i]);
    }
    return s + ">";
}

Graph circulant(const CirculantSpec& spec) {
    if (spec.p < 2 || spec.p > Graph::max_order)
        throw OrderOutOfRange("circulant order must be in 2..64, got " + std::to_string(spec.p));
    const int half = spec.p / 2;
    std::uint64_t seen = 0;
    for (int s : spec.connections) {
        if (s < 1 || s > half)
            throw ConnectionOutOfRange("connection " + std::to_string(s) + " outside 1.." +
                                       std::to_string(half));
        if ((seen >> s) & 1u)
            throw ConnectionOutOfRange("duplicate connection " + std::to_string(s));
        seen |= std::uint64_t{1} << s;
    }
    Graph g(spec.p);
    for (int i = 0; i < spec.p; ++i)
        for (int s : spec.connections) {
            g.add_edge(i, (i + s) % spec.p);
        }
    return g;
}

InducedSubgraph induced(const Graph& g, VertexSet vs) {
    if (!vs.subset_of(g.vertices()))
        throw VertexOutOfRange("induced vertex set exceeds graph order");
    std::vector<int> mapping = vs.to_vector();
    const int k = static_cast<int>(mapping.size());
    GraphBuilder b(std::max(k, 1));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(mapping[static_cast<std::size_t>(i)], mapping[static_cast<std::size_t>(j)]))
                b.add_edge(i, j);
    return {b.finish(), std::move(mapping)};
}

VertexSet DistanceClasses::at(int distance) const {
    if (distance < 0 || distance >= static_cast<int>(levels.size())) return {};
    return levels[static_cast<std::size_t>(distance)];
}

VertexSet DistanceClasses::beyond(int distance) const {
    VertexSet out = unreachable;
    for (int d = distance + 1; d < static_cast<int>(levels.size()); ++d)
        out = out | levels[static_cast<std::size_t>(d)];
    return out;
}

DistanceClasses distance_classes(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw VertexOutOfRange("source vertex " + std::to_string(v) + " outside graph");
    DistanceClasses dc;
    dc.source = v;
    VertexSet frontier = VertexSet::of({v});
    VertexSet visited = frontier;
    dc.levels.push_back(frontier);
    while (!frontier.empty()) {
        std::uint64_t next = 0;
        frontier.for_each([&](int u) { next |= g.neighbors(u); });
        next &= ~visited.bits;
        if (next == 0) break;
        frontier = VertexSet{next};
        visited = visited | frontier;
        dc.levels.push_back(frontier);
    }
    dc.unreachable = g.vertices().minus(visited);
    return dc;
}

} // namespace ramsey
