#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ramsey/vertex_set.hpp"

namespace ramsey {

// Undirected simple graph on at most 64 vertices, one adjacency word per
// vertex.  Always interpreted as the RED subgraph of a 2-coloring of the
// complete graph; blue is its complement.  Immutable after construction.
class Graph {
public:
    static constexpr int max_order = 64;

    explicit Graph(int order); // edgeless graph; throws OrderOutOfRange

    static Graph from_edges(int order, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return order_; }
    std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet neighbor_set(int v) const { return VertexSet{neighbors(v)}; }
    bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
    int degree(int v) const;
    int max_degree() const;
    int min_degree() const;
    int edge_count() const;
    VertexSet vertices() const { return full_vertex_set(order_); }

    Graph complement() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void add_edge(int u, int v); // validates; used by factories only

    int order_;
    std::array<std::uint64_t, max_order> adj_{};

    friend Graph circulant(const struct CirculantSpec&);
    friend struct GraphBuilder;
};

// Mutable helper for code that assembles a graph edge by edge (parsers,
// search leaves).  finish() hands out the immutable value.
struct GraphBuilder {
    explicit GraphBuilder(int order) : g(order) {}
    void add_edge(int u, int v) { g.add_edge(u, v); }
    Graph finish() { return g; }

private:
    Graph g;
};

// Order p and connection set S subset of {1..floor(p/2)}: vertex i is adjacent
// to j iff (i-j) mod p lands in S or p-S.
struct CirculantSpec {
    int p = 0;
    std::vector<int> connections;

    std::string to_string() const; // "C25<1,3,8>"
};

Graph circulant(const CirculantSpec& spec); // throws ConnectionOutOfRange

// Induced subgraph on the vertices of vs, relabeled 0..|vs|-1 in increasing
// original order.  mapping[new_index] = original vertex.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> mapping;
};
InducedSubgraph induced(const Graph& g, VertexSet vs);

// Breadth-first distance classes from one source vertex.  levels[d] holds the
// vertices at distance exactly d (levels[0] = {source}); vertices that the
// source cannot reach sit in `unreachable` and count as distance infinity,
// so they belong to every D_{>i}.
struct DistanceClasses {
    int source = 0;
    std::vector<VertexSet> levels;
    VertexSet unreachable;

    // D_i; empty for i beyond the last level
    VertexSet at(int distance) const;
    // D_{>i}: strictly farther than `distance`, including unreachable
    VertexSet beyond(int distance) const;
};

DistanceClasses distance_classes(const Graph& g, int v); // throws VertexOutOfRange

} // namespace ramsey
