#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ramsey {

// Set of vertex indices in 0..63, one bit per vertex.
struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t b) : bits(b) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const { return (bits >> v) & 1u; }
    void add(int v) { bits |= std::uint64_t{1} << v; }
    void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    // index of the least member; undefined when empty
    int least() const { return std::countr_zero(bits); }

    VertexSet operator|(VertexSet o) const { return VertexSet{bits | o.bits}; }
    VertexSet operator&(VertexSet o) const { return VertexSet{bits & o.bits}; }
    VertexSet minus(VertexSet o) const { return VertexSet{bits & ~o.bits}; }
    bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

    template <class F>
    void for_each(F f) const {
        for (std::uint64_t m = bits; m != 0; m &= m - 1) f(std::countr_zero(m));
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // sorted "{a, b, c}" rendering used in reports
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ", ";
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

    friend bool operator==(VertexSet a, VertexSet b) = default;
};

// all vertices 0..order-1
inline VertexSet full_vertex_set(int order) {
    if (order >= 64) return VertexSet{~std::uint64_t{0}};
    return VertexSet{(std::uint64_t{1} << order) - 1};
}

} // namespace ramsey
