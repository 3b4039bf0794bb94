#include "ramsey/graph6.hpp"

#include <cctype>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

constexpr int kOffset = 63;

std::string_view strip(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

int header_value(char c) {
    const int v = static_cast<unsigned char>(c) - kOffset;
    if (v < 0 || v > 63) throw MalformedHeader("byte outside graph6 range");
    return v;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    text = strip(text);
    if (text.empty()) throw MalformedHeader("empty graph6 string");

    std::size_t pos = 0;
    long order = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw MalformedHeader("8-byte graph6 header not supported");
        if (text.size() < 4) throw MalformedHeader("truncated long-form header");
        order = (static_cast<long>(header_value(text[1])) << 12) |
                (static_cast<long>(header_value(text[2])) << 6) |
                static_cast<long>(header_value(text[3]));
        pos = 4;
    } else {
        order = header_value(text[0]);
        pos = 1;
    }
    if (order < 1 || order > Graph::max_order)
        throw OrderOutOfRange("graph6 order " + std::to_string(order) + " outside 1..64");

    const int n = static_cast<int>(order);
    const long nbits = static_cast<long>(n) * (n - 1) / 2;
    const long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size()) - static_cast<long>(pos) < nbytes)
        throw TruncatedBits("graph6 body shorter than " + std::to_string(nbytes) + " bytes");
    if (static_cast<long>(text.size()) - static_cast<long>(pos) > nbytes)
        throw TrailingGarbage("extra bytes after graph6 body");

    GraphBuilder b(n);
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int group = header_value(text[pos + static_cast<std::size_t>(bit / 6)]);
            if ((group >> (5 - bit % 6)) & 1) b.add_edge(i, j);
        }
    // padding bits must be zero
    if (nbits % 6 != 0) {
        const int last = header_value(text[pos + static_cast<std::size_t>(nbytes - 1)]);
        const int pad = static_cast<int>(6 - nbits % 6);
        if (last & ((1 << pad) - 1)) throw TrailingGarbage("nonzero padding bits");
    }
    return b.finish();
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kOffset + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(kOffset + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kOffset + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kOffset + (n & 63)));
    }
    int group = 0;
    int used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(kOffset + group));
                group = 0;
                used = 0;
            }
        }
    if (used) out.push_back(static_cast<char>(kOffset + (group << (6 - used))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long p = 0, m = 0;
    if (!(in >> p >> m)) throw MalformedHeader("edge list must start with \"p m\"");
    if (p < 1 || p > Graph::max_order)
        throw OrderOutOfRange("edge list order " + std::to_string(p) + " outside 1..64");
    if (m < 0) throw MalformedHeader("negative edge count");
    GraphBuilder b(static_cast<int>(p));
    for (long e = 0; e < m; ++e) {
        long u = 0, v = 0;
        if (!(in >> u >> v)) throw TruncatedBits("edge list ends after " + std::to_string(e) + " edges");
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    long extra;
    if (in >> extra) throw TrailingGarbage("tokens after the last edge");
    return b.finish();
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph_auto(std::string_view text) {
    const std::string_view body = strip(text);
    if (body.empty()) throw MalformedHeader("empty graph input");
    if (std::isdigit(static_cast<unsigned char>(body.front()))) return parse_edge_list(body);
    return parse_graph6(body);
}

} // namespace ramsey
