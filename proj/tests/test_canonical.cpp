#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ramsey/canonical.hpp"
#include "ramsey/errors.hpp"
#include "test_util.hpp"

using namespace ramsey;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    GraphBuilder b(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v))
                b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return b.finish();
}

} // namespace

TEST_CASE("canonical code identifies isomorphs") {
    // C5 is self-complementary
    CHECK(canonical_code(testutil::cycle(5)) == canonical_code(testutil::cycle(5).complement()));

    // two labelings of the path on three vertices
    const Graph p1 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    const Graph p2 = Graph::from_edges(3, {{2, 0}, {0, 1}});
    CHECK(canonical_code(p1) == canonical_code(p2));

    // every star labeling shares one code; the star differs from the path
    const Graph star = testutil::star(3);
    std::vector<int> perm{0, 1, 2, 3};
    const auto star_code = canonical_code(star);
    do {
        CHECK(canonical_code(permuted(star, perm)) == star_code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(star_code != canonical_code(testutil::path(4)));

    // same size, same degree sequence, different graphs
    CHECK(canonical_code(testutil::cycle(6)) !=
          canonical_code(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST_CASE("canonical form realizes the code") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph g = testutil::random_graph(rng, n, 0.5);
        const Graph cf = canonical_form(g);
        CHECK(canonical_code(cf) == canonical_code(g));
    }
}

TEST_CASE("canonical code invariance under random permutations") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph g = testutil::random_graph(rng, n, 0.45);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_code(g) == canonical_code(permuted(g, perm)));
    }
}

TEST_CASE("canonical code order cap") {
    CHECK_NOTHROW(canonical_code(testutil::cycle(10)));
    CHECK_THROWS_AS(canonical_code(testutil::cycle(11)), OrderTooLargeForCanonicalization);
}
