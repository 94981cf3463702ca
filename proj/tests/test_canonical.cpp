#include <doctest.h>

#include "motifscope/canonical.hpp"
#include "motifscope/graph.hpp"
#include "oracles.hpp"

using namespace motifscope;

TEST_CASE("small canonical codes separate and identify") {
    Graph p4 = path_graph(4);
    Graph p4r = oracles::relabel(p4, 99);
    CHECK(canonical_code_small(p4) == canonical_code_small(p4r));
    CHECK(is_isomorphic(p4, p4r));

    // claw vs path: same order and size, different degree sequences
    CHECK(canonical_code_small(star_graph(3)) != canonical_code_small(p4));
    CHECK_FALSE(is_isomorphic(star_graph(3), p4));

    // C4 plus one diagonal is K4 minus one edge
    Graph c4diag = Graph::from_edges(
        4, std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    Graph k4minus = Graph::from_edges(
        4, std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(oracles::iso_by_permutation(c4diag, k4minus));
    CHECK(canonical_code_small(c4diag) == canonical_code_small(k4minus));
}

TEST_CASE("canonical codes are permutation invariant") {
    for (uint64_t trial = 0; trial < 100; ++trial) {
        uint32_t n = 2 + trial % 6;  // up to 7
        Graph g = oracles::random_graph(n, 0.4, 1000 + trial);
        Graph h = oracles::relabel(g, 2000 + trial);
        CHECK(canonical_code_small(g) == canonical_code_small(h));
        CHECK(canonical_code(g) == canonical_code(h));
    }
}

TEST_CASE("canonical codes agree with permutation-search isomorphism") {
    for (uint64_t trial = 0; trial < 60; ++trial) {
        Graph a = oracles::random_graph(5, 0.5, 3000 + trial);
        Graph b = oracles::random_graph(5, 0.5, 4000 + trial);
        CHECK((canonical_code_small(a) == canonical_code_small(b)) ==
              oracles::iso_by_permutation(a, b));
    }
}

TEST_CASE("large-graph canonical code handles symmetric graphs") {
    CHECK(canonical_code(complete_graph(12)) ==
          canonical_code(oracles::relabel(complete_graph(12), 5)));
    CHECK(canonical_code(complete_bipartite(6, 6)) ==
          canonical_code(oracles::relabel(complete_bipartite(6, 6), 5)));
    Graph c12 = cycle_graph(12);
    CHECK(canonical_code(c12) == canonical_code(oracles::relabel(c12, 17)));
    CHECK(canonical_code(c12) != canonical_code(path_graph(12)));
}

TEST_CASE("colored codes keep colors with vertices") {
    Graph p3 = path_graph(3);
    std::vector<uint8_t> center_black{0, 1, 0};
    std::vector<uint8_t> end_black{1, 0, 0};
    CHECK(canonical_code_small(p3, &center_black) != canonical_code_small(p3, &end_black));
    std::vector<uint8_t> other_end_black{0, 0, 1};
    CHECK(canonical_code_small(p3, &end_black) == canonical_code_small(p3, &other_end_black));
}

TEST_CASE("isomorphism on disjoint unions") {
    Graph a = disjoint_union(complete_graph(3), complete_graph(2));
    Graph b = disjoint_union(complete_graph(2), complete_graph(3));
    CHECK(is_isomorphic(a, b));
    Graph c = disjoint_union(path_graph(3), complete_graph(2));
    CHECK_FALSE(is_isomorphic(a, c));
}
