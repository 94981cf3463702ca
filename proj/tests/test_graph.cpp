#include <doctest.h>

#include <sstream>

#include "motifscope/graph.hpp"

using namespace motifscope;

TEST_CASE("edge list loading") {
    SUBCASE("plain path") {
        std::istringstream in("0 1\n1 2\n");
        Graph g = load_edge_list(in);
        CHECK(g.num_vertices() == 3);
        CHECK(g.num_edges() == 2);
    }
    SUBCASE("comments, duplicates and self-loops are dropped with counts") {
        std::istringstream in("# c\n0 1\n0 1\n2 2\n");
        EdgeListStats stats;
        Graph g = load_edge_list(in, &stats);
        CHECK(g.num_edges() == 1);
        CHECK(stats.duplicate_edges == 1);
        CHECK(stats.self_loops == 1);
        CHECK(stats.comment_lines == 1);
    }
    SUBCASE("labels are re-indexed densely") {
        std::istringstream in("700 9\n9 120\n");
        Graph g = load_edge_list(in);
        CHECK(g.num_vertices() == 3);
        CHECK(g.num_edges() == 2);
    }
    SUBCASE("malformed line reports its number") {
        std::istringstream in("0 1\nbogus\n");
        CHECK_THROWS_WITH_AS(load_edge_list(in), doctest::Contains("line 2"),
                             std::invalid_argument);
    }
    SUBCASE("ego ingestion closes the network") {
        std::istringstream in("0 1\n1 2\n");
        Graph g = load_edge_list(in, nullptr, true);
        CHECK(g.num_vertices() == 4);
        CHECK(g.num_edges() == 2 + 3);
        CHECK(max_degree(g) == 3);  // the ego vertex
    }
    SUBCASE("round-trips through write_edge_list") {
        Graph g = cycle_graph(5);
        std::ostringstream out;
        write_edge_list(out, g);
        std::istringstream in(out.str());
        CHECK(load_edge_list(in) == g);
    }
}

TEST_CASE("erdos-renyi generation") {
    CHECK(gen_erdos_renyi(5, 0.0, 1).num_edges() == 0);
    CHECK(gen_erdos_renyi(5, 1.0, 1).num_edges() == 10);
    CHECK(gen_erdos_renyi(1000, 0.005, 42).num_edges() ==
          gen_erdos_renyi(1000, 0.005, 42).num_edges());
    CHECK(gen_erdos_renyi(200, 0.1, 1).edge_list() != gen_erdos_renyi(200, 0.1, 2).edge_list());
    // Binomial(499500, 0.005) concentrates tightly around 2497.5.
    uint64_t e = gen_erdos_renyi(1000, 0.005, 7).num_edges();
    CHECK(e >= 2200);
    CHECK(e <= 2800);
}

TEST_CASE("degree and basic ops") {
    CHECK(max_degree(complete_graph(4)) == 3);
    CHECK(max_degree(star_graph(5)) == 5);
    CHECK(max_degree(empty_graph(3)) == 0);

    Graph u = disjoint_union(complete_graph(3), complete_graph(2));
    CHECK(u.num_vertices() == 5);
    CHECK(u.num_edges() == 4);
    CHECK(disjoint_union(3, empty_graph(1)).num_vertices() == 3);

    // the K4-with-diagonals drawing plus six disjoint edges
    Graph h = disjoint_union(complete_graph(4), disjoint_union(6, complete_graph(2)));
    CHECK(h.num_vertices() == 16);
    CHECK(h.num_edges() == 12);
}

TEST_CASE("join") {
    Graph k23 = join(empty_graph(2), empty_graph(3));
    CHECK(k23.num_edges() == 6);
    CHECK(k23 == complete_bipartite(2, 3));
    CHECK(join(empty_graph(1), empty_graph(1)) == complete_graph(2));
    CHECK(join(complete_graph(2), empty_graph(1)).num_edges() == 3);

    for (uint32_t na = 0; na <= 3; ++na)
        for (uint32_t nb = 1; nb <= 3; ++nb) {
            Graph a = path_graph(na), b = cycle_graph(nb + 2);
            Graph j = join(a, b);
            CHECK(j.num_edges() == a.num_edges() + b.num_edges() +
                                       uint64_t(a.num_vertices()) * b.num_vertices());
            CHECK(disjoint_union(a, b).num_vertices() == a.num_vertices() + b.num_vertices());
        }
}

TEST_CASE("blow up") {
    std::vector<uint32_t> sizes{2, 3};
    CHECK(blow_up(complete_graph(2), sizes, BlowUpMode::IndependentSet) ==
          complete_bipartite(2, 3));

    std::vector<uint32_t> twos{2, 2, 2};
    Graph tri = blow_up(complete_graph(3), twos, BlowUpMode::IndependentSet);
    CHECK(tri.num_vertices() == 6);
    CHECK(tri.num_edges() == 12);

    std::vector<uint32_t> ones{1, 1, 1, 1};
    Graph g = cycle_graph(4);
    CHECK(blow_up(g, ones, BlowUpMode::IndependentSet) == g);

    Graph cl = blow_up(complete_graph(2), sizes, BlowUpMode::Clique);
    CHECK(cl == complete_graph(5));
}

TEST_CASE("forest and connectivity") {
    CHECK(path_graph(6).is_forest());
    CHECK(disjoint_union(path_graph(3), star_graph(4)).is_forest());
    CHECK_FALSE(cycle_graph(4).is_forest());
    CHECK(cycle_graph(4).is_connected());
    CHECK_FALSE(disjoint_union(path_graph(2), path_graph(2)).is_connected());
}
