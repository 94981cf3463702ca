#include <doctest.h>

#include "motifscope/count.hpp"
#include "motifscope/graph.hpp"
#include "motifscope/motif.hpp"
#include "oracles.hpp"

using namespace motifscope;

namespace {

Graph petersen() {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);
        edges.emplace_back(v, v + 5);
        edges.emplace_back(v + 5, (v + 2) % 5 + 5);
    }
    return Graph::from_edges(10, edges);
}

}  // namespace

TEST_CASE("induced counts on the worked diamond") {
    Graph diamond = Motif::diamond().graph();
    CHECK(count_induced(Motif::wedge(), diamond).to_u64() == 2);
    CHECK(count_subgraph(Motif::wedge(), diamond).to_u64() == 8);
}

TEST_CASE("induced counts, pinned") {
    CHECK(count_induced(Motif::triangle(), complete_graph(4)).to_u64() == 4);
    CHECK(count_induced(Motif::cycle(4), petersen()).to_u64() == 0);  // girth five
    CHECK(count_subgraph(Motif::edge(), petersen()).to_u64() == 15);
    CHECK(count_subgraph(Motif::wedge(), complete_graph(4)).to_u64() == 12);
    CHECK(count_wedges(star_graph(3)).to_u64() == 3);
    CHECK(count_triangles(complete_graph(4)).to_u64() == 4);

    std::vector<uint32_t> twos{2, 2, 2, 2};
    Graph blown = blow_up(complete_graph(4), twos, BlowUpMode::IndependentSet);
    CHECK(count_clique(4, blown).to_u64() == 16);
}

TEST_CASE("specialized counters match the generic enumerator") {
    const Motif motifs[] = {Motif::edge(), Motif::wedge(), Motif::triangle(), Motif::path(4),
                            Motif::cycle(4), Motif::clique(4), Motif::claw(), Motif::diamond(),
                            Motif::paw()};
    for (uint64_t trial = 0; trial < 50; ++trial) {
        Graph g = oracles::random_graph(4 + trial % 7, 0.45, 500 + trial);
        for (const Motif& h : motifs)
            CHECK(count_induced(h, g).to_u64() == oracles::brute_induced(h.graph(), g));
    }
}

TEST_CASE("subgraph counts match the embedding oracle") {
    const Motif motifs[] = {Motif::edge(), Motif::wedge(), Motif::triangle(), Motif::path(4),
                            Motif::cycle(4), Motif::claw()};
    for (uint64_t trial = 0; trial < 25; ++trial) {
        Graph g = oracles::random_graph(5 + trial % 5, 0.4, 900 + trial);
        for (const Motif& h : motifs)
            CHECK(count_subgraph(h, g).to_u64() == oracles::brute_subgraph(h.graph(), g));
    }
}

TEST_CASE("noninduced expansion coefficients") {
    SUBCASE("wedge") {
        auto terms = noninduced_expansion(Motif::wedge());
        REQUIRE(terms.size() == 2);
        CHECK(terms[0].supergraph == Motif::wedge());
        CHECK(terms[0].coefficient == 1);
        CHECK(terms[1].supergraph == Motif::triangle());
        CHECK(terms[1].coefficient == 3);
    }
    SUBCASE("triangle is already complete") {
        auto terms = noninduced_expansion(Motif::triangle());
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].coefficient == 1);
    }
    SUBCASE("four-cycle") {
        // supergraphs of C4: itself, the diamond (one 4-cycle as a subgraph),
        // and K4 (three 4-cycles)
        auto terms = noninduced_expansion(Motif::cycle(4));
        REQUIRE(terms.size() == 3);
        CHECK(terms[0].supergraph == Motif::cycle(4));
        CHECK(terms[0].coefficient == 1);
        CHECK(terms[1].supergraph == Motif::diamond());
        CHECK(terms[1].coefficient == oracles::brute_subgraph(cycle_graph(4),
                                                              Motif::diamond().graph()));
        CHECK(terms[1].coefficient == 1);
        CHECK(terms[2].supergraph == Motif::clique(4));
        CHECK(terms[2].coefficient == 3);
    }
}

TEST_CASE("expansion identity on random graphs") {
    const Motif motifs[] = {Motif::edge(), Motif::wedge(), Motif::triangle(), Motif::path(4),
                            Motif::cycle(4), Motif::claw()};
    for (uint64_t trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(5 + trial % 5, 0.4, 1300 + trial);
        for (const Motif& h : motifs) {
            Count128 direct = count_subgraph(h, g);
            Count128 via_expansion;
            for (const auto& term : noninduced_expansion(h))
                via_expansion += count_induced(term.supergraph, g) * term.coefficient;
            CHECK(direct == via_expansion);
        }
    }
}

TEST_CASE("wedge and degree identity") {
    for (uint64_t trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(6 + trial % 5, 0.5, 1700 + trial);
        CHECK(count_induced(Motif::edge(), g).to_u64() == g.num_edges());
        uint64_t lhs = count_wedges(g).to_u64() + 3 * count_triangles(g).to_u64();
        uint64_t rhs = 0;
        for (uint32_t v = 0; v < g.num_vertices(); ++v)
            rhs += uint64_t(g.degree(v)) * (g.degree(v) - 1) / 2;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("adding an edge never decreases subgraph counts") {
    const Motif motifs[] = {Motif::wedge(), Motif::triangle(), Motif::path(4), Motif::claw()};
    for (uint64_t trial = 0; trial < 15; ++trial) {
        Graph g = oracles::random_graph(7, 0.35, 2100 + trial);
        // add the first absent edge
        Graph bigger = g;
        for (uint32_t u = 0; u < 7 && bigger == g; ++u)
            for (uint32_t v = u + 1; v < 7; ++v)
                if (!g.has_edge(u, v)) {
                    auto edges = g.edge_list();
                    edges.emplace_back(u, v);
                    bigger = Graph::from_edges(7, edges);
                    break;
                }
        for (const Motif& h : motifs)
            CHECK(count_subgraph(h, bigger).to_u64() >= count_subgraph(h, g).to_u64());
    }
}

TEST_CASE("count report method tags") {
    CHECK(count_induced_report(Motif::triangle(), complete_graph(5)).method ==
          CountMethod::Specialized);
    CHECK(count_induced_report(Motif::paw(), complete_graph(5)).method ==
          CountMethod::Enumerated);
}

TEST_CASE("count128 arithmetic") {
    Count128 big(~0ull);
    CHECK_NOTHROW(big * 2);
    CHECK((Count128(10) + Count128(5)).to_u64() == 15);
    CHECK(Count128(1234567).to_string() == "1234567");
    Count128 huge = Count128(~0ull) * ~0ull;
    CHECK_THROWS_AS(huge * ~0ull, std::overflow_error);
    CHECK_THROWS_AS(huge.to_u64(), std::overflow_error);
}
