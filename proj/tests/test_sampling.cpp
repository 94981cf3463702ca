#include <doctest.h>

#include <sstream>

#include "motifscope/count.hpp"
#include "motifscope/sampling.hpp"
#include "oracles.hpp"

using namespace motifscope;

namespace {

ColoredPattern wedge_white_center() {
    return ColoredPattern(path_graph(3), {1, 0, 1});
}
ColoredPattern wedge_one_white_end() {
    return ColoredPattern(path_graph(3), {1, 1, 0});
}
ColoredPattern wedge_all_black() {
    return ColoredPattern(path_graph(3), {1, 1, 1});
}

}  // namespace

TEST_CASE("rng determinism and seed derivation") {
    Rng a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
    CHECK(derive_seed(1, 2, 3) != derive_seed(2, 2, 3));
}

TEST_CASE("subgraph sampling basics") {
    Graph g = cycle_graph(6);
    Rng rng(7);
    SubgraphSample full = subgraph_sample(g, 1.0, rng);
    CHECK(full.vertices.size() == 6);
    CHECK(full.induced == g);

    Rng r2(7);
    SubgraphSample again = subgraph_sample(g, 1.0, r2);
    CHECK(again.vertices == full.vertices);

    CHECK_THROWS_AS(subgraph_sample(g, 0.0, rng), std::invalid_argument);

    // tiny p empties the sample quickly
    Rng r3(1);
    bool saw_empty = false;
    for (int i = 0; i < 50 && !saw_empty; ++i)
        saw_empty = subgraph_sample(g, 1e-6, r3).vertices.empty();
    CHECK(saw_empty);
}

TEST_CASE("neighborhood sampling observes closed stars") {
    Graph star = star_graph(4);
    std::vector<uint32_t> root{0};
    BicoloredSample s = make_bicolored_sample(star, root);
    CHECK(s.num_observed() == 5);
    CHECK(s.num_black() == 1);
    CHECK(s.num_observed_edges() == 4);
    CHECK(s.degree(0) == 4);  // exact degree of the black root

    // every observed edge touches a black vertex; whites only appear next to blacks
    for (uint32_t v = 0; v < s.num_observed(); ++v)
        for (uint32_t w : s.adj[v]) CHECK((s.is_black(v) || s.is_black(w)));

    Graph k2 = complete_graph(2);
    // all four colorings: the edge is observed unless both endpoints are white
    uint32_t observed = 0;
    for (uint32_t mask = 0; mask < 4; ++mask) {
        std::vector<uint32_t> blacks;
        for (uint32_t v = 0; v < 2; ++v)
            if ((mask >> v) & 1u) blacks.push_back(v);
        observed += make_bicolored_sample(k2, blacks).num_observed_edges();
    }
    CHECK(observed == 3);  // p^2 + 2pq of the four equally likely colorings

    Rng rng(5);
    BicoloredSample all = neighborhood_sample(complete_graph(4), 1.0, rng);
    CHECK(all.num_black() == 4);
    CHECK(all.num_observed_edges() == 6);
}

TEST_CASE("black degrees are exact parent degrees at any ratio") {
    Graph g = oracles::random_graph(12, 0.3, 88);
    for (double p : {0.2, 0.5, 0.9}) {
        Rng rng(31);
        BicoloredSample s = neighborhood_sample(g, p, rng);
        for (uint32_t v = 0; v < s.num_observed(); ++v)
            if (s.is_black(v)) CHECK(s.degree(v) == g.degree(s.parent_ids[v]));
    }
}

TEST_CASE("isolated black vertices are reported") {
    Graph g = empty_graph(3);
    std::vector<uint32_t> blacks{1};
    BicoloredSample s = make_bicolored_sample(g, blacks);
    CHECK(s.num_observed() == 1);
    CHECK(s.is_black(0));
    CHECK(s.degree(0) == 0);
}

TEST_CASE("count_colored on worked examples") {
    // black-black edge on a fully black K2
    Graph k2 = complete_graph(2);
    std::vector<uint32_t> both{0, 1};
    BicoloredSample s = make_bicolored_sample(k2, both);
    CHECK(count_colored(ColoredPattern(k2, {1, 1}), s).to_u64() == 1);

    // star with only the center black: no wedge subset carries two blacks
    Graph star = star_graph(3);
    std::vector<uint32_t> root{0};
    BicoloredSample center_only = make_bicolored_sample(star, root);
    CHECK(count_colored(wedge_one_white_end(), center_only).to_u64() == 0);

    // fully black triangle: its induced colored graph is a triangle, not a wedge
    Graph k3 = complete_graph(3);
    std::vector<uint32_t> all{0, 1, 2};
    BicoloredSample tri = make_bicolored_sample(k3, all);
    CHECK(count_colored(wedge_all_black(), tri).to_u64() == 0);

    // two or more whites are undetermined
    CHECK_THROWS_AS(count_colored(ColoredPattern(path_graph(3), {0, 1, 0}), tri),
                    std::invalid_argument);
}

TEST_CASE("count_observed_motif on worked examples") {
    Graph k3 = complete_graph(3);
    std::vector<uint32_t> all{0, 1, 2};
    ObservedMotifCounts full = count_observed_motif(Motif::triangle(),
                                                    make_bicolored_sample(k3, all));
    CHECK(full.full_black.to_u64() == 1);
    CHECK(full.one_white.to_u64() == 0);

    std::vector<uint32_t> two{0, 1};
    ObservedMotifCounts partial = count_observed_motif(Motif::triangle(),
                                                       make_bicolored_sample(k3, two));
    CHECK(partial.full_black.to_u64() == 0);
    CHECK(partial.one_white.to_u64() == 1);

    Graph diamond = Motif::diamond().graph();
    // the two degree-3 vertices plus one degree-2 vertex black
    std::vector<uint32_t> blacks;
    for (uint32_t v = 0; v < 4; ++v)
        if (diamond.degree(v) == 3) blacks.push_back(v);
    for (uint32_t v = 0; v < 4 && blacks.size() < 3; ++v)
        if (diamond.degree(v) == 2) blacks.push_back(v);
    ObservedMotifCounts dc = count_observed_motif(Motif::diamond(),
                                                  make_bicolored_sample(diamond, blacks));
    CHECK(dc.full_black.to_u64() == 0);
    CHECK(dc.one_white.to_u64() == 1);
}

TEST_CASE("observed counts never exceed the parent count") {
    const Motif motifs[] = {Motif::edge(), Motif::wedge(), Motif::triangle(), Motif::cycle(4)};
    for (uint64_t trial = 0; trial < 30; ++trial) {
        Graph g = oracles::random_graph(9, 0.35, 600 + trial);
        Rng rng(trial);
        BicoloredSample s = neighborhood_sample(g, 0.4, rng);
        for (const Motif& h : motifs) {
            ObservedMotifCounts c = count_observed_motif(h, s);
            CHECK(c.full_black.to_u64() + c.one_white.to_u64() <=
                  count_induced(h, g).to_u64());
        }
    }
}

TEST_CASE("wedge pattern counts agree with the colored counter") {
    for (uint64_t trial = 0; trial < 30; ++trial) {
        Graph g = oracles::random_graph(10, 0.3, 1500 + trial);
        Rng rng(trial * 3 + 1);
        BicoloredSample s = neighborhood_sample(g, 0.5, rng);
        WedgePatternCounts w = wedge_pattern_counts(s);
        CHECK(w.white_center == count_colored(wedge_white_center(), s).to_u64());
        CHECK(w.one_white_end == count_colored(wedge_one_white_end(), s).to_u64());
        CHECK(w.all_black == count_colored(wedge_all_black(), s).to_u64());
    }
}

TEST_CASE("diagonal-black four-cycles") {
    Graph c4 = cycle_graph(4);
    std::vector<uint32_t> all{0, 1, 2, 3};
    CHECK(diagonal_black_c4_count(make_bicolored_sample(c4, all)) == 2);

    std::vector<uint32_t> diag{0, 2};
    CHECK(diagonal_black_c4_count(make_bicolored_sample(c4, diag)) == 1);

    std::vector<uint32_t> adjacent{0, 1};
    CHECK(diagonal_black_c4_count(make_bicolored_sample(c4, adjacent)) == 0);

    std::vector<uint32_t> none;
    CHECK(diagonal_black_c4_count(make_bicolored_sample(c4, none)) == 0);
}

TEST_CASE("sample serialization round trip") {
    Graph g = oracles::random_graph(9, 0.4, 77);
    Rng rng(123);
    BicoloredSample s = neighborhood_sample(g, 0.6, rng);
    std::ostringstream out;
    dump_sample(out, s, 0.6, 123);
    std::istringstream in(out.str());
    double p = 0;
    uint64_t seed = 0;
    BicoloredSample back = parse_sample(in, &p, &seed);
    CHECK(p == 0.6);
    CHECK(seed == 123);
    CHECK(back.parent_n == s.parent_n);
    CHECK(back.parent_ids == s.parent_ids);
    CHECK(back.black == s.black);
    CHECK(back.adj == s.adj);
}
