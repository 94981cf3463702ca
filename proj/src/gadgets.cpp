#include "motifscope/gadgets.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "motifscope/canonical.hpp"
#include "motifscope/rational.hpp"

namespace motifscope {

namespace {

Graph union_of(std::initializer_list<std::pair<uint32_t, Graph>> pieces) {
    Graph out;
    for (const auto& [copies, g] : pieces) out = disjoint_union(out, disjoint_union(copies, g));
    return out;
}

Graph paw_graph() {
    return Graph::from_edges(
        4, std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 2}, {2, 0}, {2, 3}});
}

Graph diamond_graph() {
    return Graph::from_edges(
        4, std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

Graph triangle_with_tail() {  // degree sequence (3,2,2,2,1)
    return Graph::from_edges(
        5, std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
}

Graph c4_with_pendant() {  // degree sequence (3,2,2,2,1)
    return Graph::from_edges(
        5, std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}});
}

}  // namespace

std::vector<GadgetPair> builtin_pairs() {
    std::vector<GadgetPair> pairs;
    pairs.push_back({"adhocHH1", paw_graph(), cycle_graph(4), SamplingModel::Subgraph, 2,
                     Motif::triangle(), 1,
                     "equal vertex and edge counts, triangle counts differ"});
    pairs.push_back({"adhocHH2", triangle_with_tail(), c4_with_pendant(),
                     SamplingModel::Neighborhood, 1, Motif::triangle(), 1,
                     "matching degree sequences (3,2,2,2,1), triangle counts differ"});
    pairs.push_back({"HH-nhbd4",
                     union_of({{1, complete_graph(4)},
                               {3, cycle_graph(4)},
                               {12, paw_graph()},
                               {12, path_graph(3)}}),
                     union_of({{6, diamond_graph()},
                               {12, path_graph(4)},
                               {4, complete_graph(3)},
                               {4, star_graph(3)}}),
                     SamplingModel::Neighborhood, 2, Motif::clique(4), 1,
                     "neighborhood patterns with at most two black vertices match"});
    pairs.push_back({"HH-matching-K4",
                     union_of({{1, complete_graph(4)}, {6, complete_graph(2)}}),
                     union_of({{4, complete_graph(3)}, {4, empty_graph(1)}}),
                     SamplingModel::Subgraph, 3, Motif::clique(4), 1,
                     "matching subgraph counts of order three"});
    return pairs;
}

GadgetPair matching_pair(const Motif& h) {
    uint32_t k = h.order();
    if (k > 5) throw std::invalid_argument("matching_pair supports motifs up to 5 vertices");

    // Connected induced subgraph classes of h, ordered by edge count.
    struct Entry {
        uint64_t code;
        Motif rep;
    };
    std::vector<Entry> classes;
    for (uint32_t size = 1; size <= k; ++size) {
        std::map<uint64_t, Motif> found;
        for_each_connected_subset(h.graph(), size, [&](const uint32_t*, const uint8_t* masks) {
            uint64_t code = canonical_code_small_masks(size, masks);
            if (found.count(code)) return;
            std::vector<std::pair<uint32_t, uint32_t>> edges;
            for (uint32_t i = 0; i < size; ++i)
                for (uint32_t j = i + 1; j < size; ++j)
                    if ((masks[i] >> j) & 1u) edges.emplace_back(i, j);
            found.emplace(code, Motif(Graph::from_edges(size, edges)));
        });
        for (auto& [code, rep] : found) classes.push_back({code, rep});
    }
    std::sort(classes.begin(), classes.end(), [](const Entry& a, const Entry& b) {
        if (a.rep.num_edges() != b.rep.num_edges()) return a.rep.num_edges() < b.rep.num_edges();
        return a.code < b.code;
    });

    size_t m = classes.size();
    std::vector<std::vector<Rational>> B(m, std::vector<Rational>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            B[i][j] = Rational(
                BigInt(count_induced(classes[i].rep, classes[j].rep.graph()).to_u64()));
    std::vector<Rational> rhs(m);
    rhs[m - 1] = Rational(1);

    std::vector<Rational> x = solve_linear(B, rhs);
    if (!(x[m - 1] == Rational(1)))
        throw std::logic_error("matching_pair: solve did not pin the target coefficient");
    BigInt alpha = common_denominator(x);

    Graph big, big_prime;
    for (size_t i = 0; i < m; ++i) {
        BigInt w = x[i].num() * (alpha / x[i].den());
        long long wi = w.convert_to<long long>();
        if (wi > 0) big = disjoint_union(big, disjoint_union(static_cast<uint32_t>(wi),
                                                             classes[i].rep.graph()));
        if (wi < 0)
            big_prime = disjoint_union(
                big_prime, disjoint_union(static_cast<uint32_t>(-wi), classes[i].rep.graph()));
    }

    GadgetPair pair{"matching-" + std::to_string(k) + "v" + std::to_string(h.num_edges()) + "e",
                    big,
                    big_prime,
                    SamplingModel::Subgraph,
                    k - 1,
                    h,
                    alpha.convert_to<long long>(),
                    "linear-algebra matching construction"};
    return pair;
}

MomentSequences moment_sequences(uint32_t k) {
    if (k < 1 || k > 8) throw std::invalid_argument("moment_sequences supports k in 1..8");
    BigInt lcm = lcm_range(1, k + 1);

    auto solve_with = [&](uint32_t pinned_moment, const BigInt& pinned_value) {
        size_t n = k + 1;
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        std::vector<Rational> rhs(n);
        for (uint32_t i = 0; i <= k; ++i) {
            for (uint32_t x = 1; x <= k + 1; ++x) {
                BigInt pw = 1;
                for (uint32_t e = 0; e < i; ++e) pw *= x;
                a[i][x - 1] = Rational(pw);
            }
            rhs[i] = i == pinned_moment ? Rational(pinned_value) : Rational(0);
        }
        std::vector<Rational> sol = solve_linear(a, rhs);
        std::vector<long long> out;
        for (const auto& r : sol) {
            if (!r.is_integer())
                throw std::logic_error("moment sequence solve produced a non-integer");
            out.push_back(r.num().convert_to<long long>());
        }
        return out;
    };

    MomentSequences ms;
    ms.lcm = lcm.convert_to<long long>();
    ms.alpha = solve_with(1, lcm);
    ms.beta = solve_with(2, lcm * lcm);
    return ms;
}

GadgetPair star_family(uint32_t k, uint32_t ell, StarFamilyMode mode) {
    if (ell < 1) throw std::invalid_argument("star_family needs ell >= 1");
    MomentSequences ms = moment_sequences(k);
    const auto& w = mode == StarFamilyMode::FirstMoment ? ms.alpha : ms.beta;

    Graph h, h_prime;
    for (uint32_t x = 1; x <= k + 1; ++x) {
        long long wx = w[x - 1];
        Graph star = star_graph(ell * x);
        if (wx > 0) h = disjoint_union(h, disjoint_union(static_cast<uint32_t>(wx), star));
        if (wx < 0)
            h_prime = disjoint_union(h_prime, disjoint_union(static_cast<uint32_t>(-wx), star));
    }

    GadgetPair pair{"", h, h_prime, SamplingModel::Subgraph, 0, Motif::edge(), 0, ""};
    if (mode == StarFamilyMode::FirstMoment) {
        // Leaf counts differ by ell*lcm; pad the smaller side with single
        // edges to equalize vertex counts. Edge gap becomes ell*lcm/2.
        long long vertex_gap = static_cast<long long>(h.num_vertices()) -
                               static_cast<long long>(h_prime.num_vertices());
        if (vertex_gap % 2 != 0) throw std::logic_error("star_family: odd vertex gap");
        if (vertex_gap > 0)
            h_prime = disjoint_union(h_prime,
                                     disjoint_union(static_cast<uint32_t>(vertex_gap / 2),
                                                    complete_graph(2)));
        else if (vertex_gap < 0)
            h = disjoint_union(
                h, disjoint_union(static_cast<uint32_t>(-vertex_gap / 2), complete_graph(2)));
        pair.h = h;
        pair.h_prime = h_prime;
        pair.name = "star-first-moment-k" + std::to_string(k) + "-l" + std::to_string(ell);
        pair.matched_order = 1;
        pair.target = Motif::edge();
        pair.gap = static_cast<long long>(pair.h.num_edges()) -
                   static_cast<long long>(pair.h_prime.num_edges());
        pair.notes = "star sizes match degree moments {0,2..k}; edge counts differ";
    } else {
        pair.name = "star-second-moment-k" + std::to_string(k) + "-l" + std::to_string(ell);
        pair.matched_order = 2;
        pair.target = Motif::wedge();
        pair.gap = static_cast<long long>(count_wedges(h).to_u64()) -
                   static_cast<long long>(count_wedges(h_prime).to_u64());
        pair.notes = "star sizes match degree moments {0,1,3..k}; wedge counts differ";
    }
    return pair;
}

bool degree_identity_check(const Graph& g, uint32_t r, uint32_t K) {
    if (r < 2) throw std::invalid_argument("degree_identity_check needs r >= 2");
    if (K < max_degree(g))
        throw std::invalid_argument("truncation K must reach the maximum degree");
    BigInt lhs = 0;
    for (uint32_t v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == r) ++lhs;

    BigInt rhs = 0;
    for (uint32_t j = r; j <= K; ++j) {
        BigInt stars = 0;
        for (uint32_t v = 0; v < g.num_vertices(); ++v) {
            uint32_t d = g.degree(v);
            if (d < j) continue;
            BigInt c = 1;
            for (uint32_t i = 1; i <= j; ++i) c = c * (d - i + 1) / i;
            stars += c;
        }
        BigInt choose = 1;
        for (uint32_t i = 1; i <= r; ++i) choose = choose * (j - i + 1) / i;
        BigInt term = choose * stars;
        if ((j - r) % 2 == 0)
            rhs += term;
        else
            rhs -= term;
    }
    return lhs == rhs;
}

std::map<uint64_t, Count128> induced_census(const Graph& g, uint32_t max_order) {
    std::map<uint64_t, Count128> census;
    for (uint32_t size = 1; size <= max_order; ++size)
        for_each_connected_subset(g, size, [&](const uint32_t*, const uint8_t* masks) {
            census[canonical_code_small_masks(size, masks)] += Count128(1);
        });
    return census;
}

std::map<std::string, uint64_t> neighborhood_pattern_census(const Graph& g, uint32_t max_black) {
    std::map<std::string, uint64_t> census;
    for (const auto& cc : g.connected_components()) {
        Graph comp = g.induced(cc);
        uint32_t nc = comp.num_vertices();
        if (nc > 24) throw std::overflow_error("component too large for pattern census");
        std::vector<uint32_t> blacks;
        // every nonempty black set of size <= max_black within the component
        std::vector<uint32_t> idx;
        std::function<void(uint32_t)> rec = [&](uint32_t start) {
            if (!blacks.empty()) {
                std::vector<char> keep(nc, 0);
                for (uint32_t b : blacks) {
                    keep[b] = 1;
                    for (uint32_t w : comp.neighbors(b)) keep[w] = 1;
                }
                std::vector<uint32_t> closure;
                for (uint32_t v = 0; v < nc; ++v)
                    if (keep[v]) closure.push_back(v);
                std::vector<char> black_flag(nc, 0);
                for (uint32_t b : blacks) black_flag[b] = 1;
                std::vector<std::pair<uint32_t, uint32_t>> edges;
                std::vector<uint32_t> local(nc, ~0u);
                for (uint32_t i = 0; i < closure.size(); ++i) local[closure[i]] = i;
                std::vector<uint8_t> colors(closure.size());
                for (uint32_t i = 0; i < closure.size(); ++i) colors[i] = black_flag[closure[i]];
                for (uint32_t b : blacks)
                    for (uint32_t w : comp.neighbors(b))
                        if (!(black_flag[w] && w < b)) edges.emplace_back(local[b], local[w]);
                Graph pattern =
                    Graph::from_edges(static_cast<uint32_t>(closure.size()), edges);
                if (pattern.is_connected())
                    ++census[canonical_code(pattern, &colors)];
            }
            if (blacks.size() == max_black) return;
            for (uint32_t v = start; v < nc; ++v) {
                blacks.push_back(v);
                rec(v + 1);
                blacks.pop_back();
            }
        };
        rec(0);
    }
    return census;
}

bool verify_matching(const GadgetPair& pair, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    long long gap = static_cast<long long>(count_induced(pair.target, pair.h).to_u64()) -
                    static_cast<long long>(count_induced(pair.target, pair.h_prime).to_u64());
    if (gap != pair.gap || gap == 0) return fail("target gap mismatch");
    if (pair.model == SamplingModel::Subgraph) {
        if (induced_census(pair.h, pair.matched_order) !=
            induced_census(pair.h_prime, pair.matched_order))
            return fail("induced pattern counts differ below the matched order");
        if (pair.h.num_vertices() != pair.h_prime.num_vertices())
            return fail("vertex counts differ");
    } else {
        if (pair.h.num_vertices() != pair.h_prime.num_vertices())
            return fail("vertex counts differ");
        if (neighborhood_pattern_census(pair.h, pair.matched_order) !=
            neighborhood_pattern_census(pair.h_prime, pair.matched_order))
            return fail("neighborhood pattern counts differ below the matched order");
    }
    return true;
}

void export_gadgets(const std::string& directory) {
    namespace fs = std::filesystem;
    fs::create_directories(directory);
    std::ofstream manifest(fs::path(directory) / "manifest.tsv");
    manifest << "name\tmodel\tmatched_order\ttarget_order\ttarget_edges\tgap\tfile_h\tfile_h_"
                "prime\n";
    for (const auto& pair : builtin_pairs()) {
        std::string fa = pair.name + "_H.edges";
        std::string fb = pair.name + "_Hprime.edges";
        std::ofstream a(fs::path(directory) / fa);
        write_edge_list(a, pair.h);
        std::ofstream b(fs::path(directory) / fb);
        write_edge_list(b, pair.h_prime);
        manifest << pair.name << "\t"
                 << (pair.model == SamplingModel::Subgraph ? "subgraph" : "neighborhood") << "\t"
                 << pair.matched_order << "\t" << pair.target.order() << "\t"
                 << pair.target.num_edges() << "\t" << pair.gap << "\t" << fa << "\t" << fb
                 << "\n";
    }
}

}  // namespace motifscope
