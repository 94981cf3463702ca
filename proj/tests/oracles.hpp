// Brute-force reference implementations for tests. These deliberately avoid
// the library's counting paths: subsets are enumerated directly and
// isomorphism goes through permutation search on the raw adjacency.
#ifndef MOTIFSCOPE_TESTS_ORACLES_HPP
#define MOTIFSCOPE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "motifscope/graph.hpp"
#include "motifscope/sampling.hpp"

namespace oracles {

inline bool iso_by_permutation(const motifscope::Graph& a, const motifscope::Graph& b) {
    uint32_t n = a.num_vertices();
    if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    std::vector<uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (uint32_t u = 0; u < n && ok; ++u)
            for (uint32_t v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// s(h, g) by enumerating every k-subset.
inline uint64_t brute_induced(const motifscope::Graph& h, const motifscope::Graph& g) {
    uint32_t n = g.num_vertices(), k = h.num_vertices();
    if (k > n) return 0;
    std::vector<uint32_t> pick(k);
    uint64_t count = 0;
    std::vector<bool> sel(n, false);
    std::fill(sel.end() - k, sel.end(), true);
    do {
        uint32_t idx = 0;
        for (uint32_t v = 0; v < n; ++v)
            if (sel[v]) pick[idx++] = v;
        if (iso_by_permutation(h, g.induced(pick))) ++count;
    } while (std::next_permutation(sel.begin(), sel.end()));
    return count;
}

// n(h, g) by enumerating injective vertex maps and dividing by aut(h).
inline uint64_t brute_subgraph(const motifscope::Graph& h, const motifscope::Graph& g) {
    uint32_t k = h.num_vertices(), n = g.num_vertices();
    if (k > n) return 0;
    std::vector<uint32_t> image;
    std::vector<bool> used(n, false);
    uint64_t embeddings = 0;
    auto rec = [&](auto&& self, uint32_t depth) -> void {
        if (depth == k) {
            ++embeddings;
            return;
        }
        for (uint32_t t = 0; t < n; ++t) {
            if (used[t]) continue;
            bool ok = true;
            for (uint32_t j = 0; j < depth && ok; ++j)
                if (h.has_edge(depth, j)) ok = g.has_edge(t, image[j]);
            if (!ok) continue;
            used[t] = true;
            image.push_back(t);
            self(self, depth + 1);
            image.pop_back();
            used[t] = false;
        }
    };
    rec(rec, 0);

    uint64_t aut = 0;
    std::vector<uint32_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (uint32_t u = 0; u < k && ok; ++u)
            for (uint32_t v = u + 1; v < k && ok; ++v)
                if (h.has_edge(u, v) && !h.has_edge(perm[u], perm[v])) ok = false;
        if (ok) ++aut;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return embeddings / aut;
}

inline motifscope::Graph random_graph(uint32_t n, double density, uint64_t seed) {
    motifscope::Rng rng(seed);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            if (rng.bernoulli(density)) edges.emplace_back(u, v);
    return motifscope::Graph::from_edges(n, edges);
}

inline motifscope::Graph relabel(const motifscope::Graph& g, uint64_t seed) {
    uint32_t n = g.num_vertices();
    std::vector<uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    motifscope::Rng rng(seed);
    for (uint32_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.next_u64() % i]);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (auto [u, v] : g.edge_list()) edges.emplace_back(perm[u], perm[v]);
    return motifscope::Graph::from_edges(n, edges);
}

}  // namespace oracles

#endif
