#include "motifscope/count.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "motifscope/canonical.hpp"

namespace motifscope {

Count128& Count128::operator+=(const Count128& o) {
    unsigned __int128 r = v_ + o.v_;
    if (r < v_) throw std::overflow_error("count overflow past 128 bits");
    v_ = r;
    return *this;
}

Count128 Count128::operator*(uint64_t m) const {
    if (m == 0 || v_ == 0) return Count128();
    unsigned __int128 r = v_ * m;
    if (r / m != v_) throw std::overflow_error("count overflow past 128 bits");
    Count128 out;
    out.v_ = r;
    return out;
}

double Count128::to_double() const {
    return static_cast<double>(static_cast<long double>(v_));
}

uint64_t Count128::to_u64() const {
    if (v_ > ~0ull) throw std::overflow_error("count does not fit in 64 bits");
    return static_cast<uint64_t>(v_);
}

std::string Count128::to_string() const {
    if (v_ == 0) return "0";
    std::string s;
    unsigned __int128 x = v_;
    while (x > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

Count128 binom128(uint64_t n, uint32_t k) {
    if (k > n) return Count128();
    Count128 r(1);
    for (uint32_t i = 1; i <= k; ++i) {
        // Prefix products of a binomial divide exactly at each step.
        r = Count128::from_raw((r * (n - i + 1)).raw() / i);
    }
    return r;
}

}  // namespace

void for_each_connected_subset(const Graph& g, uint32_t k,
                               const std::function<void(const uint32_t*, const uint8_t*)>& fn) {
    if (k == 0 || k > 8) throw std::invalid_argument("subset order must be 1..8");
    uint32_t n = g.num_vertices();
    std::vector<uint32_t> sub;
    sub.reserve(k);
    std::vector<uint32_t> adjcount(n, 0);
    std::vector<char> in_sub(n, 0);
    uint32_t vertices[8];
    uint8_t masks[8];

    auto emit = [&]() {
        for (uint32_t i = 0; i < k; ++i) {
            vertices[i] = sub[i];
            masks[i] = 0;
        }
        for (uint32_t i = 0; i < k; ++i)
            for (uint32_t j = i + 1; j < k; ++j)
                if (g.has_edge(sub[i], sub[j])) {
                    masks[i] |= uint8_t(1u << j);
                    masks[j] |= uint8_t(1u << i);
                }
        fn(vertices, masks);
    };

    std::function<void(std::vector<uint32_t>, uint32_t)> extend =
        [&](std::vector<uint32_t> ext, uint32_t root) {
            if (sub.size() == k) {
                emit();
                return;
            }
            while (!ext.empty()) {
                uint32_t w = ext.back();
                ext.pop_back();
                std::vector<uint32_t> ext2 = ext;
                for (uint32_t u : g.neighbors(w))
                    if (u > root && !in_sub[u] && adjcount[u] == 0) ext2.push_back(u);
                sub.push_back(w);
                in_sub[w] = 1;
                for (uint32_t u : g.neighbors(w)) ++adjcount[u];
                extend(std::move(ext2), root);
                for (uint32_t u : g.neighbors(w)) --adjcount[u];
                in_sub[w] = 0;
                sub.pop_back();
            }
        };

    for (uint32_t v = 0; v < n; ++v) {
        sub.push_back(v);
        in_sub[v] = 1;
        for (uint32_t u : g.neighbors(v)) ++adjcount[u];
        if (k == 1) {
            emit();
        } else {
            std::vector<uint32_t> ext;
            for (uint32_t u : g.neighbors(v))
                if (u > v) ext.push_back(u);
            extend(std::move(ext), v);
        }
        for (uint32_t u : g.neighbors(v)) --adjcount[u];
        in_sub[v] = 0;
        sub.pop_back();
    }
}

Count128 count_edges(const Graph& g) { return Count128(g.num_edges()); }

Count128 count_triangles(const Graph& g) {
    Count128 total;
    for (uint32_t u = 0; u < g.num_vertices(); ++u) {
        auto nu = g.neighbors(u);
        for (uint32_t v : nu) {
            if (v <= u) continue;
            auto nv = g.neighbors(v);
            // sorted intersection, counting only w > v to fix orientation
            size_t i = 0, j = 0;
            uint64_t c = 0;
            while (i < nu.size() && j < nv.size()) {
                if (nu[i] < nv[j])
                    ++i;
                else if (nu[i] > nv[j])
                    ++j;
                else {
                    if (nu[i] > v) ++c;
                    ++i;
                    ++j;
                }
            }
            total += Count128(c);
        }
    }
    return total;
}

Count128 count_wedges(const Graph& g) {
    // s(P3) + 3 s(K3) = sum_u C(deg u, 2)
    Count128 paths;
    for (uint32_t u = 0; u < g.num_vertices(); ++u)
        paths += binom128(g.degree(u), 2);
    Count128 tri = count_triangles(g) * 3;
    if (tri > paths) throw std::logic_error("wedge count underflow");
    return Count128::from_raw(paths.raw() - tri.raw());
}

namespace {

Count128 clique_extend(const Graph& g, const std::vector<uint32_t>& cand, uint32_t need) {
    if (need == 0) return Count128(1);
    if (cand.size() < need) return Count128();
    if (need == 1) return Count128(cand.size());
    Count128 total;
    for (size_t i = 0; i < cand.size(); ++i) {
        uint32_t u = cand[i];
        std::vector<uint32_t> next;
        for (size_t j = i + 1; j < cand.size(); ++j)
            if (g.has_edge(u, cand[j])) next.push_back(cand[j]);
        total += clique_extend(g, next, need - 1);
    }
    return total;
}

}  // namespace

Count128 count_clique(uint32_t omega, const Graph& g) {
    if (omega == 0) throw std::invalid_argument("clique order must be positive");
    if (omega == 1) return Count128(g.num_vertices());
    if (omega == 2) return count_edges(g);
    Count128 total;
    for (uint32_t v = 0; v < g.num_vertices(); ++v) {
        std::vector<uint32_t> cand;
        for (uint32_t u : g.neighbors(v))
            if (u > v) cand.push_back(u);
        total += clique_extend(g, cand, omega - 1);
    }
    return total;
}

Count128 count_star_subgraphs(uint32_t leaves, const Graph& g) {
    if (leaves < 2) throw std::invalid_argument("rooted star count needs >= 2 leaves");
    Count128 total;
    for (uint32_t v = 0; v < g.num_vertices(); ++v) total += binom128(g.degree(v), leaves);
    return total;
}

namespace {

uint64_t subset_mask_key(uint32_t k, const uint8_t* masks) {
    uint64_t key = 0;
    for (uint32_t i = 0; i < k; ++i) key |= static_cast<uint64_t>(masks[i]) << (8 * i);
    return key;
}

Count128 count_induced_generic(const Motif& h, const Graph& g) {
    uint32_t k = h.order();
    uint64_t target = h.canonical_code();
    Count128 total;
    std::unordered_map<uint64_t, bool> match_memo;
    for_each_connected_subset(g, k, [&](const uint32_t*, const uint8_t* masks) {
        uint64_t key = subset_mask_key(k, masks);
        auto it = match_memo.find(key);
        bool ok;
        if (it != match_memo.end()) {
            ok = it->second;
        } else {
            ok = canonical_code_small_masks(k, masks) == target;
            match_memo.emplace(key, ok);
        }
        if (ok) total += Count128(1);
    });
    return total;
}

// Bijections V(h) -> V(x) mapping every edge of h onto an edge of x,
// where both graphs are given as local adjacency masks on k vertices.
uint64_t count_embeddings_masks(uint32_t k, const uint8_t* h_masks, const uint8_t* x_masks) {
    uint32_t image[8];
    bool used[8] = {false};
    uint64_t total = 0;
    std::function<void(uint32_t)> rec = [&](uint32_t depth) {
        if (depth == k) {
            ++total;
            return;
        }
        for (uint32_t t = 0; t < k; ++t) {
            if (used[t]) continue;
            bool ok = true;
            for (uint32_t j = 0; j < depth && ok; ++j)
                if ((h_masks[depth] >> j) & 1u)
                    ok = (x_masks[t] >> image[j]) & 1u;
            if (!ok) continue;
            used[t] = true;
            image[depth] = t;
            rec(depth + 1);
            used[t] = false;
        }
    };
    rec(0);
    return total;
}

void graph_to_masks(const Graph& g, uint8_t* masks) {
    for (uint32_t v = 0; v < g.num_vertices(); ++v) {
        masks[v] = 0;
        for (uint32_t w : g.neighbors(v)) masks[v] |= uint8_t(1u << w);
    }
}

}  // namespace

Count128 count_induced(const Motif& h, const Graph& g) {
    return count_induced_report(h, g).value;
}

CountReport count_induced_report(const Motif& h, const Graph& g) {
    uint32_t k = h.order();
    if (k == 1) return {h, Count128(g.num_vertices()), CountMethod::Specialized};
    if (h == Motif::edge()) return {h, count_edges(g), CountMethod::Specialized};
    if (k == 3 && h == Motif::wedge()) return {h, count_wedges(g), CountMethod::Specialized};
    if (h.num_edges() == static_cast<uint64_t>(k) * (k - 1) / 2)
        return {h, count_clique(k, g), CountMethod::Specialized};
    return {h, count_induced_generic(h, g), CountMethod::Enumerated};
}

Count128 count_subgraph(const Motif& h, const Graph& g) {
    uint32_t k = h.order();
    if (k == 1) return Count128(g.num_vertices());
    if (h == Motif::edge()) return count_edges(g);

    uint8_t h_masks[8];
    graph_to_masks(h.graph(), h_masks);
    uint8_t self[8];
    graph_to_masks(h.graph(), self);
    uint64_t aut = count_embeddings_masks(k, h_masks, self);

    Count128 total;
    std::unordered_map<uint64_t, uint64_t> memo;  // induced class -> spanning copies
    for_each_connected_subset(g, k, [&](const uint32_t*, const uint8_t* masks) {
        uint64_t key = subset_mask_key(k, masks);
        auto it = memo.find(key);
        uint64_t copies;
        if (it != memo.end()) {
            copies = it->second;
        } else {
            copies = count_embeddings_masks(k, h_masks, masks) / aut;
            memo.emplace(key, copies);
        }
        if (copies) total += Count128(copies);
    });
    return total;
}

std::vector<ExpansionTerm> noninduced_expansion(const Motif& h) {
    uint32_t k = h.order();
    if (k > 6) throw std::overflow_error("noninduced_expansion supports motifs up to 6 vertices");

    uint8_t h_masks[8];
    graph_to_masks(h.graph(), h_masks);
    uint64_t aut = count_embeddings_masks(k, h_masks, h_masks);

    std::vector<std::pair<uint32_t, uint32_t>> non_edges;
    for (uint32_t i = 0; i < k; ++i)
        for (uint32_t j = i + 1; j < k; ++j)
            if (!((h_masks[i] >> j) & 1u)) non_edges.emplace_back(i, j);

    std::unordered_map<uint64_t, std::pair<Motif, uint64_t>> classes;
    for (uint32_t bits = 0; bits < (1u << non_edges.size()); ++bits) {
        uint8_t masks[8];
        std::copy(h_masks, h_masks + k, masks);
        for (size_t e = 0; e < non_edges.size(); ++e)
            if ((bits >> e) & 1u) {
                masks[non_edges[e].first] |= uint8_t(1u << non_edges[e].second);
                masks[non_edges[e].second] |= uint8_t(1u << non_edges[e].first);
            }
        uint64_t code = canonical_code_small_masks(k, masks);
        if (classes.count(code)) continue;
        std::vector<std::pair<uint32_t, uint32_t>> edges;
        for (uint32_t i = 0; i < k; ++i)
            for (uint32_t j = i + 1; j < k; ++j)
                if ((masks[i] >> j) & 1u) edges.emplace_back(i, j);
        Motif super(Graph::from_edges(k, edges));
        uint64_t coeff = count_embeddings_masks(k, h_masks, masks) / aut;
        classes.emplace(code, std::make_pair(super, coeff));
    }

    std::vector<ExpansionTerm> terms;
    for (auto& [code, entry] : classes) terms.push_back({entry.first, entry.second});
    std::sort(terms.begin(), terms.end(), [](const ExpansionTerm& a, const ExpansionTerm& b) {
        if (a.supergraph.num_edges() != b.supergraph.num_edges())
            return a.supergraph.num_edges() < b.supergraph.num_edges();
        return a.supergraph.canonical_code() < b.supergraph.canonical_code();
    });
    return terms;
}

}  // namespace motifscope
