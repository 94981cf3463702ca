#include "motifscope/sampling.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "motifscope/canonical.hpp"

namespace motifscope {

uint64_t Rng::next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double Rng::next_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

bool Rng::bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return next_unit() < p;
}

uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b) {
    Rng h(master ^ (a * 0xA0761D6478BD642Full) ^ (b * 0xE7037ED1A0B428DBull));
    h.next_u64();
    return h.next_u64();
}

uint32_t BicoloredSample::num_black() const {
    uint32_t c = 0;
    for (uint8_t b : black) c += b;
    return c;
}

uint64_t BicoloredSample::num_observed_edges() const {
    uint64_t twice = 0;
    for (const auto& nbrs : adj) twice += nbrs.size();
    return twice / 2;
}

namespace {

std::vector<uint32_t> draw_vertices(uint32_t n, double p, Rng& rng) {
    std::vector<uint32_t> s;
    for (uint32_t v = 0; v < n; ++v)
        if (rng.bernoulli(p)) s.push_back(v);
    return s;
}

void check_ratio(double p) {
    if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument("sampling ratio must lie in (0, 1]");
}

}  // namespace

SubgraphSample make_subgraph_sample(const Graph& g, std::span<const uint32_t> sampled) {
    SubgraphSample s;
    s.parent_n = g.num_vertices();
    s.vertices.assign(sampled.begin(), sampled.end());
    std::sort(s.vertices.begin(), s.vertices.end());
    s.induced = g.induced(s.vertices);
    return s;
}

SubgraphSample subgraph_sample(const Graph& g, double p, Rng& rng) {
    check_ratio(p);
    return make_subgraph_sample(g, draw_vertices(g.num_vertices(), p, rng));
}

BicoloredSample make_bicolored_sample(const Graph& g, std::span<const uint32_t> sampled) {
    BicoloredSample s;
    s.parent_n = g.num_vertices();
    std::vector<char> is_black(g.num_vertices(), 0);
    for (uint32_t v : sampled) is_black[v] = 1;
    std::vector<char> visible = is_black;
    for (uint32_t v : sampled)
        for (uint32_t w : g.neighbors(v)) visible[w] = 1;

    std::vector<uint32_t> local(g.num_vertices(), ~0u);
    for (uint32_t v = 0; v < g.num_vertices(); ++v)
        if (visible[v]) {
            local[v] = static_cast<uint32_t>(s.parent_ids.size());
            s.parent_ids.push_back(v);
            s.black.push_back(is_black[v]);
        }
    s.adj.resize(s.parent_ids.size());
    for (uint32_t v : sampled)
        for (uint32_t w : g.neighbors(v)) {
            if (is_black[w] && w < v) continue;  // black-black edge handled once
            s.adj[local[v]].push_back(local[w]);
            s.adj[local[w]].push_back(local[v]);
        }
    for (auto& nbrs : s.adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return s;
}

BicoloredSample neighborhood_sample(const Graph& g, double p, Rng& rng) {
    check_ratio(p);
    return make_bicolored_sample(g, draw_vertices(g.num_vertices(), p, rng));
}

ColoredPattern::ColoredPattern(const Graph& pattern, std::vector<uint8_t> pattern_colors)
    : graph(pattern), colors(std::move(pattern_colors)) {
    if (colors.size() != graph.num_vertices())
        throw std::invalid_argument("pattern colors must cover every vertex");
    if (!graph.is_connected() || graph.num_vertices() > 8)
        throw std::invalid_argument("pattern must be connected with at most 8 vertices");
    code = canonical_code_small(graph, &colors);
}

uint32_t ColoredPattern::num_white() const {
    uint32_t c = 0;
    for (uint8_t b : colors) c += (b == 0);
    return c;
}

namespace {

// Enumerates connected k-subsets of the observed graph carrying >= k-1 black
// vertices; within such subsets every induced edge is observed exactly.
template <typename Fn>
void for_each_determined_subset(const BicoloredSample& s, uint32_t k, Fn&& fn) {
    Graph observed;
    {
        std::vector<std::pair<uint32_t, uint32_t>> edges;
        for (uint32_t v = 0; v < s.num_observed(); ++v)
            for (uint32_t w : s.adj[v])
                if (v < w) edges.emplace_back(v, w);
        observed = Graph::from_edges(s.num_observed(), edges);
    }
    for_each_connected_subset(observed, k, [&](const uint32_t* vertices, const uint8_t* masks) {
        uint32_t blacks = 0;
        for (uint32_t i = 0; i < k; ++i) blacks += s.is_black(vertices[i]);
        if (blacks + 1 < k) return;
        fn(vertices, masks, blacks);
    });
}

}  // namespace

Count128 count_colored(const ColoredPattern& pattern, const BicoloredSample& s) {
    if (pattern.num_white() >= 2)
        throw std::invalid_argument(
            "count_colored: patterns with two or more white vertices are undetermined");
    uint32_t k = pattern.order();
    Count128 total;
    std::unordered_map<uint64_t, bool> memo;
    for_each_determined_subset(s, k, [&](const uint32_t* vertices, const uint8_t* masks,
                                         uint32_t blacks) {
        if (blacks != k - pattern.num_white()) return;
        uint8_t colors[8];
        uint64_t key = 0;
        for (uint32_t i = 0; i < k; ++i) {
            colors[i] = s.is_black(vertices[i]);
            key |= static_cast<uint64_t>(masks[i]) << (8 * i);
        }
        if (blacks != k) {
            // fold the white position into the memo key
            uint32_t white_pos = 0;
            for (uint32_t i = 0; i < k; ++i)
                if (!colors[i]) white_pos = i;
            key ^= 0x9E3779B97F4A7C15ull * (white_pos + 1);
        }
        auto it = memo.find(key);
        bool ok;
        if (it != memo.end()) {
            ok = it->second;
        } else {
            ok = canonical_code_small_masks(k, masks, colors) == pattern.code;
            memo.emplace(key, ok);
        }
        if (ok) total += Count128(1);
    });
    return total;
}

ObservedMotifCounts count_observed_motif(const Motif& h, const BicoloredSample& s) {
    uint32_t k = h.order();
    uint64_t target = h.canonical_code();
    ObservedMotifCounts out;
    std::unordered_map<uint64_t, bool> memo;
    for_each_determined_subset(s, k, [&](const uint32_t*, const uint8_t* masks, uint32_t blacks) {
        uint64_t key = 0;
        for (uint32_t i = 0; i < k; ++i) key |= static_cast<uint64_t>(masks[i]) << (8 * i);
        auto it = memo.find(key);
        bool ok;
        if (it != memo.end()) {
            ok = it->second;
        } else {
            ok = canonical_code_small_masks(k, masks) == target;
            memo.emplace(key, ok);
        }
        if (!ok) return;
        if (blacks == k)
            out.full_black += Count128(1);
        else
            out.one_white += Count128(1);
    });
    return out;
}

WedgePatternCounts wedge_pattern_counts(const BicoloredSample& s) {
    WedgePatternCounts out;
    uint32_t n = s.num_observed();
    std::vector<char> mark(n, 0);  // 1 black neighbor, 2 white neighbor
    for (uint32_t c = 0; c < n; ++c) {
        uint64_t nb = 0, nw = 0;
        for (uint32_t u : s.adj[c]) {
            mark[u] = s.is_black(u) ? 1 : 2;
            ++(s.is_black(u) ? nb : nw);
        }
        // adjacent pairs among marked neighbors, by color combination
        uint64_t adj_bb = 0, adj_bw = 0;
        for (uint32_t u : s.adj[c]) {
            if (!s.is_black(u)) continue;  // edges among neighbors need a black endpoint
            for (uint32_t w : s.adj[u]) {
                if (w == u || !mark[w]) continue;
                if (mark[w] == 1) {
                    if (w > u) ++adj_bb;
                } else {
                    ++adj_bw;
                }
            }
        }
        if (s.is_black(c)) {
            out.all_black += nb * (nb - 1) / 2 - adj_bb;
            out.one_white_end += nb * nw - adj_bw;
        } else {
            out.white_center += nb * (nb - 1) / 2 - adj_bb;
        }
        for (uint32_t u : s.adj[c]) mark[u] = 0;
    }
    return out;
}

uint64_t diagonal_black_c4_count(const BicoloredSample& s) {
    std::vector<uint32_t> blacks;
    for (uint32_t v = 0; v < s.num_observed(); ++v)
        if (s.is_black(v)) blacks.push_back(v);
    uint64_t total = 0;
    for (size_t i = 0; i < blacks.size(); ++i)
        for (size_t j = i + 1; j < blacks.size(); ++j) {
            const auto& a = s.adj[blacks[i]];
            const auto& b = s.adj[blacks[j]];
            size_t x = 0, y = 0;
            uint64_t common = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] < b[y])
                    ++x;
                else if (a[x] > b[y])
                    ++y;
                else {
                    ++common;
                    ++x;
                    ++y;
                }
            }
            total += common * (common - 1) / 2;
        }
    return total;
}

void dump_sample(std::ostream& out, const BicoloredSample& s, double p, uint64_t seed) {
    char head[96];
    std::snprintf(head, sizeof(head), "p %.17g seed %llu n %u\n", p,
                  static_cast<unsigned long long>(seed), s.parent_n);
    out << head;
    for (uint32_t v = 0; v < s.num_observed(); ++v)
        out << (s.is_black(v) ? "B " : "W ") << s.parent_ids[v] << "\n";
    for (uint32_t v = 0; v < s.num_observed(); ++v)
        for (uint32_t w : s.adj[v])
            if (v < w) out << "E " << s.parent_ids[v] << " " << s.parent_ids[w] << "\n";
}

BicoloredSample parse_sample(std::istream& in, double* p, uint64_t* seed) {
    std::string tok;
    double pv;
    uint64_t sv;
    uint32_t n;
    if (!(in >> tok) || tok != "p" || !(in >> pv) || !(in >> tok) || tok != "seed" ||
        !(in >> sv) || !(in >> tok) || tok != "n" || !(in >> n))
        throw std::invalid_argument("sample header must be 'p <p> seed <seed> n <n>'");
    if (p) *p = pv;
    if (seed) *seed = sv;

    BicoloredSample s;
    s.parent_n = n;
    std::unordered_map<uint32_t, uint32_t> local;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    while (in >> tok) {
        if (tok == "B" || tok == "W") {
            uint32_t v;
            if (!(in >> v)) throw std::invalid_argument("bad vertex line in sample");
            local[v] = static_cast<uint32_t>(s.parent_ids.size());
            s.parent_ids.push_back(v);
            s.black.push_back(tok == "B");
        } else if (tok == "E") {
            uint32_t u, v;
            if (!(in >> u >> v)) throw std::invalid_argument("bad edge line in sample");
            edges.emplace_back(u, v);
        } else {
            throw std::invalid_argument("unexpected token in sample: " + tok);
        }
    }
    s.adj.resize(s.parent_ids.size());
    for (auto [u, v] : edges) {
        auto iu = local.find(u), iv = local.find(v);
        if (iu == local.end() || iv == local.end())
            throw std::invalid_argument("sample edge references unknown vertex");
        if (!s.black[iu->second] && !s.black[iv->second])
            throw std::invalid_argument("observed edge needs a black endpoint");
        s.adj[iu->second].push_back(iv->second);
        s.adj[iv->second].push_back(iu->second);
    }
    for (auto& nbrs : s.adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return s;
}

}  // namespace motifscope
