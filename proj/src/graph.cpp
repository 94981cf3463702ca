#include "motifscope/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace motifscope {

Graph Graph::from_edges(uint32_t n, std::span<const std::pair<uint32_t, uint32_t>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) continue;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.num_edges_ += nbrs.size();
    }
    g.num_edges_ /= 2;
    return g;
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
    const auto& nu = adj_[u];
    const auto& nv = adj_[v];
    const auto& small = nu.size() <= nv.size() ? nu : nv;
    uint32_t other = nu.size() <= nv.size() ? v : u;
    return std::binary_search(small.begin(), small.end(), other);
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edge_list() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    out.reserve(num_edges_);
    for (uint32_t u = 0; u < num_vertices(); ++u)
        for (uint32_t v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const uint32_t> vertices) const {
    std::unordered_map<uint32_t, uint32_t> local;
    local.reserve(vertices.size());
    for (uint32_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
    Graph g(static_cast<uint32_t>(vertices.size()));
    for (uint32_t i = 0; i < vertices.size(); ++i) {
        for (uint32_t w : adj_[vertices[i]]) {
            auto it = local.find(w);
            if (it != local.end()) g.adj_[i].push_back(it->second);
        }
        std::sort(g.adj_[i].begin(), g.adj_[i].end());
        g.num_edges_ += g.adj_[i].size();
    }
    g.num_edges_ /= 2;
    return g;
}

std::vector<std::vector<uint32_t>> Graph::connected_components() const {
    std::vector<std::vector<uint32_t>> comps;
    std::vector<char> seen(num_vertices(), 0);
    std::vector<uint32_t> stack;
    for (uint32_t s = 0; s < num_vertices(); ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            uint32_t u = stack.back();
            stack.pop_back();
            comps.back().push_back(u);
            for (uint32_t w : adj_[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

bool Graph::is_connected() const {
    if (num_vertices() == 0) return true;
    return connected_components().size() == 1;
}

bool Graph::is_forest() const {
    // A graph is a forest iff e = v - cc.
    return num_edges_ + connected_components().size() == num_vertices();
}

uint32_t max_degree(const Graph& g) {
    uint32_t d = 0;
    for (uint32_t v = 0; v < g.num_vertices(); ++v) d = std::max(d, g.degree(v));
    return d;
}

Graph complete_graph(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph path_graph(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(uint32_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

Graph star_graph(uint32_t leaves) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, edges);
}

Graph complete_bipartite(uint32_t a, uint32_t b) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < a; ++u)
        for (uint32_t v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

Graph empty_graph(uint32_t n) { return Graph(n); }

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edge_list();
    uint32_t off = a.num_vertices();
    for (auto [u, v] : b.edge_list()) edges.emplace_back(u + off, v + off);
    return Graph::from_edges(off + b.num_vertices(), edges);
}

Graph disjoint_union(uint32_t copies, const Graph& g) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    auto base = g.edge_list();
    for (uint32_t c = 0; c < copies; ++c) {
        uint32_t off = c * g.num_vertices();
        for (auto [u, v] : base) edges.emplace_back(u + off, v + off);
    }
    return Graph::from_edges(copies * g.num_vertices(), edges);
}

Graph join(const Graph& a, const Graph& b) {
    auto edges = a.edge_list();
    uint32_t off = a.num_vertices();
    for (auto [u, v] : b.edge_list()) edges.emplace_back(u + off, v + off);
    for (uint32_t u = 0; u < a.num_vertices(); ++u)
        for (uint32_t v = 0; v < b.num_vertices(); ++v) edges.emplace_back(u, off + v);
    return Graph::from_edges(off + b.num_vertices(), edges);
}

Graph blow_up(const Graph& g, std::span<const uint32_t> sizes, BlowUpMode mode) {
    if (sizes.size() != g.num_vertices())
        throw std::invalid_argument("blow_up: one cell size per vertex required");
    std::vector<uint32_t> offset(g.num_vertices() + 1, 0);
    for (uint32_t v = 0; v < g.num_vertices(); ++v) {
        if (sizes[v] == 0) throw std::invalid_argument("blow_up: cell sizes must be positive");
        offset[v + 1] = offset[v] + sizes[v];
    }
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    if (mode == BlowUpMode::Clique)
        for (uint32_t v = 0; v < g.num_vertices(); ++v)
            for (uint32_t i = offset[v]; i < offset[v + 1]; ++i)
                for (uint32_t j = i + 1; j < offset[v + 1]; ++j) edges.emplace_back(i, j);
    for (auto [u, v] : g.edge_list())
        for (uint32_t i = offset[u]; i < offset[u + 1]; ++i)
            for (uint32_t j = offset[v]; j < offset[v + 1]; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(offset.back(), edges);
}

namespace {

// SplitMix64; the one fixed-increment mixer used everywhere randomness is
// derived, so seeded runs are reproducible across platforms.
uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

Graph gen_erdos_renyi(uint32_t n, double delta, uint64_t seed) {
    if (delta < 0.0 || delta > 1.0)
        throw std::invalid_argument("gen_erdos_renyi: delta must lie in [0, 1]");
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    uint64_t state = seed;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) {
            double x = (splitmix64(state) >> 11) * 0x1.0p-53;
            if (x < delta) edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, edges);
}

Graph load_edge_list(std::istream& in, EdgeListStats* stats, bool add_ego) {
    EdgeListStats local;
    std::unordered_map<uint64_t, uint32_t> relabel;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::vector<char> seen_pair_probe;  // dedup via sorted pass below
    auto id_of = [&](uint64_t label) {
        auto [it, fresh] = relabel.emplace(label, static_cast<uint32_t>(relabel.size()));
        (void)fresh;
        return it->second;
    };

    std::string line;
    uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') {
            ++local.comment_lines;
            continue;
        }
        std::istringstream ls(line);
        uint64_t a, b;
        if (!(ls >> a >> b)) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": expected two nonnegative integers");
        }
        std::string trailing;
        if (ls >> trailing) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": trailing token '" + trailing + "'");
        }
        if (a == b) {
            ++local.self_loops;
            id_of(a);
            continue;
        }
        edges.emplace_back(id_of(a), id_of(b));
    }

    // Count duplicates before from_edges silently merges them.
    {
        auto norm = edges;
        for (auto& e : norm)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(norm.begin(), norm.end());
        for (size_t i = 1; i < norm.size(); ++i)
            if (norm[i] == norm[i - 1]) ++local.duplicate_edges;
    }

    uint32_t n = static_cast<uint32_t>(relabel.size());
    if (add_ego) {
        for (uint32_t v = 0; v < n; ++v) edges.emplace_back(n, v);
        ++n;
    }
    if (stats) *stats = local;
    return Graph::from_edges(n, edges);
}

Graph load_edge_list_file(const std::string& path, EdgeListStats* stats, bool add_ego) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open edge list file: " + path);
    return load_edge_list(in, stats, add_ego);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# vertices " << g.num_vertices() << " edges " << g.num_edges() << "\n";
    for (auto [u, v] : g.edge_list()) out << u << " " << v << "\n";
}

}  // namespace motifscope
