#ifndef MOTIFSCOPE_GRAPH_HPP
#define MOTIFSCOPE_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace motifscope {

// Simple undirected graph on densely numbered vertices [0, n).
// Immutable once built; neighbor lists are sorted, symmetric, loop-free.
class Graph {
public:
    Graph() = default;
    explicit Graph(uint32_t n) : adj_(n) {}

    // Builds from an edge list. Self-loops and duplicate edges are dropped.
    static Graph from_edges(uint32_t n, std::span<const std::pair<uint32_t, uint32_t>> edges);

    uint32_t num_vertices() const { return static_cast<uint32_t>(adj_.size()); }
    uint64_t num_edges() const { return num_edges_; }
    std::span<const uint32_t> neighbors(uint32_t v) const { return adj_[v]; }
    uint32_t degree(uint32_t v) const { return static_cast<uint32_t>(adj_[v].size()); }
    bool has_edge(uint32_t u, uint32_t v) const;

    // Sorted (u, v) pairs with u < v.
    std::vector<std::pair<uint32_t, uint32_t>> edge_list() const;

    Graph induced(std::span<const uint32_t> vertices) const;
    std::vector<std::vector<uint32_t>> connected_components() const;
    bool is_connected() const;
    bool is_forest() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<uint32_t>> adj_;
    uint64_t num_edges_ = 0;
};

uint32_t max_degree(const Graph& g);

// Named constructions used throughout.
Graph complete_graph(uint32_t n);
Graph path_graph(uint32_t n);
Graph cycle_graph(uint32_t n);
Graph star_graph(uint32_t leaves);           // K_{1,leaves}, root is vertex 0
Graph complete_bipartite(uint32_t a, uint32_t b);
Graph empty_graph(uint32_t n);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph disjoint_union(uint32_t copies, const Graph& g);
Graph join(const Graph& a, const Graph& b);

enum class BlowUpMode { IndependentSet, Clique };

// Replaces vertex u by a cell of sizes[u] vertices; cells of adjacent
// vertices are fully bipartitely connected.
Graph blow_up(const Graph& g, std::span<const uint32_t> sizes, BlowUpMode mode);

// Each unordered pair is an edge independently with probability delta.
// Identical output for identical (n, delta, seed).
Graph gen_erdos_renyi(uint32_t n, double delta, uint64_t seed);

struct EdgeListStats {
    uint64_t duplicate_edges = 0;
    uint64_t self_loops = 0;
    uint64_t comment_lines = 0;
};

// Reads "u v" pairs, one per line; '#' starts a comment line. Vertex labels
// are arbitrary nonnegative integers and are re-indexed densely in order of
// first appearance. With add_ego, one extra vertex adjacent to every other
// vertex is appended (closed ego-network ingestion).
// Throws std::invalid_argument with the line number on malformed input.
Graph load_edge_list(std::istream& in, EdgeListStats* stats = nullptr, bool add_ego = false);
Graph load_edge_list_file(const std::string& path, EdgeListStats* stats = nullptr,
                          bool add_ego = false);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace motifscope

#endif
