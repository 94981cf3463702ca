#include "motifscope/motif.hpp"

#include <algorithm>
#include <stdexcept>

#include "motifscope/canonical.hpp"

namespace motifscope {

namespace {

// Rebuilds the pattern with vertices relabeled into one canonical ordering,
// so Motif::graph() is identical for isomorphic inputs.
Graph canonical_relabel(const Graph& g, uint64_t code) {
    uint32_t n = g.num_vertices();
    std::vector<uint32_t> perm(n);
    std::vector<bool> used(n, false);
    // Greedy: recover an ordering achieving the canonical code.
    // Try vertices position by position, checking prefix feasibility.
    uint32_t bits_total = n * (n - 1) / 2;
    uint64_t body = code & ((bits_total >= 64) ? ~0ull : ((1ull << bits_total) - 1));
    std::vector<uint8_t> masks(n, 0);
    for (uint32_t v = 0; v < n; ++v)
        for (uint32_t w : g.neighbors(v)) masks[v] |= uint8_t(1u << w);

    struct Rec {
        uint32_t n;
        const std::vector<uint8_t>& masks;
        uint64_t target;
        std::vector<uint32_t>& perm;
        std::vector<bool>& used;
        bool solve(uint32_t depth, uint64_t partial, uint32_t bits, uint32_t total_bits) {
            if (depth == n) return partial == target;
            for (uint32_t v = 0; v < n; ++v) {
                if (used[v]) continue;
                uint64_t chunk = 0;
                for (uint32_t j = 0; j < depth; ++j)
                    chunk = (chunk << 1) | ((masks[v] >> perm[j]) & 1u);
                uint64_t next = (partial << depth) | chunk;
                uint32_t nbits = bits + depth;
                if (next != (target >> (total_bits - nbits))) continue;
                used[v] = true;
                perm[depth] = v;
                if (solve(depth + 1, next, nbits, total_bits)) return true;
                used[v] = false;
            }
            return false;
        }
    } rec{n, masks, body, perm, used};
    if (n > 0 && !rec.solve(0, 0, 0, bits_total))
        throw std::logic_error("canonical relabeling failed");
    std::vector<uint32_t> order(perm.begin(), perm.end());
    return g.induced(order);
}

}  // namespace

Motif::Motif(const Graph& pattern) : k_(pattern.num_vertices()) {
    if (k_ < 1 || k_ > 8) throw std::invalid_argument("motif must have 1..8 vertices");
    if (!pattern.is_connected()) throw std::invalid_argument("motif must be connected");
    code_ = canonical_code_small(pattern);
    graph_ = canonical_relabel(pattern, code_ & ((1ull << 40) - 1));
    name_ = "motif" + std::to_string(k_) + "v" + std::to_string(pattern.num_edges()) + "e";
}

Motif Motif::diamond() {
    Graph g = Graph::from_edges(
        4, std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    return Motif(g);
}

Motif Motif::paw() {
    Graph g = Graph::from_edges(
        4, std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    return Motif(g);
}

Motif Motif::parse(const std::string& spec) {
    auto arg = [&](const std::string& prefix) -> std::string {
        return spec.substr(prefix.size());
    };
    if (spec == "edge") return edge();
    if (spec == "wedge") return wedge();
    if (spec == "triangle") return triangle();
    if (spec == "diamond") return diamond();
    if (spec == "paw") return paw();
    if (spec == "claw") return claw();
    if (spec.rfind("clique:", 0) == 0) return clique(std::stoul(arg("clique:")));
    if (spec.rfind("path:", 0) == 0) return path(std::stoul(arg("path:")));
    if (spec.rfind("cycle:", 0) == 0) return cycle(std::stoul(arg("cycle:")));
    if (spec.rfind("star:", 0) == 0) return star(std::stoul(arg("star:")));
    if (spec.rfind("custom:", 0) == 0) return Motif(load_edge_list_file(arg("custom:")));
    throw std::invalid_argument("unknown motif spec: " + spec);
}

}  // namespace motifscope
