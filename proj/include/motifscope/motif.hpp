#ifndef MOTIFSCOPE_MOTIF_HPP
#define MOTIFSCOPE_MOTIF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "motifscope/graph.hpp"

namespace motifscope {

// A motif: connected pattern graph on 1..8 vertices, held in canonical form.
// Two isomorphic inputs produce identical Motif values.
class Motif {
public:
    explicit Motif(const Graph& pattern);

    uint32_t order() const { return k_; }
    uint64_t num_edges() const { return graph_.num_edges(); }
    uint64_t canonical_code() const { return code_; }
    const Graph& graph() const { return graph_; }
    const std::string& name() const { return name_; }

    bool operator==(const Motif& o) const { return code_ == o.code_; }

    static Motif edge() { return Motif(complete_graph(2)); }
    static Motif wedge() { return Motif(path_graph(3)); }
    static Motif triangle() { return Motif(complete_graph(3)); }
    static Motif clique(uint32_t k) { return Motif(complete_graph(k)); }
    static Motif path(uint32_t k) { return Motif(path_graph(k)); }
    static Motif cycle(uint32_t k) { return Motif(cycle_graph(k)); }
    static Motif star(uint32_t leaves) { return Motif(star_graph(leaves)); }
    static Motif diamond();  // K4 minus one edge
    static Motif paw();      // triangle with a pendant edge
    static Motif claw() { return Motif(star_graph(3)); }

    // "edge", "wedge", "triangle", "clique:K", "path:K", "cycle:K", "star:K",
    // "diamond", "paw", "claw", or "custom:PATH" (edge-list file).
    static Motif parse(const std::string& spec);

private:
    uint32_t k_;
    Graph graph_;       // vertices in canonical order
    uint64_t code_;
    std::string name_;
};

}  // namespace motifscope

#endif
