#ifndef MOTIFSCOPE_COUNT_HPP
#define MOTIFSCOPE_COUNT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "motifscope/graph.hpp"
#include "motifscope/motif.hpp"

namespace motifscope {

// Exact counts are 128-bit; k-subset counts outgrow 64 bits on large parents.
class Count128 {
public:
    Count128() : v_(0) {}
    Count128(uint64_t v) : v_(v) {}

    Count128& operator+=(const Count128& o);
    Count128 operator+(const Count128& o) const {
        Count128 r = *this;
        r += o;
        return r;
    }
    Count128 operator*(uint64_t m) const;
    bool operator==(const Count128&) const = default;
    auto operator<=>(const Count128&) const = default;

    double to_double() const;
    uint64_t to_u64() const;  // throws on overflow
    std::string to_string() const;

    static Count128 from_raw(unsigned __int128 v) {
        Count128 c;
        c.v_ = v;
        return c;
    }
    unsigned __int128 raw() const { return v_; }

private:
    unsigned __int128 v_;
};

enum class CountMethod { Enumerated, Specialized };

struct CountReport {
    Motif motif;
    Count128 value;
    CountMethod method;
};

// s(h, g): vertex subsets inducing a copy of h. Dispatches to specialized
// counters for edges/wedges/triangles/cliques, else enumerates connected
// induced k-subsets (ESU-style extension).
Count128 count_induced(const Motif& h, const Graph& g);
CountReport count_induced_report(const Motif& h, const Graph& g);

// n(h, g): subgraphs of g isomorphic to h, not necessarily induced.
Count128 count_subgraph(const Motif& h, const Graph& g);

Count128 count_edges(const Graph& g);
Count128 count_wedges(const Graph& g);     // induced P3
Count128 count_triangles(const Graph& g);
Count128 count_clique(uint32_t omega, const Graph& g);

// n(K_{1,k}, g) = sum_v C(deg v, k) for k >= 2 (rooted stars as subgraphs).
Count128 count_star_subgraphs(uint32_t leaves, const Graph& g);

struct ExpansionTerm {
    Motif supergraph;
    uint64_t coefficient;  // n(h, supergraph)
};

// Coefficients with n(h,G) = sum coeff * s(H',G) over edge-supersets H' of h.
std::vector<ExpansionTerm> noninduced_expansion(const Motif& h);

// Calls fn(vertices, adj_masks) for every connected induced k-subset.
// adj_masks[i] holds bits of neighbors within the subset (local indexing).
void for_each_connected_subset(const Graph& g, uint32_t k,
                               const std::function<void(const uint32_t*, const uint8_t*)>& fn);

}  // namespace motifscope

#endif
