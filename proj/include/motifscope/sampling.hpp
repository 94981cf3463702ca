#ifndef MOTIFSCOPE_SAMPLING_HPP
#define MOTIFSCOPE_SAMPLING_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "motifscope/count.hpp"
#include "motifscope/graph.hpp"
#include "motifscope/motif.hpp"

namespace motifscope {

// Counter-based splittable generator (splitmix64 stream). Replicate i of a
// run draws from Rng(derive_seed(master, i)), so replicates are independent
// and reproducible regardless of scheduling.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next_u64();
    double next_unit();  // [0, 1)
    bool bernoulli(double p);

private:
    uint64_t state_;
};

uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0);

// Vertex-induced observation: sampled vertices and the edges among them.
struct SubgraphSample {
    uint32_t parent_n = 0;
    std::vector<uint32_t> vertices;  // sorted parent ids
    Graph induced;                   // on local ids aligned with `vertices`
};

// Neighborhood observation: black = sampled vertices; every edge incident to
// a black vertex is observed; white vertices appear only next to blacks.
// A black vertex's observed degree equals its exact parent degree.
class BicoloredSample {
public:
    uint32_t parent_n = 0;
    std::vector<uint32_t> parent_ids;            // local -> parent id, sorted
    std::vector<uint8_t> black;                  // local flags
    std::vector<std::vector<uint32_t>> adj;      // observed edges, local ids

    uint32_t num_observed() const { return static_cast<uint32_t>(parent_ids.size()); }
    uint32_t num_black() const;
    uint64_t num_observed_edges() const;
    uint32_t degree(uint32_t local) const { return static_cast<uint32_t>(adj[local].size()); }
    bool is_black(uint32_t local) const { return black[local] != 0; }
};

SubgraphSample subgraph_sample(const Graph& g, double p, Rng& rng);
BicoloredSample neighborhood_sample(const Graph& g, double p, Rng& rng);

// Deterministic constructors from an explicit sampled set; the enumeration
// oracles drive these over all 2^n subsets.
SubgraphSample make_subgraph_sample(const Graph& g, std::span<const uint32_t> sampled);
BicoloredSample make_bicolored_sample(const Graph& g, std::span<const uint32_t> sampled);

// Connected pattern with colors (1 = black). At most one white vertex:
// with two or more white vertices the induced occurrence is undetermined.
struct ColoredPattern {
    ColoredPattern(const Graph& pattern, std::vector<uint8_t> pattern_colors);
    Graph graph;
    std::vector<uint8_t> colors;
    uint64_t code;  // colored canonical code
    uint32_t order() const { return graph.num_vertices(); }
    uint32_t num_white() const;
};

// Number of vertex subsets of the sample whose observed induced colored
// graph matches the pattern. Only subsets with >= k-1 black vertices are
// determined, and the pattern itself must have <= 1 white vertex.
Count128 count_colored(const ColoredPattern& pattern, const BicoloredSample& s);

struct ObservedMotifCounts {
    Count128 full_black;  // k-subsets, all black, inducing h
    Count128 one_white;   // k-subsets with exactly k-1 black inducing h
};

ObservedMotifCounts count_observed_motif(const Motif& h, const BicoloredSample& s);

struct WedgePatternCounts {
    uint64_t white_center = 0;   // both ends black, center white
    uint64_t one_white_end = 0;  // center black, one end black, one end white
    uint64_t all_black = 0;
};

WedgePatternCounts wedge_pattern_counts(const BicoloredSample& s);

// Pairs (4-cycle subgraph of the observed graph, black diagonal pair).
// All four edges of such a cycle are observed.
uint64_t diagonal_black_c4_count(const BicoloredSample& s);

// Text form: header "p <p> seed <seed> n <parent_n>", then "B u"/"W u"
// vertex lines and "E u v" edge lines (parent ids).
void dump_sample(std::ostream& out, const BicoloredSample& s, double p, uint64_t seed);
BicoloredSample parse_sample(std::istream& in, double* p = nullptr, uint64_t* seed = nullptr);

}  // namespace motifscope

#endif
