#ifndef MOTIFSCOPE_GADGETS_HPP
#define MOTIFSCOPE_GADGETS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "motifscope/count.hpp"
#include "motifscope/distribution.hpp"
#include "motifscope/graph.hpp"
#include "motifscope/motif.hpp"

namespace motifscope {

// A pair of graphs whose low-order pattern counts agree while the target
// motif count differs; sampled observations of the two are then nearly
// indistinguishable at small sampling ratios.
struct GadgetPair {
    std::string name;
    Graph h;
    Graph h_prime;
    SamplingModel model;     // model under which matched_order is declared
    uint32_t matched_order;  // subgraph: pattern size; neighborhood: black count
    Motif target;
    long long gap;  // s(target, h) - s(target, h_prime)
    std::string notes;
};

// The four hand-constructed pairs: paw/C4, the matched-degree-sequence pair,
// the order-4 neighborhood pair, and the K4 matching construction.
std::vector<GadgetPair> builtin_pairs();

// Linear-algebra construction: B[i][j] = s(h_i, h_j) over the connected
// induced subgraph classes of h, exact rational solve of B x = e_m, then
// integer scaling into a pair of disjoint unions. Requires v(h) <= 5.
GadgetPair matching_pair(const Motif& h);

enum class StarFamilyMode { FirstMoment, SecondMoment };

// Star forests with degree-moment-matched star-size sequences. First-moment
// mode matches moments {0, 2, ..., k} and differs in edge count (vertex
// counts equalized with single-edge padding); second-moment mode matches
// {0, 1, 3, ..., k} and differs in wedge count.
GadgetPair star_family(uint32_t k, uint32_t ell, StarFamilyMode mode);

struct MomentSequences {
    std::vector<long long> alpha;  // length k+1, indices are x = 1..k+1
    std::vector<long long> beta;
    long long lcm;  // lcm(1..k+1)
};

// Integer sequences with sum x^i alpha_x = 0 for i in {0, 2, ..., k} and
// sum x alpha_x = lcm(1..k+1); beta analogous with the x^2 moment pinned to
// lcm^2. Exact rational solve of the moment constraint system.
MomentSequences moment_sequences(uint32_t k);

// Number of degree-r vertices equals the alternating rooted-star-count sum
// sum_{j>=r} (-1)^{j-r} C(j,r) n(K_{1,j}, g), truncated at K >= max degree.
bool degree_identity_check(const Graph& g, uint32_t r, uint32_t K);

// Connected induced pattern classes up to max_order, counted over the graph.
std::map<uint64_t, Count128> induced_census(const Graph& g, uint32_t max_order);

// Neighborhood pattern census: for every set B of at most max_black
// vertices, the observation star-closure of B (B, its full neighborhoods,
// and the edges incident to B) is one pattern occurrence; connected
// patterns are keyed by colored canonical code.
std::map<std::string, uint64_t> neighborhood_pattern_census(const Graph& g, uint32_t max_black);

// Brute-force check of the declared matching property and gap.
bool verify_matching(const GadgetPair& pair, std::string* why = nullptr);

// Edge-list exports plus a manifest line per pair.
void export_gadgets(const std::string& directory);

}  // namespace motifscope

#endif
