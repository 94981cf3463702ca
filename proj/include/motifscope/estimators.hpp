#ifndef MOTIFSCOPE_ESTIMATORS_HPP
#define MOTIFSCOPE_ESTIMATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motifscope/motif.hpp"
#include "motifscope/sampling.hpp"

namespace motifscope {

enum class SamplerKind { Subgraph, Neighborhood };

enum class EstimatorFamily {
    Ht,                // subgraph: s(h,G~)/p^k; neighborhood: edge count / (p^2+2pq)
    Linear,            // two-weight colored-count combination (edge or general motif)
    Adaptive,          // degree-adaptive edge kernel
    ForestWedge,       // three-weight wedge estimator, forest parameterization
    WedgeLinearAlt,    // alternative three-weight wedge parameterization
    ForestWedgeDegree, // sum over black vertices of C(deg,2)/p
    PlanarTriangle,    // triangle estimator with the planar alpha choice
    NoninducedC4,      // non-induced 4-cycles via black diagonal pairs
};

const char* family_name(EstimatorFamily f);

struct WeightOverride {
    std::optional<double> lambda;  // three-weight families only
    std::optional<double> alpha;
    std::optional<double> beta;
};

struct EstimatorConfig {
    SamplerKind sampler = SamplerKind::Neighborhood;
    EstimatorFamily family = EstimatorFamily::Ht;
    Motif motif = Motif::edge();
    double p = 0.5;
    uint32_t d = 1;  // max-degree bound used by the linear weights
    // The low-ratio branch constants (1/(k p^{k-1}), 1/p^k) are only
    // asymptotically unbiased; by default beta is re-solved from the
    // unbiasedness constraint. This flag restores the literal constants.
    bool asymptotic_low_weights = false;
    std::optional<WeightOverride> weight_override;

    void validate() const;
};

struct LinearWeights {
    double alpha;
    double beta;
};

struct WedgeWeights {
    double lambda;  // white-center wedge
    double alpha;   // one-white-end wedge
    double beta;    // all-black wedge
};

// Optimal edge weights: alpha = (1+dp)/(p(2+(d-1)p)), beta = (1-d(1-2p))/(p(2+(d-1)p)).
LinearWeights edge_linear_weights(double p, uint32_t d);

// General-motif weights. p > 1/d: alpha = 1/p^{k-1}, beta = (1-kq)/p^k.
// p <= 1/d: alpha = 1/(k p^{k-1}); beta = 1/p^k when asymptotic, else solved
// from k p^{k-1} q alpha + p^k beta = 1.
LinearWeights motif_linear_weights(uint32_t k, double p, uint32_t d, bool asymptotic);

WedgeWeights forest_wedge_weights(double p);      // lambda = 1/p^2, alpha = 1/(2pq), beta = 0
WedgeWeights wedge_linear_alt_weights(double p);  // singular near p = 3/4

double ht_subgraph(const Motif& h, const SubgraphSample& s, double p);
double ht_neighborhood_edges(const BicoloredSample& s, double p);
double linear_edge(const BicoloredSample& s, double p, uint32_t d,
                   const std::optional<LinearWeights>& override_w = {});
double linear_motif(const Motif& h, const BicoloredSample& s, double p, uint32_t d,
                    bool asymptotic = false,
                    const std::optional<LinearWeights>& override_w = {});
double adaptive_edge(const BicoloredSample& s, double p);
double forest_wedge(const BicoloredSample& s, double p,
                    const std::optional<WedgeWeights>& override_w = {});
double wedge_linear_alt(const BicoloredSample& s, double p);
double forest_wedge_degree(const BicoloredSample& s, double p);
double planar_triangle(const BicoloredSample& s, double p);
double noninduced_c4(const BicoloredSample& s, double p);

// Adaptive kernel pieces: f(x) = (px+q)/(p(px+2q)), g(x,y) = (1-pq(f(x)+f(y)))/p^2.
double adaptive_f(double p, double x);
double adaptive_g(double p, double x, double y);

// p-independent sufficient statistics, so moment scans over a p-grid reuse
// one enumeration pass per sample.
struct SampleStats {
    std::vector<double> counts;
    std::vector<std::pair<uint32_t, uint64_t>> one_black_degree_hist;  // adaptive
    std::vector<std::pair<std::pair<uint32_t, uint32_t>, uint64_t>> two_black_degree_hist;
};

SampleStats collect_stats(const EstimatorConfig& cfg, const SubgraphSample& s);
SampleStats collect_stats(const EstimatorConfig& cfg, const BicoloredSample& s);
double value_from_stats(const EstimatorConfig& cfg, const SampleStats& stats, double p);

double evaluate(const EstimatorConfig& cfg, const SubgraphSample& s);
double evaluate(const EstimatorConfig& cfg, const BicoloredSample& s);

// Closed-form variance upper bounds used by the acceptance tests.
// Ht/subgraph:  s * k 2^k (p^{-k} v d^{k-1}/p)
// Linear edge:  e (d+1) q^2 / (p (2+(d-1)p))
// Linear motif: s * k^3 2^{k+1} (d/p^{k-1} ^ d^{k-2}/p^2)
// Forest wedge: 16 * (w/p^2 v w d/p)
double variance_bound(const EstimatorConfig& cfg, double true_count, uint32_t d, double p);

}  // namespace motifscope

#endif
