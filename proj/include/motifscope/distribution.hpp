#ifndef MOTIFSCOPE_DISTRIBUTION_HPP
#define MOTIFSCOPE_DISTRIBUTION_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "motifscope/estimators.hpp"
#include "motifscope/graph.hpp"

namespace motifscope {

enum class SamplingModel { Subgraph, Neighborhood };

// One isomorphism class of observations: a representative (visible part plus
// a count of invisible white vertices for the neighborhood model) and its
// exact probability.
struct ObservationClass {
    double probability = 0.0;
    Graph representative;
    std::vector<uint8_t> colors;  // empty for the subgraph model
    uint64_t invisible = 0;
};

struct ClassDistribution {
    SamplingModel model;
    std::map<std::string, ObservationClass> classes;
    double total_probability() const;
};

// Full distribution over observation classes. Connected graphs are
// enumerated monolithically (2^n, n <= 20); disjoint unions are enumerated
// per component and combined by multiset convolution, so unions of small
// components far beyond 20 vertices stay exactly analyzable.
ClassDistribution exact_distribution(const Graph& g, double p, SamplingModel model);

// Half L1 distance over the union of class keys. Models must agree.
double tv_distance(const ClassDistribution& a, const ClassDistribution& b);

// Exact estimator mean and variance over all 2^n sampling outcomes.
std::pair<double, double> exact_moments(const Graph& g, double p, const EstimatorConfig& cfg);

// Shares the per-subset statistics pass across a whole p-grid.
std::vector<std::pair<double, double>> exact_moments_grid(const Graph& g,
                                                          std::span<const double> ps,
                                                          const EstimatorConfig& cfg);

// Plug-in TV of empirical class histograms; biased towards over-estimating
// small distances at finite trial counts.
double mc_tv_estimate(const Graph& a, const Graph& b, double p, SamplingModel model,
                      uint64_t trials, uint64_t seed);

}  // namespace motifscope

#endif
