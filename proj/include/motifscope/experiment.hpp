#ifndef MOTIFSCOPE_EXPERIMENT_HPP
#define MOTIFSCOPE_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "motifscope/estimators.hpp"
#include "motifscope/graph.hpp"

namespace motifscope {

struct RunRecord {
    double p;
    uint32_t replicate;
    uint64_t seed;
    double estimate;
    double truth;
    double relative_error;
    double wall_time;  // seconds; the one non-reproducible column
};

struct ExperimentConfig {
    EstimatorConfig estimator;
    std::vector<double> p_grid;
    uint32_t replicates = 10;
    uint64_t master_seed = 0;
    bool clamp_at_zero = false;  // reporting option; estimates themselves stay signed
};

struct SummaryRow {
    double p;
    double mean_rel_err;
    double std_rel_err;  // population standard deviation
    uint32_t n_reps;
};

struct ExperimentResult {
    double truth;
    std::vector<RunRecord> records;   // ordered by (p index, replicate)
    std::vector<SummaryRow> summary;  // ordered by p
};

// Ground truth the estimator family targets on this parent.
double truth_value(const EstimatorConfig& cfg, const Graph& parent);

// Runs replicates over the p-grid with derived per-cell seeds. Deterministic
// for a fixed master seed regardless of worker count; workers are capped by
// the MOTIFSCOPE_THREADS environment variable.
ExperimentResult run_experiment(const Graph& parent, const ExperimentConfig& cfg);

std::string summarize(std::span<const RunRecord> records);  // CSV, stable order by p
std::string records_csv(std::span<const RunRecord> records);

uint32_t worker_count();

// Deterministic parallel map: fn(i) for i in [0, n), results indexed by i.
void parallel_for_index(uint64_t n, const std::function<void(uint64_t)>& fn);

}  // namespace motifscope

#endif
