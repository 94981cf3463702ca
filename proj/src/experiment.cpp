#include "motifscope/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "motifscope/count.hpp"

namespace motifscope {

uint32_t worker_count() {
    uint32_t hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("MOTIFSCOPE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return std::min<uint32_t>(static_cast<uint32_t>(v), 256);
    }
    return hw;
}

void parallel_for_index(uint64_t n, const std::function<void(uint64_t)>& fn) {
    uint32_t workers = std::min<uint64_t>(worker_count(), n);
    if (workers <= 1) {
        for (uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<uint64_t> next(0);
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (uint32_t w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (;;) {
                uint64_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

double truth_value(const EstimatorConfig& cfg, const Graph& parent) {
    switch (cfg.family) {
        case EstimatorFamily::Ht:
            if (cfg.sampler == SamplerKind::Subgraph)
                return count_induced(cfg.motif, parent).to_double();
            return static_cast<double>(parent.num_edges());
        case EstimatorFamily::Linear:
            return count_induced(cfg.motif, parent).to_double();
        case EstimatorFamily::Adaptive:
            return static_cast<double>(parent.num_edges());
        case EstimatorFamily::ForestWedge:
        case EstimatorFamily::WedgeLinearAlt:
        case EstimatorFamily::ForestWedgeDegree:
            return count_wedges(parent).to_double();
        case EstimatorFamily::PlanarTriangle:
            return count_triangles(parent).to_double();
        case EstimatorFamily::NoninducedC4:
            return count_subgraph(Motif::cycle(4), parent).to_double();
    }
    throw std::logic_error("unhandled estimator family");
}

ExperimentResult run_experiment(const Graph& parent, const ExperimentConfig& cfg) {
    if (cfg.p_grid.empty()) throw std::invalid_argument("experiment needs a nonempty p grid");
    if (cfg.replicates < 1) throw std::invalid_argument("experiment needs replicates >= 1");
    for (double p : cfg.p_grid) {
        EstimatorConfig probe = cfg.estimator;
        probe.p = p;
        probe.validate();
    }

    ExperimentResult result;
    result.truth = truth_value(cfg.estimator, parent);
    if (!(result.truth > 0.0))
        throw std::invalid_argument("experiment target count is zero on this parent");

    std::vector<double> grid = cfg.p_grid;
    std::sort(grid.begin(), grid.end());
    uint64_t cells = static_cast<uint64_t>(grid.size()) * cfg.replicates;
    result.records.resize(cells);

    parallel_for_index(cells, [&](uint64_t cell) {
        uint32_t pi = static_cast<uint32_t>(cell / cfg.replicates);
        uint32_t rep = static_cast<uint32_t>(cell % cfg.replicates);
        EstimatorConfig est = cfg.estimator;
        est.p = grid[pi];
        uint64_t seed = derive_seed(cfg.master_seed, pi, rep);
        auto t0 = std::chrono::steady_clock::now();
        Rng rng(seed);
        double estimate;
        if (est.sampler == SamplerKind::Subgraph) {
            estimate = evaluate(est, subgraph_sample(parent, est.p, rng));
        } else {
            estimate = evaluate(est, neighborhood_sample(parent, est.p, rng));
        }
        if (cfg.clamp_at_zero && estimate < 0.0) estimate = 0.0;
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        result.records[cell] = {grid[pi],  rep,         seed, estimate, result.truth,
                                std::abs(estimate - result.truth) / result.truth, dt};
    });

    for (uint32_t pi = 0; pi < grid.size(); ++pi) {
        double mean = 0.0;
        for (uint32_t r = 0; r < cfg.replicates; ++r)
            mean += result.records[pi * cfg.replicates + r].relative_error;
        mean /= cfg.replicates;
        double var = 0.0;
        for (uint32_t r = 0; r < cfg.replicates; ++r) {
            double d = result.records[pi * cfg.replicates + r].relative_error - mean;
            var += d * d;
        }
        var /= cfg.replicates;  // population
        result.summary.push_back({grid[pi], mean, std::sqrt(var), cfg.replicates});
    }
    return result;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string summarize(std::span<const RunRecord> records) {
    if (records.empty()) throw std::invalid_argument("summarize needs at least one record");
    std::map<double, std::vector<double>> by_p;
    for (const auto& r : records) by_p[r.p].push_back(r.relative_error);
    std::string out = "# std_rel_err is the population standard deviation (divide by n)\n";
    out += "p,mean_rel_err,std_rel_err,n_reps\n";
    for (const auto& [p, errs] : by_p) {
        double mean = 0.0;
        for (double e : errs) mean += e;
        mean /= errs.size();
        double var = 0.0;
        for (double e : errs) var += (e - mean) * (e - mean);
        var /= errs.size();
        out += fmt(p) + "," + fmt(mean) + "," + fmt(std::sqrt(var)) + "," +
               std::to_string(errs.size()) + "\n";
    }
    return out;
}

std::string records_csv(std::span<const RunRecord> records) {
    std::string out = "p,replicate,seed,estimate,truth,relative_error,wall_time_s\n";
    for (const auto& r : records)
        out += fmt(r.p) + "," + std::to_string(r.replicate) + "," + std::to_string(r.seed) + "," +
               fmt(r.estimate) + "," + fmt(r.truth) + "," + fmt(r.relative_error) + "," +
               fmt(r.wall_time) + "\n";
    return out;
}

}  // namespace motifscope
