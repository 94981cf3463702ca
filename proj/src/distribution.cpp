#include "motifscope/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "motifscope/canonical.hpp"

namespace motifscope {

namespace {

constexpr uint32_t kMaxComponentOrder = 20;
constexpr size_t kMaxClasses = 200000;

struct RawClass {
    double prob = 0.0;
    // visible parts (graph, colors); colors empty in the subgraph model
    std::vector<std::pair<Graph, std::vector<uint8_t>>> parts;
    uint64_t invisible = 0;
};

std::string key_of(const std::vector<std::string>& sorted_codes, uint64_t invisible) {
    std::string key = "i" + std::to_string(invisible);
    for (const auto& c : sorted_codes) {
        key.push_back('|');
        key += c;
    }
    return key;
}

struct KeyedClass {
    std::vector<std::string> codes;  // sorted component codes
    RawClass cls;
};

using RawDist = std::map<std::string, KeyedClass>;

void accumulate(RawDist& dist, std::vector<std::string> codes, RawClass cls) {
    std::sort(codes.begin(), codes.end());
    std::string key = key_of(codes, cls.invisible);
    auto it = dist.find(key);
    if (it == dist.end()) {
        dist.emplace(key, KeyedClass{std::move(codes), std::move(cls)});
    } else {
        it->second.cls.prob += cls.prob;
    }
    if (dist.size() > kMaxClasses)
        throw std::overflow_error("exact_distribution: class count exceeds limit");
}

RawDist enumerate_component(const Graph& comp, double p, SamplingModel model) {
    uint32_t n = comp.num_vertices();
    if (n > kMaxComponentOrder)
        throw std::overflow_error("exact_distribution: component exceeds enumeration limit");
    double q = 1.0 - p;
    std::vector<double> pw(n + 1, 1.0), qw(n + 1, 1.0);
    for (uint32_t i = 1; i <= n; ++i) {
        pw[i] = pw[i - 1] * p;
        qw[i] = qw[i - 1] * q;
    }

    RawDist dist;
    std::vector<uint32_t> sampled;
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        sampled.clear();
        for (uint32_t v = 0; v < n; ++v)
            if ((mask >> v) & 1ull) sampled.push_back(v);
        double prob = pw[sampled.size()] * qw[n - sampled.size()];

        RawClass cls;
        cls.prob = prob;
        std::vector<std::string> codes;
        if (model == SamplingModel::Subgraph) {
            Graph induced = comp.induced(sampled);
            for (const auto& cc : induced.connected_components()) {
                Graph part = induced.induced(cc);
                codes.push_back(canonical_code(part));
                cls.parts.emplace_back(std::move(part), std::vector<uint8_t>{});
            }
        } else {
            BicoloredSample s = make_bicolored_sample(comp, sampled);
            Graph observed;
            {
                std::vector<std::pair<uint32_t, uint32_t>> edges;
                for (uint32_t v = 0; v < s.num_observed(); ++v)
                    for (uint32_t w : s.adj[v])
                        if (v < w) edges.emplace_back(v, w);
                observed = Graph::from_edges(s.num_observed(), edges);
            }
            for (const auto& cc : observed.connected_components()) {
                Graph part = observed.induced(cc);
                std::vector<uint8_t> colors(cc.size());
                for (size_t i = 0; i < cc.size(); ++i) colors[i] = s.black[cc[i]];
                codes.push_back(canonical_code(part, &colors));
                cls.parts.emplace_back(std::move(part), std::move(colors));
            }
            cls.invisible = n - s.num_observed();
        }
        accumulate(dist, std::move(codes), std::move(cls));
    }
    return dist;
}

RawDist convolve(const RawDist& a, const RawDist& b) {
    RawDist out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            RawClass cls;
            cls.prob = ca.cls.prob * cb.cls.prob;
            cls.parts = ca.cls.parts;
            cls.parts.insert(cls.parts.end(), cb.cls.parts.begin(), cb.cls.parts.end());
            cls.invisible = ca.cls.invisible + cb.cls.invisible;
            std::vector<std::string> codes = ca.codes;
            codes.insert(codes.end(), cb.codes.begin(), cb.codes.end());
            accumulate(out, std::move(codes), std::move(cls));
        }
    return out;
}

}  // namespace

double ClassDistribution::total_probability() const {
    double t = 0.0;
    for (const auto& [k, c] : classes) t += c.probability;
    return t;
}

ClassDistribution exact_distribution(const Graph& g, double p, SamplingModel model) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    auto comps = g.connected_components();

    RawDist folded;
    bool first = true;
    for (const auto& cc : comps) {
        RawDist part = enumerate_component(g.induced(cc), p, model);
        if (first) {
            folded = std::move(part);
            first = false;
        } else {
            folded = convolve(folded, part);
        }
    }
    if (first) {
        // empty graph: single empty observation
        RawClass cls;
        cls.prob = 1.0;
        accumulate(folded, {}, std::move(cls));
    }

    ClassDistribution out;
    out.model = model;
    for (auto& [key, kc] : folded) {
        ObservationClass oc;
        oc.probability = kc.cls.prob;
        oc.invisible = kc.cls.invisible;
        Graph rep;
        std::vector<uint8_t> colors;
        for (auto& [part, part_colors] : kc.cls.parts) {
            rep = disjoint_union(rep, part);
            colors.insert(colors.end(), part_colors.begin(), part_colors.end());
        }
        oc.representative = std::move(rep);
        if (model == SamplingModel::Neighborhood) oc.colors = std::move(colors);
        out.classes.emplace(key, std::move(oc));
    }
    return out;
}

double tv_distance(const ClassDistribution& a, const ClassDistribution& b) {
    if (a.model != b.model)
        throw std::invalid_argument("tv_distance: distributions from different models");
    double l1 = 0.0;
    auto ia = a.classes.begin();
    auto ib = b.classes.begin();
    while (ia != a.classes.end() || ib != b.classes.end()) {
        if (ib == b.classes.end() || (ia != a.classes.end() && ia->first < ib->first)) {
            l1 += ia->second.probability;
            ++ia;
        } else if (ia == a.classes.end() || ib->first < ia->first) {
            l1 += ib->second.probability;
            ++ib;
        } else {
            l1 += std::abs(ia->second.probability - ib->second.probability);
            ++ia;
            ++ib;
        }
    }
    return l1 / 2.0;
}

std::vector<std::pair<double, double>> exact_moments_grid(const Graph& g,
                                                          std::span<const double> ps,
                                                          const EstimatorConfig& cfg) {
    uint32_t n = g.num_vertices();
    if (n > kMaxComponentOrder)
        throw std::overflow_error("exact_moments: graph exceeds enumeration limit");

    std::vector<SampleStats> stats;
    std::vector<uint32_t> popcount(1ull << n, 0);
    stats.reserve(1ull << n);
    std::vector<uint32_t> sampled;
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        sampled.clear();
        for (uint32_t v = 0; v < n; ++v)
            if ((mask >> v) & 1ull) sampled.push_back(v);
        popcount[mask] = static_cast<uint32_t>(sampled.size());
        if (cfg.sampler == SamplerKind::Subgraph) {
            stats.push_back(collect_stats(cfg, make_subgraph_sample(g, sampled)));
        } else {
            stats.push_back(collect_stats(cfg, make_bicolored_sample(g, sampled)));
        }
    }

    std::vector<std::pair<double, double>> out;
    for (double p : ps) {
        double q = 1.0 - p;
        std::vector<long double> pw(n + 1, 1.0L), qw(n + 1, 1.0L);
        for (uint32_t i = 1; i <= n; ++i) {
            pw[i] = pw[i - 1] * p;
            qw[i] = qw[i - 1] * q;
        }
        long double mean = 0.0L, second = 0.0L;
        for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
            long double w = pw[popcount[mask]] * qw[n - popcount[mask]];
            if (w == 0.0L) continue;
            long double v = value_from_stats(cfg, stats[mask], p);
            mean += w * v;
            second += w * v * v;
        }
        out.emplace_back(static_cast<double>(mean), static_cast<double>(second - mean * mean));
    }
    return out;
}

std::pair<double, double> exact_moments(const Graph& g, double p, const EstimatorConfig& cfg) {
    double ps[1] = {p};
    return exact_moments_grid(g, ps, cfg)[0];
}

namespace {

std::string sample_key(const SubgraphSample& s) {
    return observed_class_key(s.induced, nullptr, 0);
}

std::string sample_key(const BicoloredSample& s) {
    Graph observed;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v = 0; v < s.num_observed(); ++v)
        for (uint32_t w : s.adj[v])
            if (v < w) edges.emplace_back(v, w);
    observed = Graph::from_edges(s.num_observed(), edges);
    std::vector<uint8_t> colors(s.black.begin(), s.black.end());
    return observed_class_key(observed, &colors, s.parent_n - s.num_observed());
}

}  // namespace

double mc_tv_estimate(const Graph& a, const Graph& b, double p, SamplingModel model,
                      uint64_t trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("mc_tv_estimate needs at least one trial");
    std::map<std::string, int64_t> diff;
    for (uint64_t side = 0; side < 2; ++side) {
        const Graph& g = side == 0 ? a : b;
        for (uint64_t t = 0; t < trials; ++t) {
            Rng rng(derive_seed(seed, side, t));
            std::string key;
            if (model == SamplingModel::Subgraph)
                key = sample_key(subgraph_sample(g, p, rng));
            else
                key = sample_key(neighborhood_sample(g, p, rng));
            diff[key] += side == 0 ? 1 : -1;
        }
    }
    uint64_t l1 = 0;
    for (const auto& [k, d] : diff) l1 += static_cast<uint64_t>(d < 0 ? -d : d);
    return static_cast<double>(l1) / (2.0 * static_cast<double>(trials));
}

}  // namespace motifscope
