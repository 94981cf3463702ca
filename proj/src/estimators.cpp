#include "motifscope/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace motifscope {

const char* family_name(EstimatorFamily f) {
    switch (f) {
        case EstimatorFamily::Ht: return "ht";
        case EstimatorFamily::Linear: return "linear";
        case EstimatorFamily::Adaptive: return "adaptive";
        case EstimatorFamily::ForestWedge: return "forest-wedge";
        case EstimatorFamily::WedgeLinearAlt: return "wedge-linear-alt";
        case EstimatorFamily::ForestWedgeDegree: return "forest-wedge-degree";
        case EstimatorFamily::PlanarTriangle: return "planar-triangle";
        case EstimatorFamily::NoninducedC4: return "noninduced-c4";
    }
    return "?";
}

void EstimatorConfig::validate() const {
    bool needs_open_interval =
        family == EstimatorFamily::Adaptive || family == EstimatorFamily::ForestWedge ||
        family == EstimatorFamily::WedgeLinearAlt || family == EstimatorFamily::PlanarTriangle;
    if (needs_open_interval) {
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("sampling ratio must lie in (0, 1) for this family");
    } else if (!(p > 0.0 && p <= 1.0)) {
        throw std::invalid_argument("sampling ratio must lie in (0, 1]");
    }
    if (family == EstimatorFamily::Linear && d < 1)
        throw std::invalid_argument("linear estimators need a degree bound d >= 1");
    if (family == EstimatorFamily::WedgeLinearAlt && std::abs(4.0 * p - 3.0) < 1e-6)
        throw std::invalid_argument("wedge-linear-alt weights are singular at p = 3/4");
    if (sampler == SamplerKind::Subgraph && family != EstimatorFamily::Ht)
        throw std::invalid_argument("only the HT estimator applies to subgraph samples");
    if (sampler == SamplerKind::Neighborhood && family == EstimatorFamily::Ht &&
        !(motif == Motif::edge()))
        throw std::invalid_argument("the neighborhood HT estimator covers edges only");
}

LinearWeights edge_linear_weights(double p, uint32_t d) {
    double dd = static_cast<double>(d);
    double denom = p * (2.0 + (dd - 1.0) * p);
    return {(1.0 + dd * p) / denom, (1.0 - dd * (1.0 - 2.0 * p)) / denom};
}

LinearWeights motif_linear_weights(uint32_t k, double p, uint32_t d, bool asymptotic) {
    double q = 1.0 - p;
    double pk1 = std::pow(p, static_cast<double>(k) - 1.0);
    double pk = pk1 * p;
    if (p > 1.0 / static_cast<double>(d)) {
        return {1.0 / pk1, (1.0 - k * q) / pk};
    }
    double alpha = 1.0 / (k * pk1);
    double beta = asymptotic ? 1.0 / pk : (1.0 - k * pk1 * q * alpha) / pk;
    return {alpha, beta};
}

WedgeWeights forest_wedge_weights(double p) {
    double q = 1.0 - p;
    return {1.0 / (p * p), 1.0 / (2.0 * p * q), 0.0};
}

WedgeWeights wedge_linear_alt_weights(double p) {
    if (std::abs(4.0 * p - 3.0) < 1e-6)
        throw std::invalid_argument("wedge-linear-alt weights are singular at p = 3/4");
    double p2 = p * p, p3 = p2 * p;
    return {(5.0 - 8.0 * p) / (p2 * (4.0 * p - 3.0)), 1.0 / p2,
            (3.0 * p - 2.0) / (p3 * (4.0 * p - 3.0))};
}

double ht_subgraph(const Motif& h, const SubgraphSample& s, double p) {
    return count_induced(h, s.induced).to_double() / std::pow(p, h.order());
}

double ht_neighborhood_edges(const BicoloredSample& s, double p) {
    double q = 1.0 - p;
    double tau = p * p + 2.0 * p * q;
    return static_cast<double>(s.num_observed_edges()) / tau;
}

namespace {

std::pair<uint64_t, uint64_t> edge_color_counts(const BicoloredSample& s) {
    uint64_t one_black = 0, two_black = 0;
    for (uint32_t v = 0; v < s.num_observed(); ++v)
        for (uint32_t w : s.adj[v]) {
            if (w <= v) continue;
            uint32_t blacks = s.is_black(v) + s.is_black(w);
            if (blacks == 1)
                ++one_black;
            else
                ++two_black;
        }
    return {one_black, two_black};
}

}  // namespace

double linear_edge(const BicoloredSample& s, double p, uint32_t d,
                   const std::optional<LinearWeights>& override_w) {
    LinearWeights w = override_w ? *override_w : edge_linear_weights(p, d);
    auto [one_black, two_black] = edge_color_counts(s);
    return w.alpha * static_cast<double>(one_black) + w.beta * static_cast<double>(two_black);
}

double linear_motif(const Motif& h, const BicoloredSample& s, double p, uint32_t d,
                    bool asymptotic, const std::optional<LinearWeights>& override_w) {
    LinearWeights w = override_w ? *override_w : motif_linear_weights(h.order(), p, d, asymptotic);
    ObservedMotifCounts c = count_observed_motif(h, s);
    return w.alpha * c.one_white.to_double() + w.beta * c.full_black.to_double();
}

double adaptive_f(double p, double x) {
    double q = 1.0 - p;
    return (p * x + q) / (p * (p * x + 2.0 * q));
}

double adaptive_g(double p, double x, double y) {
    double q = 1.0 - p;
    return (1.0 - p * q * (adaptive_f(p, x) + adaptive_f(p, y))) / (p * p);
}

double adaptive_edge(const BicoloredSample& s, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("adaptive_edge requires p in (0, 1)");
    double total = 0.0;
    for (uint32_t v = 0; v < s.num_observed(); ++v)
        for (uint32_t w : s.adj[v]) {
            if (w <= v) continue;
            bool bv = s.is_black(v), bw = s.is_black(w);
            if (bv && bw)
                total += adaptive_g(p, s.degree(v), s.degree(w));
            else if (bv)
                total += adaptive_f(p, s.degree(v));
            else
                total += adaptive_f(p, s.degree(w));
        }
    return total;
}

namespace {

double wedge_combination(const BicoloredSample& s, const WedgeWeights& w) {
    WedgePatternCounts c = wedge_pattern_counts(s);
    return w.lambda * static_cast<double>(c.white_center) +
           w.alpha * static_cast<double>(c.one_white_end) +
           w.beta * static_cast<double>(c.all_black);
}

}  // namespace

double forest_wedge(const BicoloredSample& s, double p,
                    const std::optional<WedgeWeights>& override_w) {
    return wedge_combination(s, override_w ? *override_w : forest_wedge_weights(p));
}

double wedge_linear_alt(const BicoloredSample& s, double p) {
    return wedge_combination(s, wedge_linear_alt_weights(p));
}

double forest_wedge_degree(const BicoloredSample& s, double p) {
    double total = 0.0;
    for (uint32_t v = 0; v < s.num_observed(); ++v)
        if (s.is_black(v)) {
            double deg = s.degree(v);
            total += deg * (deg - 1.0) / 2.0;
        }
    return total / p;
}

double planar_triangle(const BicoloredSample& s, double p) {
    double q = 1.0 - p;
    double alpha = 1.0 / (2.0 * q * p * p);
    double beta = (1.0 - 3.0 * p * p * q * alpha) / (p * p * p);
    ObservedMotifCounts c = count_observed_motif(Motif::triangle(), s);
    return alpha * c.one_white.to_double() + beta * c.full_black.to_double();
}

double noninduced_c4(const BicoloredSample& s, double p) {
    return static_cast<double>(diagonal_black_c4_count(s)) / (2.0 * p * p);
}

SampleStats collect_stats(const EstimatorConfig& cfg, const SubgraphSample& s) {
    if (cfg.sampler != SamplerKind::Subgraph)
        throw std::invalid_argument("config expects a neighborhood sample");
    SampleStats st;
    st.counts.push_back(count_induced(cfg.motif, s.induced).to_double());
    return st;
}

SampleStats collect_stats(const EstimatorConfig& cfg, const BicoloredSample& s) {
    if (cfg.sampler != SamplerKind::Neighborhood)
        throw std::invalid_argument("config expects a subgraph sample");
    SampleStats st;
    switch (cfg.family) {
        case EstimatorFamily::Ht: {
            st.counts.push_back(static_cast<double>(s.num_observed_edges()));
            break;
        }
        case EstimatorFamily::Linear: {
            if (cfg.motif == Motif::edge()) {
                auto [one_black, two_black] = edge_color_counts(s);
                st.counts = {static_cast<double>(one_black), static_cast<double>(two_black)};
            } else {
                ObservedMotifCounts c = count_observed_motif(cfg.motif, s);
                st.counts = {c.one_white.to_double(), c.full_black.to_double()};
            }
            break;
        }
        case EstimatorFamily::Adaptive: {
            std::map<uint32_t, uint64_t> ones;
            std::map<std::pair<uint32_t, uint32_t>, uint64_t> twos;
            for (uint32_t v = 0; v < s.num_observed(); ++v)
                for (uint32_t w : s.adj[v]) {
                    if (w <= v) continue;
                    bool bv = s.is_black(v), bw = s.is_black(w);
                    if (bv && bw) {
                        uint32_t da = s.degree(v), db = s.degree(w);
                        if (da > db) std::swap(da, db);
                        ++twos[{da, db}];
                    } else {
                        ++ones[bv ? s.degree(v) : s.degree(w)];
                    }
                }
            st.one_black_degree_hist.assign(ones.begin(), ones.end());
            st.two_black_degree_hist.assign(twos.begin(), twos.end());
            break;
        }
        case EstimatorFamily::ForestWedge:
        case EstimatorFamily::WedgeLinearAlt: {
            WedgePatternCounts c = wedge_pattern_counts(s);
            st.counts = {static_cast<double>(c.white_center),
                         static_cast<double>(c.one_white_end),
                         static_cast<double>(c.all_black)};
            break;
        }
        case EstimatorFamily::ForestWedgeDegree: {
            double total = 0.0;
            for (uint32_t v = 0; v < s.num_observed(); ++v)
                if (s.is_black(v)) {
                    double deg = s.degree(v);
                    total += deg * (deg - 1.0) / 2.0;
                }
            st.counts.push_back(total);
            break;
        }
        case EstimatorFamily::PlanarTriangle: {
            ObservedMotifCounts c = count_observed_motif(Motif::triangle(), s);
            st.counts = {c.one_white.to_double(), c.full_black.to_double()};
            break;
        }
        case EstimatorFamily::NoninducedC4: {
            st.counts.push_back(static_cast<double>(diagonal_black_c4_count(s)));
            break;
        }
    }
    return st;
}

double value_from_stats(const EstimatorConfig& cfg, const SampleStats& st, double p) {
    double q = 1.0 - p;
    if (cfg.sampler == SamplerKind::Subgraph)
        return st.counts[0] / std::pow(p, cfg.motif.order());
    switch (cfg.family) {
        case EstimatorFamily::Ht:
            return st.counts[0] / (p * p + 2.0 * p * q);
        case EstimatorFamily::Linear: {
            LinearWeights w;
            if (cfg.weight_override && cfg.weight_override->alpha && cfg.weight_override->beta) {
                w = {*cfg.weight_override->alpha, *cfg.weight_override->beta};
            } else if (cfg.motif == Motif::edge()) {
                w = edge_linear_weights(p, cfg.d);
            } else {
                w = motif_linear_weights(cfg.motif.order(), p, cfg.d, cfg.asymptotic_low_weights);
            }
            return w.alpha * st.counts[0] + w.beta * st.counts[1];
        }
        case EstimatorFamily::Adaptive: {
            double total = 0.0;
            for (auto [deg, cnt] : st.one_black_degree_hist)
                total += cnt * adaptive_f(p, deg);
            for (auto [degs, cnt] : st.two_black_degree_hist)
                total += cnt * adaptive_g(p, degs.first, degs.second);
            return total;
        }
        case EstimatorFamily::ForestWedge:
        case EstimatorFamily::WedgeLinearAlt: {
            WedgeWeights w = cfg.family == EstimatorFamily::ForestWedge
                                 ? forest_wedge_weights(p)
                                 : wedge_linear_alt_weights(p);
            if (cfg.weight_override) {
                if (cfg.weight_override->lambda) w.lambda = *cfg.weight_override->lambda;
                if (cfg.weight_override->alpha) w.alpha = *cfg.weight_override->alpha;
                if (cfg.weight_override->beta) w.beta = *cfg.weight_override->beta;
            }
            return w.lambda * st.counts[0] + w.alpha * st.counts[1] + w.beta * st.counts[2];
        }
        case EstimatorFamily::ForestWedgeDegree:
            return st.counts[0] / p;
        case EstimatorFamily::PlanarTriangle: {
            double alpha = 1.0 / (2.0 * q * p * p);
            double beta = (1.0 - 3.0 * p * p * q * alpha) / (p * p * p);
            return alpha * st.counts[0] + beta * st.counts[1];
        }
        case EstimatorFamily::NoninducedC4:
            return st.counts[0] / (2.0 * p * p);
    }
    throw std::logic_error("unhandled estimator family");
}

double evaluate(const EstimatorConfig& cfg, const SubgraphSample& s) {
    return value_from_stats(cfg, collect_stats(cfg, s), cfg.p);
}

double evaluate(const EstimatorConfig& cfg, const BicoloredSample& s) {
    return value_from_stats(cfg, collect_stats(cfg, s), cfg.p);
}

double variance_bound(const EstimatorConfig& cfg, double true_count, uint32_t d, double p) {
    double q = 1.0 - p;
    double dd = static_cast<double>(d);
    uint32_t k = cfg.motif.order();
    if (cfg.sampler == SamplerKind::Subgraph && cfg.family == EstimatorFamily::Ht) {
        double kd = static_cast<double>(k);
        return true_count * kd * std::pow(2.0, kd) *
               std::max(std::pow(p, -kd), std::pow(dd, kd - 1.0) / p);
    }
    if (cfg.family == EstimatorFamily::Linear && cfg.motif == Motif::edge())
        return true_count * (dd + 1.0) * q * q / (p * (2.0 + (dd - 1.0) * p));
    if (cfg.family == EstimatorFamily::Linear) {
        double kd = static_cast<double>(k);
        return true_count * kd * kd * kd * std::pow(2.0, kd + 1.0) *
               std::min(dd / std::pow(p, kd - 1.0), std::pow(dd, kd - 2.0) / (p * p));
    }
    if (cfg.family == EstimatorFamily::ForestWedge)
        return 16.0 * std::max(true_count / (p * p), true_count * dd / p);
    throw std::invalid_argument(std::string("no variance bound for family ") +
                                family_name(cfg.family));
}

}  // namespace motifscope
