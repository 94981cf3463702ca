#include "motifscope/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "motifscope/canonical.hpp"
#include "motifscope/count.hpp"
#include "motifscope/distribution.hpp"
#include "motifscope/estimators.hpp"
#include "motifscope/experiment.hpp"
#include "motifscope/gadgets.hpp"
#include "motifscope/rational.hpp"

namespace motifscope {

namespace {

Graph bowtie() {
    return Graph::from_edges(5, std::vector<std::pair<uint32_t, uint32_t>>{
                                    {0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph two_k4_shared_vertex() {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < 4; ++u)
        for (uint32_t v = u + 1; v < 4; ++v) edges.emplace_back(u, v);
    for (uint32_t u = 3; u < 7; ++u)
        for (uint32_t v = u + 1; v < 7; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(7, edges);
}

Graph spider_tree() {
    // root 0, children 1..3, each child with two leaves
    std::vector<std::pair<uint32_t, uint32_t>> edges{{0, 1}, {0, 2}, {0, 3}};
    uint32_t next = 4;
    for (uint32_t c = 1; c <= 3; ++c) {
        edges.emplace_back(c, next++);
        edges.emplace_back(c, next++);
    }
    return Graph::from_edges(next, edges);
}

Graph binary_tree7() {
    return Graph::from_edges(7, std::vector<std::pair<uint32_t, uint32_t>>{
                                    {0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
}

Graph wheel5() {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);
        edges.emplace_back(v, 5);
    }
    return Graph::from_edges(6, edges);
}

Graph grid34() {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    auto id = [](uint32_t r, uint32_t c) { return r * 4 + c; };
    for (uint32_t r = 0; r < 3; ++r)
        for (uint32_t c = 0; c < 4; ++c) {
            if (c + 1 < 4) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < 3) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(12, edges);
}

Graph petersen() {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);   // outer cycle
        edges.emplace_back(v, v + 5);         // spokes
        edges.emplace_back(v + 5, (v + 2) % 5 + 5);  // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

}  // namespace

const std::vector<BankGraph>& acceptance_bank() {
    static const std::vector<BankGraph> bank = [] {
        std::vector<BankGraph> b;
        b.push_back({"K2", complete_graph(2), true});
        b.push_back({"P4", path_graph(4), true});
        b.push_back({"P6", path_graph(6), true});
        b.push_back({"P10", path_graph(10), true});
        b.push_back({"S4", star_graph(4), true});
        b.push_back({"S5", star_graph(5), true});
        b.push_back({"spider", spider_tree(), true});
        b.push_back({"btree7", binary_tree7(), true});
        b.push_back({"K4", complete_graph(4), false});
        b.push_back({"K5", complete_graph(5), false});
        b.push_back({"C5", cycle_graph(5), false});
        b.push_back({"diamond", Motif::diamond().graph(), false});
        b.push_back({"paw", Motif::paw().graph(), false});
        b.push_back({"bowtie", bowtie(), false});
        b.push_back({"twoK4", two_k4_shared_vertex(), false});
        b.push_back({"K33", complete_bipartite(3, 3), false});
        b.push_back({"wheel5", wheel5(), false});
        b.push_back({"grid34", grid34(), false});
        b.push_back({"petersen", petersen(), false});
        b.push_back({"er12", gen_erdos_renyi(12, 0.3, 7), false});
        return b;
    }();
    return bank;
}

namespace {

constexpr double kGridPs[4] = {0.1, 0.3, 0.5, 0.7};

struct Probe {
    std::string label;
    EstimatorConfig cfg;
    double truth;
    bool has_bound;
};

std::vector<Probe> probes_for(const BankGraph& bg) {
    std::vector<Probe> probes;
    uint32_t d = std::max(1u, max_degree(bg.g));
    auto add = [&](std::string label, EstimatorConfig cfg, double truth, bool has_bound) {
        cfg.d = d;
        probes.push_back({bg.name + "/" + std::move(label), cfg, truth, has_bound});
    };

    const Motif ht_motifs[] = {Motif::edge(),   Motif::wedge(), Motif::triangle(),
                               Motif::cycle(4), Motif::clique(4), Motif::diamond(),
                               Motif::paw(),    Motif::claw()};
    const char* ht_names[] = {"ht-K2", "ht-P3", "ht-K3", "ht-C4", "ht-K4", "ht-diamond",
                              "ht-paw", "ht-claw"};
    for (size_t i = 0; i < 8; ++i) {
        EstimatorConfig cfg;
        cfg.sampler = SamplerKind::Subgraph;
        cfg.family = EstimatorFamily::Ht;
        cfg.motif = ht_motifs[i];
        add(ht_names[i], cfg, count_induced(ht_motifs[i], bg.g).to_double(), true);
    }

    double e = static_cast<double>(bg.g.num_edges());
    double w = count_wedges(bg.g).to_double();
    double t = count_triangles(bg.g).to_double();

    {
        EstimatorConfig cfg;
        cfg.family = EstimatorFamily::Ht;
        add("ht-nbhd-edges", cfg, e, false);
    }
    {
        EstimatorConfig cfg;
        cfg.family = EstimatorFamily::Linear;
        add("linear-edge", cfg, e, true);
    }
    const Motif lin_motifs[] = {Motif::triangle(), Motif::clique(4), Motif::wedge()};
    const char* lin_names[] = {"linear-K3", "linear-K4", "linear-P3"};
    for (size_t i = 0; i < 3; ++i) {
        EstimatorConfig cfg;
        cfg.family = EstimatorFamily::Linear;
        cfg.motif = lin_motifs[i];
        add(lin_names[i], cfg, count_induced(lin_motifs[i], bg.g).to_double(), true);
    }
    {
        EstimatorConfig cfg;
        cfg.family = EstimatorFamily::Adaptive;
        add("adaptive-edge", cfg, e, false);
    }
    if (bg.forest) {
        EstimatorConfig fw;
        fw.family = EstimatorFamily::ForestWedge;
        fw.motif = Motif::wedge();
        add("forest-wedge", fw, w, true);
        EstimatorConfig fwd;
        fwd.family = EstimatorFamily::ForestWedgeDegree;
        fwd.motif = Motif::wedge();
        add("forest-wedge-degree", fwd, w, false);
    }
    {
        EstimatorConfig cfg;
        cfg.family = EstimatorFamily::PlanarTriangle;
        cfg.motif = Motif::triangle();
        add("planar-triangle", cfg, t, false);
    }
    {
        EstimatorConfig cfg;
        cfg.family = EstimatorFamily::NoninducedC4;
        cfg.motif = Motif::cycle(4);
        add("noninduced-c4", cfg, count_subgraph(Motif::cycle(4), bg.g).to_double(), false);
    }
    return probes;
}

struct MomentRow {
    Probe probe;
    uint32_t d;
    // mean/variance at each grid p
    std::pair<double, double> moments[4];
};

std::vector<MomentRow> compute_moment_table() {
    std::vector<std::pair<const BankGraph*, Probe>> work;
    for (const auto& bg : acceptance_bank())
        for (auto& probe : probes_for(bg)) work.emplace_back(&bg, probe);

    std::vector<MomentRow> rows(work.size());
    parallel_for_index(work.size(), [&](uint64_t i) {
        const auto& [bg, probe] = work[i];
        MomentRow row{probe, std::max(1u, max_degree(bg->g)), {}};
        auto grid = exact_moments_grid(bg->g, kGridPs, probe.cfg);
        for (int j = 0; j < 4; ++j) row.moments[j] = grid[j];
        rows[i] = std::move(row);
    });
    return rows;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

CriterionResult timed(int id, const std::string& name,
                      const std::function<std::pair<bool, std::string>()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        auto [p, d] = body();
        pass = p;
        detail = d;
    } catch (const std::exception& ex) {
        pass = false;
        detail = std::string("exception: ") + ex.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {id, name, pass, detail, dt};
}

// ---- criterion 1 & 2 -------------------------------------------------------

std::pair<bool, std::string> check_unbiasedness(const std::vector<MomentRow>& table) {
    size_t checks = 0;
    for (const auto& row : table)
        for (int j = 0; j < 4; ++j) {
            double mean = row.moments[j].first;
            double tol = 1e-9 * std::max(1.0, std::abs(row.probe.truth));
            ++checks;
            if (std::abs(mean - row.probe.truth) > tol)
                return {false, row.probe.label + " at p=" + fmt_double(kGridPs[j]) + ": mean " +
                                   fmt_double(mean) + " vs truth " + fmt_double(row.probe.truth)};
        }
    return {true, std::to_string(checks) + " exact-mean checks"};
}

std::pair<bool, std::string> check_variance_domination(const std::vector<MomentRow>& table) {
    size_t checks = 0;
    for (const auto& row : table) {
        if (!row.probe.has_bound) continue;
        for (int j = 0; j < 4; ++j) {
            double var = row.moments[j].second;
            double bound = variance_bound(row.probe.cfg, row.probe.truth, row.d, kGridPs[j]);
            ++checks;
            if (var > bound + 1e-9)
                return {false, row.probe.label + " at p=" + fmt_double(kGridPs[j]) + ": var " +
                                   fmt_double(var) + " > bound " + fmt_double(bound)};
        }
    }
    return {true, std::to_string(checks) + " variance/bound comparisons"};
}

// ---- criterion 3 -----------------------------------------------------------

double clique_kernel(const std::vector<uint32_t>& clique, uint64_t mask, double alpha,
                     double beta) {
    uint32_t black = 0;
    for (uint32_t v : clique) black += (mask >> v) & 1ull;
    uint32_t k = static_cast<uint32_t>(clique.size());
    if (black == k) return beta;
    if (black + 1 == k) return alpha;
    return 0.0;
}

std::pair<bool, std::string> check_covariance_elimination() {
    struct Case {
        Graph g;
        std::vector<uint32_t> t1, t2;
        uint32_t omega;
    };
    std::vector<Case> cases;
    cases.push_back({bowtie(), {0, 1, 2}, {2, 3, 4}, 3});
    cases.push_back({two_k4_shared_vertex(), {0, 1, 2, 3}, {3, 4, 5, 6}, 4});
    for (const auto& c : cases)
        for (double p : {0.5, 0.25}) {
            double q = 1.0 - p;
            double alpha = 1.0 / std::pow(p, c.omega - 1.0);
            double beta = (1.0 - c.omega * q) / std::pow(p, static_cast<double>(c.omega));
            uint32_t n = c.g.num_vertices();
            double e1 = 0.0, e2 = 0.0, e12 = 0.0;
            for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
                uint32_t bits = static_cast<uint32_t>(__builtin_popcountll(mask));
                double prob = std::pow(p, bits) * std::pow(q, n - bits);
                double f1 = clique_kernel(c.t1, mask, alpha, beta);
                double f2 = clique_kernel(c.t2, mask, alpha, beta);
                e1 += prob * f1;
                e2 += prob * f2;
                e12 += prob * f1 * f2;
            }
            double cov = e12 - e1 * e2;
            if (std::abs(cov) > 1e-12)
                return {false, "omega=" + std::to_string(c.omega) + " p=" + fmt_double(p) +
                                   ": cov " + fmt_double(cov)};
        }
    return {true, "covariance of vertex-sharing clique kernels is 0 at the high-ratio weights"};
}

// ---- criterion 4 -----------------------------------------------------------

std::pair<bool, std::string> check_gadgets() {
    auto pairs = builtin_pairs();
    auto find = [&](const std::string& name) -> const GadgetPair& {
        for (const auto& p : pairs)
            if (p.name == name) return p;
        throw std::logic_error("missing builtin pair " + name);
    };

    std::string why;
    const GadgetPair& a1 = find("adhocHH1");
    if (a1.h.num_vertices() != a1.h_prime.num_vertices() ||
        a1.h.num_edges() != a1.h_prime.num_edges())
        return {false, "adhocHH1 vertex/edge counts differ"};
    if (!verify_matching(a1, &why)) return {false, "adhocHH1: " + why};

    const GadgetPair& a2 = find("adhocHH2");
    auto degree_seq = [](const Graph& g) {
        std::vector<uint32_t> d;
        for (uint32_t v = 0; v < g.num_vertices(); ++v) d.push_back(g.degree(v));
        std::sort(d.rbegin(), d.rend());
        return d;
    };
    std::vector<uint32_t> expect{3, 2, 2, 2, 1};
    if (degree_seq(a2.h) != expect || degree_seq(a2.h_prime) != expect)
        return {false, "adhocHH2 degree sequences are not (3,2,2,2,1)"};
    if (!verify_matching(a2, &why)) return {false, "adhocHH2: " + why};

    const GadgetPair& a4 = find("HH-nhbd4");
    if (!verify_matching(a4, &why)) return {false, "HH-nhbd4: " + why};

    // The printed matching construction: the drawn 4-vertex motif with both
    // diagonals, i.e. K4, yields {K4 + 6 K2, 4 K3 + 4 K1}.
    GadgetPair mp = matching_pair(Motif::clique(4));
    const GadgetPair& ref = find("HH-matching-K4");
    if (!is_isomorphic(mp.h, ref.h) || !is_isomorphic(mp.h_prime, ref.h_prime))
        return {false, "matching_pair(K4) does not reproduce the printed pair"};
    if (!verify_matching(mp, &why)) return {false, "matching_pair(K4): " + why};

    // The plain-C4 reading of the same construction must also verify.
    GadgetPair mc4 = matching_pair(Motif::cycle(4));
    if (!verify_matching(mc4, &why)) return {false, "matching_pair(C4): " + why};

    return {true, "adhocHH1, adhocHH2, HH-nhbd4, matching construction all verified"};
}

// ---- criterion 5 -----------------------------------------------------------

std::pair<bool, std::string> check_tv_bounds() {
    auto pairs = builtin_pairs();
    const GadgetPair& a1 = pairs[0];
    const GadgetPair& a2 = pairs[1];

    double m1 = a1.h.num_vertices();
    std::map<double, double> tv1;
    for (double p : {0.05, 0.1, 0.2}) {
        double tv = tv_distance(exact_distribution(a1.h, p, SamplingModel::Subgraph),
                                exact_distribution(a1.h_prime, p, SamplingModel::Subgraph));
        tv1[p] = tv;
        double ceiling = m1 * (m1 - 1) * (m1 - 2) / 6.0 * p * p * p;  // C(4,3) p^3
        if (tv > ceiling)
            return {false, "adhocHH1 TV " + fmt_double(tv) + " above ceiling " +
                               fmt_double(ceiling) + " at p=" + fmt_double(p)};
    }
    for (double p : {0.05, 0.1}) {
        double ratio = tv1[2 * p] / tv1[p];
        if (!(ratio >= 5.5 && ratio <= 10.5))
            return {false, "adhocHH1 TV scaling ratio " + fmt_double(ratio) + " at p=" +
                               fmt_double(p)};
    }

    for (double p : {0.05, 0.1, 0.2}) {
        double tv = tv_distance(exact_distribution(a2.h, p, SamplingModel::Neighborhood),
                                exact_distribution(a2.h_prime, p, SamplingModel::Neighborhood));
        double ceiling = 10.0 * p * p;  // C(5,2) p^2
        if (tv > ceiling)
            return {false, "adhocHH2 TV " + fmt_double(tv) + " above ceiling " +
                               fmt_double(ceiling) + " at p=" + fmt_double(p)};
    }
    return {true, "Lemma ceilings and cubic scaling hold"};
}

// ---- criterion 6 -----------------------------------------------------------

std::pair<bool, std::string> check_moment_sequences() {
    const long long expected_lcm[6] = {2, 6, 12, 60, 60, 420};
    for (uint32_t k = 1; k <= 6; ++k) {
        MomentSequences ms = moment_sequences(k);
        if (ms.lcm != expected_lcm[k - 1])
            return {false, "lcm(1.." + std::to_string(k + 1) + ") = " + std::to_string(ms.lcm)};
        for (uint32_t i = 0; i <= k; ++i) {
            BigInt sa = 0, sb = 0;
            for (uint32_t x = 1; x <= k + 1; ++x) {
                BigInt pw = 1;
                for (uint32_t e = 0; e < i; ++e) pw *= x;
                sa += pw * ms.alpha[x - 1];
                sb += pw * ms.beta[x - 1];
            }
            BigInt want_a = i == 1 ? BigInt(ms.lcm) : BigInt(0);
            BigInt want_b = i == 2 ? BigInt(ms.lcm) * ms.lcm : BigInt(0);
            if (sa != want_a || sb != want_b)
                return {false, "k=" + std::to_string(k) + " moment i=" + std::to_string(i) +
                                   " residual nonzero"};
        }
    }
    return {true, "k=1..6 zero constraints exact, pinned moments hit lcm and lcm^2"};
}

// ---- criterion 7 -----------------------------------------------------------

struct ExperimentCase {
    std::string name;
    Graph parent;
    EstimatorConfig subgraph_cfg;
    EstimatorConfig neighborhood_cfg;
};

std::vector<ExperimentCase> experiment_cases() {
    std::vector<ExperimentCase> cases;
    {
        ExperimentCase c;
        c.name = "edges-er1000-0.005";
        c.parent = gen_erdos_renyi(1000, 0.005, 1001);
        c.subgraph_cfg.sampler = SamplerKind::Subgraph;
        c.subgraph_cfg.family = EstimatorFamily::Ht;
        c.subgraph_cfg.motif = Motif::edge();
        c.neighborhood_cfg.family = EstimatorFamily::Adaptive;
        c.neighborhood_cfg.motif = Motif::edge();
        cases.push_back(std::move(c));
    }
    {
        ExperimentCase c;
        c.name = "triangles-er1000-0.02-sub400";
        Graph big = gen_erdos_renyi(1000, 0.02, 1002);
        std::vector<uint32_t> keep(400);
        for (uint32_t v = 0; v < 400; ++v) keep[v] = v;
        c.parent = big.induced(keep);
        c.subgraph_cfg.sampler = SamplerKind::Subgraph;
        c.subgraph_cfg.family = EstimatorFamily::Ht;
        c.subgraph_cfg.motif = Motif::triangle();
        c.neighborhood_cfg.family = EstimatorFamily::Linear;
        c.neighborhood_cfg.motif = Motif::triangle();
        c.neighborhood_cfg.d = std::max(1u, max_degree(c.parent));
        cases.push_back(std::move(c));
    }
    {
        ExperimentCase c;
        c.name = "wedges-er1000-0.001";
        c.parent = gen_erdos_renyi(1000, 0.001, 1003);
        c.subgraph_cfg.sampler = SamplerKind::Subgraph;
        c.subgraph_cfg.family = EstimatorFamily::Ht;
        c.subgraph_cfg.motif = Motif::wedge();
        c.neighborhood_cfg.family = EstimatorFamily::Linear;
        c.neighborhood_cfg.motif = Motif::wedge();
        c.neighborhood_cfg.d = std::max(1u, max_degree(c.parent));
        cases.push_back(std::move(c));
    }
    return cases;
}

std::pair<bool, std::string> check_experiments() {
    const std::vector<double> grid{0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    auto cases = experiment_cases();
    uint32_t passing_seeds = 0;
    std::string first_failure;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        bool seed_ok = true;
        for (const auto& c : cases) {
            ExperimentConfig sub{c.subgraph_cfg, grid, 10, seed};
            ExperimentConfig nbh{c.neighborhood_cfg, grid, 10, seed * 7919};
            ExperimentResult rs = run_experiment(c.parent, sub);
            ExperimentResult rn = run_experiment(c.parent, nbh);
            for (size_t i = 0; i < grid.size(); ++i) {
                if (grid[i] >= 0.3 - 1e-12 &&
                    !(rn.summary[i].mean_rel_err < rs.summary[i].mean_rel_err)) {
                    seed_ok = false;
                    if (first_failure.empty())
                        first_failure = c.name + " seed " + std::to_string(seed) +
                                        ": neighborhood not below subgraph at p=" +
                                        fmt_double(grid[i]);
                }
            }
            // mean relative error at p = 0.8 must not exceed the one at p = 0.2
            size_t i02 = 0, i08 = 6;
            auto check_decay = [&](const ExperimentResult& r, const char* which) {
                if (r.summary[i08].mean_rel_err > r.summary[i02].mean_rel_err) {
                    seed_ok = false;
                    if (first_failure.empty())
                        first_failure = c.name + " seed " + std::to_string(seed) + " " + which +
                                        ": error at p=0.8 above p=0.2";
                }
            };
            check_decay(rs, "subgraph");
            check_decay(rn, "neighborhood");
        }
        if (seed_ok) ++passing_seeds;
    }
    bool pass = passing_seeds >= 9;
    std::string detail = std::to_string(passing_seeds) + "/10 master seeds satisfy both claims";
    if (!pass && !first_failure.empty()) detail += "; first failure: " + first_failure;
    return {pass, detail};
}

// ---- criterion 8 -----------------------------------------------------------

std::pair<bool, std::string> check_er_triangles() {
    std::string counts;
    for (uint64_t seed = 11; seed <= 15; ++seed) {
        Graph g = gen_erdos_renyi(1000, 0.02, seed);
        uint64_t t = count_triangles(g).to_u64();
        counts += (counts.empty() ? "" : ", ") + std::to_string(t);
        if (t < 1050 || t > 1650)
            return {false, "seed " + std::to_string(seed) + ": t = " + std::to_string(t) +
                               " outside [1050, 1650]"};
    }
    return {true, "triangle counts " + counts + " all within [1050, 1650]"};
}

}  // namespace

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

std::vector<CriterionResult> run_acceptance(std::ostream& log) {
    std::vector<CriterionResult> results;
    auto report = [&](CriterionResult r) {
        char line[512];
        std::snprintf(line, sizeof(line), "[%s] criterion %d: %s (%s) [%.1fs]",
                      r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
                      r.seconds);
        log << line << std::endl;
        results.push_back(std::move(r));
    };

    std::vector<MomentRow> table;
    report(timed(1, "exact unbiasedness over the parent bank", [&] {
        table = compute_moment_table();
        return check_unbiasedness(table);
    }));
    report(timed(2, "variance bounds dominate exact variance",
                 [&] { return check_variance_domination(table); }));
    report(timed(3, "vertex-sharing clique covariance vanishes",
                 [] { return check_covariance_elimination(); }));
    report(timed(4, "gadget pairs verify their matching orders", [] { return check_gadgets(); }));
    report(timed(5, "total-variation ceilings and scaling", [] { return check_tv_bounds(); }));
    report(timed(6, "moment sequences solve exactly", [] { return check_moment_sequences(); }));
    report(timed(7, "sampling experiments reproduce the qualitative claims",
                 [] { return check_experiments(); }));
    report(timed(8, "ER(1000, 0.02) triangle concentration", [] { return check_er_triangles(); }));
    return results;
}

}  // namespace motifscope
