#include <doctest.h>

#include <cmath>

#include "motifscope/estimators.hpp"
#include "oracles.hpp"

using namespace motifscope;

TEST_CASE("optimal edge weights") {
    LinearWeights w = edge_linear_weights(0.5, 2);
    CHECK(w.alpha == doctest::Approx(1.6).epsilon(1e-12));
    CHECK(w.beta == doctest::Approx(0.8).epsilon(1e-12));
    for (double p : {0.1, 0.3, 0.5, 0.9})
        for (uint32_t d : {1u, 2u, 5u, 40u}) {
            LinearWeights lw = edge_linear_weights(p, d);
            double q = 1 - p;
            CHECK(2 * p * q * lw.alpha + p * p * lw.beta == doctest::Approx(1.0).epsilon(1e-12));
        }
}

TEST_CASE("general motif weights") {
    SUBCASE("high-ratio branch kills the single-shared-vertex covariance") {
        LinearWeights w = motif_linear_weights(3, 0.5, 4, false);
        CHECK(w.alpha == doctest::Approx(4.0));
        CHECK(w.beta == doctest::Approx(-4.0));
        double c1 = (0.5 / 0.5) * std::pow(1.0 - w.alpha * 0.25, 2);
        CHECK(c1 == doctest::Approx(0.0));
    }
    SUBCASE("low-ratio branch is exactly unbiased by default") {
        for (uint32_t k : {2u, 3u, 4u})
            for (double p : {0.1, 0.2, 0.25}) {
                LinearWeights w = motif_linear_weights(k, p, 4, false);
                double q = 1 - p;
                double lhs = k * std::pow(p, k - 1.0) * q * w.alpha + std::pow(p, double(k)) * w.beta;
                CHECK(lhs == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(w.alpha == doctest::Approx(1.0 / (k * std::pow(p, k - 1.0))));
            }
        // worked case: k = 2, p = 0.5, d = 2 gives alpha = 1 and beta = 2
        LinearWeights w = motif_linear_weights(2, 0.5, 2, false);
        CHECK(w.alpha == doctest::Approx(1.0));
        CHECK(w.beta == doctest::Approx(2.0));
    }
    SUBCASE("asymptotic low-ratio constants miss exact unbiasedness") {
        LinearWeights w = motif_linear_weights(2, 0.5, 2, true);
        double lhs = 2 * 0.5 * 0.5 * w.alpha + 0.25 * w.beta;
        CHECK(lhs == doctest::Approx(1.5));  // q + 1
    }
    SUBCASE("both branches satisfy the constraint at the boundary p = 1/d") {
        for (uint32_t k : {2u, 3u, 4u}) {
            double p = 0.25;  // d = 4
            double q = 1 - p;
            LinearWeights low = motif_linear_weights(k, p, 4, false);
            CHECK(k * std::pow(p, k - 1.0) * q * low.alpha + std::pow(p, double(k)) * low.beta ==
                  doctest::Approx(1.0).epsilon(1e-12));
            LinearWeights high = motif_linear_weights(k, p + 1e-9, 4, false);
            double ph = p + 1e-9, qh = 1 - ph;
            CHECK(k * std::pow(ph, k - 1.0) * qh * high.alpha +
                      std::pow(ph, double(k)) * high.beta ==
                  doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("adaptive kernel values") {
    CHECK(adaptive_f(0.5, 2) == doctest::Approx(1.5));
    CHECK(adaptive_f(0.5, 1) == doctest::Approx(4.0 / 3.0));
    CHECK(adaptive_g(0.5, 1, 1) == doctest::Approx(4.0 / 3.0));
    // unbiasedness identity pq(f(x)+f(y)) + p^2 g(x,y) = 1
    for (double p : {0.2, 0.5, 0.8})
        for (double x : {1.0, 3.0, 10.0})
            for (double y : {1.0, 7.0}) {
                double q = 1 - p;
                CHECK(p * q * (adaptive_f(p, x) + adaptive_f(p, y)) +
                          p * p * adaptive_g(p, x, y) ==
                      doctest::Approx(1.0).epsilon(1e-12));
            }
}

TEST_CASE("estimator values on tiny samples") {
    Graph k2 = complete_graph(2);
    std::vector<uint32_t> one{0};
    BicoloredSample one_black = make_bicolored_sample(k2, one);
    CHECK(linear_edge(one_black, 0.5, 2) == doctest::Approx(1.6));
    CHECK(ht_neighborhood_edges(one_black, 0.5) == doctest::Approx(4.0 / 3.0));

    Graph k3 = complete_graph(3);
    std::vector<uint32_t> all3{0, 1, 2};
    SubgraphSample tri = make_subgraph_sample(k3, all3);
    CHECK(ht_subgraph(Motif::triangle(), tri, 0.5) == doctest::Approx(8.0));
    CHECK(ht_subgraph(Motif::triangle(), tri, 1.0) == doctest::Approx(1.0));

    Graph star = star_graph(3);
    std::vector<uint32_t> root{0};
    BicoloredSample s = make_bicolored_sample(star, root);
    CHECK(forest_wedge_degree(s, 0.5) == doctest::Approx(6.0));

    Graph c4 = cycle_graph(4);
    std::vector<uint32_t> all4{0, 1, 2, 3};
    BicoloredSample c4s = make_bicolored_sample(c4, all4);
    CHECK(noninduced_c4(c4s, 0.3) == doctest::Approx(1.0 / 0.09));
    std::vector<uint32_t> nothing;
    CHECK(noninduced_c4(make_bicolored_sample(c4, nothing), 0.3) == doctest::Approx(0.0));
}

TEST_CASE("planar triangle weights") {
    // alpha = 1/(2qp^2), beta solved from 3 p^2 q alpha + p^3 beta = 1
    for (double p : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        double q = 1 - p;
        double alpha = 1.0 / (2.0 * q * p * p);
        double beta = (1.0 - 3.0 * p * p * q * alpha) / (p * p * p);
        CHECK(3 * p * p * q * alpha + p * p * p * beta == doctest::Approx(1.0).epsilon(1e-12));
        if (p == 0.5) {
            CHECK(alpha == doctest::Approx(4.0));
            CHECK(beta == doctest::Approx(-4.0));
        }
    }
}

TEST_CASE("wedge weight parameterizations") {
    for (double p : {0.2, 0.5, 0.9}) {
        double q = 1 - p;
        WedgeWeights fw = forest_wedge_weights(p);
        CHECK(p * p * q * fw.lambda + 2 * p * p * q * fw.alpha + p * p * p * fw.beta ==
              doctest::Approx(1.0).epsilon(1e-12));
        if (std::abs(4 * p - 3) > 1e-6) {
            WedgeWeights alt = wedge_linear_alt_weights(p);
            CHECK(p * p * q * alt.lambda + 2 * p * p * q * alt.alpha + p * p * p * alt.beta ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    WedgeWeights alt = wedge_linear_alt_weights(0.5);
    CHECK(alt.lambda == doctest::Approx(-4.0));
    CHECK(alt.alpha == doctest::Approx(4.0));
    CHECK(alt.beta == doctest::Approx(4.0));
    CHECK_THROWS_AS(wedge_linear_alt_weights(0.75), std::invalid_argument);
}

TEST_CASE("linear edge with HT weights reproduces the HT estimator") {
    for (uint64_t trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(10, 0.4, 300 + trial);
        for (double p : {0.2, 0.5, 0.8}) {
            Rng rng(trial);
            BicoloredSample s = neighborhood_sample(g, p, rng);
            double tau = p * p + 2 * p * (1 - p);
            LinearWeights ht{1.0 / tau, 1.0 / tau};
            CHECK(linear_edge(s, p, 3, ht) ==
                  doctest::Approx(ht_neighborhood_edges(s, p)).epsilon(1e-12));
        }
    }
}

TEST_CASE("variance bounds, pinned values") {
    EstimatorConfig lin;
    lin.family = EstimatorFamily::Linear;
    lin.motif = Motif::edge();
    CHECK(variance_bound(lin, 1.0, 1, 0.5) == doctest::Approx(0.5));

    EstimatorConfig lm;
    lm.family = EstimatorFamily::Linear;
    lm.motif = Motif::triangle();
    // k^3 2^{k+1} min(d/p^{k-1}, d^{k-2}/p^2) = 27*16*min(8, 8) = 3456
    CHECK(variance_bound(lm, 1.0, 2, 0.5) == doctest::Approx(3456.0));

    EstimatorConfig ht;
    ht.sampler = SamplerKind::Subgraph;
    ht.family = EstimatorFamily::Ht;
    ht.motif = Motif::edge();
    CHECK(variance_bound(ht, 1.0, 1, 1.0) == doctest::Approx(8.0));  // k 2^k max(1, d^{k-1})

    EstimatorConfig fw;
    fw.family = EstimatorFamily::ForestWedge;
    fw.motif = Motif::wedge();
    CHECK(variance_bound(fw, 3.0, 2, 0.5) == doctest::Approx(16.0 * 12.0));

    EstimatorConfig ad;
    ad.family = EstimatorFamily::Adaptive;
    CHECK_THROWS_AS(variance_bound(ad, 1.0, 1, 0.5), std::invalid_argument);
}

TEST_CASE("config validation") {
    EstimatorConfig cfg;
    cfg.family = EstimatorFamily::Adaptive;
    cfg.p = 1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.p = 0.5;
    CHECK_NOTHROW(cfg.validate());

    EstimatorConfig lin;
    lin.family = EstimatorFamily::Linear;
    lin.d = 0;
    CHECK_THROWS_AS(lin.validate(), std::invalid_argument);

    EstimatorConfig alt;
    alt.family = EstimatorFamily::WedgeLinearAlt;
    alt.motif = Motif::wedge();
    alt.p = 0.7500001;
    CHECK_THROWS_AS(alt.validate(), std::invalid_argument);
}
