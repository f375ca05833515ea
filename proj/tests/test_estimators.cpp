#include "doctest.h"

#include <cmath>

#include "graphcurv/curvature.hpp"
#include "graphcurv/estimators.hpp"
#include "graphcurv/generators.hpp"

#include "fixtures.hpp"

using namespace graphcurv;

TEST_CASE("tight graphs estimate exactly") {
    // Every nondegenerate direction of a tight graph is perfect, so the
    // average has zero variance.
    struct Row {
        SpatialGraph g;
        double K;
    };
    for (const auto& [g, K] : {Row{fixtures::unit_square(), 2.0},
                               Row{make_theta_graph(ThetaVariant::pl_minimal), 3.0},
                               Row{fixtures::cube_skeleton(), 6.0}}) {
        EstimateReport r = estimate(g, 20000, 7);
        CHECK(r.K_hat == doctest::Approx(K).epsilon(1e-12));
        CHECK(r.K_se == 0.0);
        CHECK(std::abs(r.K_hat - K) <= 3 * r.K_se + 1e-9);
        CHECK(r.samples == 20000);
    }
}

TEST_CASE("estimates are seed-deterministic and thread-count independent") {
    SpatialGraph g = make_meridian_graph(5, 24);
    EstimateReport a = estimate(g, 4001, 99, 1);  // odd request rounds up
    EstimateReport b = estimate(g, 4001, 99, 1);
    EstimateReport c = estimate(g, 4001, 99, 2);
    EstimateReport d = estimate(g, 4001, 99, 4);
    CHECK(a.samples == 4002);
    CHECK(a.K_hat == b.K_hat);
    CHECK(a.K_hat == c.K_hat);
    CHECK(a.K_hat == d.K_hat);
    CHECK(a.mu_hat == d.mu_hat);
    CHECK(a.T_hat_over_pi == d.T_hat_over_pi);
    CHECK(a.K_se == d.K_se);
    CHECK(a.rejected_degenerate == d.rejected_degenerate);

    // The meridian pair sum is direction independent, so probe seed
    // sensitivity on a graph with genuine variance.
    SpatialGraph zig = fixtures::zigzag_two_minima();
    CHECK(estimate(zig, 501, 1, 1).K_hat != estimate(zig, 501, 2, 1).K_hat);
}

TEST_CASE("per-sample identity 2 mu = w + chi transfers to the averages") {
    for (const SpatialGraph& g : {fixtures::unit_square(), fixtures::dart(),
                                  fixtures::zigzag_two_minima(),
                                  make_meridian_graph(5, 16),
                                  make_surgered_figure_eight(10.0, 128),
                                  make_hopf_gamma_eps(0.25, 48)}) {
        int chi = euler_characteristic(g);
        EstimateReport r = estimate(g, 4000, 3);
        CHECK(std::abs(2 * r.mu_hat - r.K_hat - chi) < 1e-12);
    }
}

TEST_CASE("estimates agree with closed forms within four standard errors") {
    for (const SpatialGraph& g : {make_meridian_graph(3, 32), make_meridian_graph(5, 32),
                                  make_suspension_planar(5, 32),
                                  make_surgered_figure_eight(10.0, 128)}) {
        CurvatureReport c = total_curvature(g);
        EstimateReport r = estimate(g, 20000, 5);
        CHECK(std::abs(r.K_hat - c.K_total) <= 4 * r.K_se + 1e-9);
        CHECK(r.K_hat >= 1 + c.b1 - 4 * r.K_se - 1e-9);
    }
}

TEST_CASE("gulliver-yamada matches K on 3-regular graphs") {
    SpatialGraph theta = make_theta_graph(ThetaVariant::pl_minimal);
    EstimateReport r = estimate(theta, 20000, 11);
    CHECK(r.T_se > 0.0);
    CHECK(std::abs(r.T_hat_over_pi - 3.0) <= 4 * r.T_se);

    // Straight segment: defect 1 at the low endpoint of every direction.
    SpatialGraph seg;
    seg.vertices[0] = {0, 0, 0};
    seg.vertices[1] = {1, 0.2, 0.3};
    seg.edges.push_back(fixtures::straight_edge(0, 0, 1, seg.vertices[0], seg.vertices[1]));
    CHECK(gulliver_yamada(seg, 2000, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gulliver-yamada diverges from K on the 5-meridian graph") {
    SpatialGraph g = make_meridian_graph(5, 64);
    EstimateReport r = estimate(g, 20000, 13);
    // Odd meridian counts pin the pole defect to 1 per antithetic pair.
    CHECK(r.T_hat_over_pi == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(std::abs(r.K_hat - 8.0) <= 4 * r.K_se + 1e-9);
    CHECK(r.K_hat - r.T_hat_over_pi > 10 * (r.K_se + r.T_se));
}

TEST_CASE("minima histogram") {
    MinimaHistogram sq = minima_histogram(fixtures::unit_square(), 4000, 2);
    CHECK(sq.frequency.at(1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sq.fraction_two_or_more == 0.0);

    MinimaHistogram zig = minima_histogram(fixtures::zigzag_two_minima(), 4000, 2);
    CHECK(zig.fraction_two_or_more > 0.05);
    CHECK(zig.frequency.count(2) == 1);

    MinimaHistogram hopf = minima_histogram(make_hopf_gamma_eps(0.1, 64), 20000, 2);
    CHECK(hopf.mu_hat < 1.1);
    CHECK(hopf.fraction_two_or_more < 0.1);
}

TEST_CASE("weights stay within the structural bound") {
    for (const SpatialGraph& g : {fixtures::unit_square(), fixtures::cube_skeleton(),
                                  make_meridian_graph(5, 16),
                                  make_surgered_figure_eight(10.0, 128)}) {
        EstimateReport r = estimate(g, 4000, 17);
        int joints = static_cast<int>(all_joints(g).size());
        CHECK(r.max_weight_seen <= static_cast<int>(g.vertices.size()) + joints + 1);
    }
}

TEST_CASE("rejection accounting") {
    SpatialGraph g = make_theta_graph(ThetaVariant::sampled, 24);
    EstimateReport r = estimate(g, 20000, 23);
    CHECK(r.rejected_degenerate >= 0);
    CHECK(r.rejected_degenerate < r.samples / 100);  // discriminant band is tiny
}
