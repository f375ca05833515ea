#include "doctest.h"

#include <cmath>
#include <numbers>

#include "graphcurv/curvature.hpp"
#include "graphcurv/generators.hpp"
#include "graphcurv/spherical.hpp"

using namespace graphcurv;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("every generator output validates") {
    CHECK(validate(make_convex_polygon(3)).empty());
    CHECK(validate(make_convex_polygon(64)).empty());
    CHECK(validate(make_theta_graph(ThetaVariant::pl_minimal)).empty());
    CHECK(validate(make_theta_graph(ThetaVariant::sampled, 64)).empty());
    CHECK(validate(make_suspension_planar(5, 64)).empty());
    CHECK(validate(make_suspension_braided(4, {1, 2})).empty());
    CHECK(validate(make_suspension_braided(5, {1, 3, 2, -4})).empty());
    CHECK(validate(make_meridian_graph(3, 64)).empty());
    CHECK(validate(make_meridian_graph(6, 16)).empty());
    CHECK(validate(make_surgered_figure_eight(10.0, 256)).empty());
    CHECK(validate(make_hopf_gamma_eps(0.1, 96)).empty());
    CHECK(validate(make_hopf_gamma_eps(0.5, 96)).empty());
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS(make_convex_polygon(2));
    CHECK_THROWS(make_suspension_planar(1));
    CHECK_THROWS(make_suspension_braided(3, {3}));   // letter out of range
    CHECK_THROWS(make_suspension_braided(3, {0}));
    CHECK_THROWS(make_meridian_graph(2, 8));
    CHECK_THROWS(make_meridian_graph(3, 1));
    CHECK_THROWS(make_hopf_gamma_eps(0.6));
    CHECK_THROWS(make_hopf_gamma_eps(0.0));
    CHECK_THROWS(make_helix_arc(-1.0, 1.0, 1.0));
}

TEST_CASE("regular polygons have total curvature 2") {
    for (int n : {3, 4, 64}) {
        CurvatureReport r = total_curvature(make_convex_polygon(n));
        CHECK(r.K_total == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(r.tight);
    }
    // Triangle: vertex areas sum to 4*pi (twice the exterior-angle sum).
    CurvatureReport tri = total_curvature(make_convex_polygon(3));
    double sigma = 0.0;
    for (auto& [v, s] : tri.per_vertex) sigma += s;
    CHECK(sigma == doctest::Approx(4 * kPi).epsilon(1e-12));
}

TEST_CASE("theta graph variants") {
    CHECK(total_curvature(make_theta_graph(ThetaVariant::pl_minimal)).K_total ==
          doctest::Approx(3.0).epsilon(1e-12));
    // The inscribed sampling keeps the boundary convex, so K stays exact.
    CHECK(std::abs(total_curvature(make_theta_graph(ThetaVariant::sampled, 64)).K_total - 3.0) <
          0.05);
    CHECK(first_betti(make_theta_graph(ThetaVariant::sampled, 16)) == 2);
}

TEST_CASE("planar suspensions sit just above the tight bound") {
    for (int n : {3, 4, 5}) {
        CurvatureReport r = total_curvature(make_suspension_planar(n, 64));
        CHECK(r.K_total >= n - 1e-12);
        CHECK(std::abs(r.K_total - n) < 0.1);
        CHECK(r.crookedness_mu < 1.1);
    }
}

TEST_CASE("braided suspensions stay below crookedness 2") {
    for (const auto& [n, word] : std::vector<std::pair<int, std::vector<int>>>{
             {3, {}}, {4, {}}, {4, {1, 2}}, {4, {2, 1, 3}}, {5, {1, 3, 2, -4}}}) {
        SpatialGraph g = make_suspension_braided(n, word);
        CHECK(validate(g).empty());
        CurvatureReport r = total_curvature(g);
        CHECK(r.crookedness_mu < 2.0);
        CHECK(r.b1 == n - 1);
    }
}

TEST_CASE("meridian pole fans have zero exterior area") {
    for (int n : {3, 5}) {
        SpatialGraph g = make_meridian_graph(n, 32);
        CHECK(vertex_exterior_area(g, 0) == 0.0);
        CHECK(vertex_exterior_area(g, 1) == 0.0);
        for (const auto& e : g.edges)
            CHECK(edge_total_curvature(e) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("helix arc total curvature approaches the slope formula") {
    for (double m : {1.0, 10.0, 100.0}) {
        Edge e = make_helix_arc(1.0, m, 1.0, 512);
        double target = 2.0 / std::sqrt(1.0 + m * m);
        CHECK(std::abs(edge_total_curvature(e) - target) < 0.01 * target);
    }
    // Degenerate slope: a planar circle turn (open arc, endpoints touch).
    Edge circle = make_helix_arc(1.0, 0.0, 1.0, 256);
    CHECK(std::abs(edge_total_curvature(circle) - 2.0) < 2.2 / 256);
}

TEST_CASE("surgered figure eight crookedness") {
    double prev = 1e9;
    for (double m : {1.0, 10.0, 100.0}) {
        SpatialGraph g = make_surgered_figure_eight(m, 256);
        CurvatureReport r = total_curvature(g);
        CHECK(r.b1 == 1);
        CHECK(r.crookedness_mu > 2.0);  // a knotted curve needs more than 2
        CHECK(r.crookedness_mu < 2.0 + 2.0 / std::sqrt(1.0 + m * m) + 0.35);
        CHECK(r.crookedness_mu < prev);  // excess shrinks with the slope
        prev = r.crookedness_mu;
    }
}

TEST_CASE("hopf family stays within its crookedness budget") {
    double prev = 1e9;
    for (double eps : {0.5, 0.25, 0.1, 0.05}) {
        CurvatureReport r = total_curvature(make_hopf_gamma_eps(eps, 64));
        CHECK(r.crookedness_mu < 1.0 + eps);
        CHECK(r.crookedness_mu < prev);  // monotone toward 1
        prev = r.crookedness_mu;
    }
}

TEST_CASE("sampled families converge under refinement") {
    // Doubling the sampling changes K by at most ~C/m.
    for (int m : {16, 32, 64}) {
        double a = total_curvature(make_suspension_planar(5, m)).K_total;
        double b = total_curvature(make_suspension_planar(5, 2 * m)).K_total;
        CHECK(std::abs(a - b) < 8.0 / m);
        double ha = edge_total_curvature(make_helix_arc(1.0, 1.0, 1.0, m));
        double hb = edge_total_curvature(make_helix_arc(1.0, 1.0, 1.0, 2 * m));
        CHECK(std::abs(ha - hb) < 8.0 / m);
    }
}
