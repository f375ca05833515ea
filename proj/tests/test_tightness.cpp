#include "doctest.h"

#include <cmath>
#include <numbers>

#include "graphcurv/generators.hpp"
#include "graphcurv/tightness.hpp"

#include "fixtures.hpp"

using namespace graphcurv;

namespace {

constexpr double kPi = std::numbers::pi;

// Circle with two parallel vertical chords, sampled; a plain Type C shape.
SpatialGraph circle_two_chords(double x0 = 0.35, int m = 64) {
    SpatialGraph g;
    double y0 = std::sqrt(1 - x0 * x0);
    double a = std::atan2(y0, x0);
    g.vertices[0] = {x0, y0, 0};
    g.vertices[1] = {x0, -y0, 0};
    g.vertices[2] = {-x0, y0, 0};
    g.vertices[3] = {-x0, -y0, 0};
    auto arc = [&](EdgeId id, VertexId va, VertexId vb, double a0, double a1, int steps) {
        Edge e;
        e.id = id;
        e.ends = {va, vb};
        for (int i = 0; i <= steps; ++i) {
            double t = a0 + (a1 - a0) * i / steps;
            e.polyline.push_back({std::cos(t), std::sin(t), 0});
        }
        e.polyline.front() = g.vertices[va];
        e.polyline.back() = g.vertices[vb];
        return e;
    };
    int top = std::max(2, m / 8), side = std::max(2, m / 2);
    g.edges.push_back(arc(0, 2, 0, kPi - a, a, top));                 // top arc
    g.edges.push_back(arc(1, 0, 1, a, -a, side));                     // right arc
    g.edges.push_back(arc(2, 1, 3, -a, a - kPi, top));                // bottom arc
    g.edges.push_back(arc(3, 3, 2, kPi + a, kPi - a, side));          // left arc
    g.edges.push_back(fixtures::straight_edge(4, 0, 1, g.vertices[0], g.vertices[1]));
    g.edges.push_back(fixtures::straight_edge(5, 2, 3, g.vertices[2], g.vertices[3]));
    return g;
}

}  // namespace

TEST_CASE("tpp probes pass on tight graphs and fail on the dart") {
    TppResult sq = tpp_probe(fixtures::unit_square(), 1000, 1);
    CHECK(sq.failed == 0);
    CHECK(sq.passed == 1000);

    TppResult cube = tpp_probe(fixtures::cube_skeleton(), 1000, 1);
    CHECK(cube.failed == 0);

    TppResult dart = tpp_probe(fixtures::dart(), 1000, 1);
    CHECK(dart.failed > 0);
    REQUIRE(!dart.counterexamples.empty());
    CHECK(dart.counterexamples.front().components >= 2);
}

TEST_CASE("tpp probing is deterministic and thread-count independent") {
    SpatialGraph g = fixtures::dart();
    TppResult a = tpp_probe(g, 2000, 9, 1);
    TppResult b = tpp_probe(g, 2000, 9, 4);
    CHECK(a.failed == b.failed);
    CHECK(a.passed == b.passed);
}

TEST_CASE("in_convex_hull feasibility") {
    std::vector<Point3> tri{{0, 0, 0}, {2, 0, 0}, {0, 2, 0}};
    CHECK(in_convex_hull({0.5, 0.5, 0}, tri));
    CHECK(!in_convex_hull({1.5, 1.5, 0}, tri));
    CHECK(in_convex_hull({1, 0, 0}, tri));  // on an edge
    // Collinear degenerate set.
    std::vector<Point3> seg{{0, 0, 0}, {2, 2, 2}};
    CHECK(in_convex_hull({1, 1, 1}, seg));
    CHECK(!in_convex_hull({1, 1, 1.5}, seg));
    CHECK(!in_convex_hull({3, 3, 3}, seg));
}

TEST_CASE("type S classification") {
    TypeSResult cube = classify_type_s(fixtures::cube_skeleton());
    REQUIRE(cube.accepted);
    CHECK(cube.evidence.hull_corners.size() == 8);
    CHECK(cube.evidence.hull_edges.size() == 12);
    CHECK(cube.evidence.interior_vertices == 0);

    // Cube plus a subdivided body diagonal: the center vertex sits in the
    // hull of its two opposite-corner neighbors, so the graph stays type S.
    SpatialGraph diag = fixtures::cube_skeleton();
    diag.vertices[8] = {0.5, 0.5, 0.5};
    diag.edges.push_back(fixtures::straight_edge(12, 0, 8, diag.vertices[0], diag.vertices[8]));
    diag.edges.push_back(fixtures::straight_edge(13, 8, 7, diag.vertices[8], diag.vertices[7]));
    TypeSResult with_diag = classify_type_s(diag);
    CHECK(with_diag.accepted);
    CHECK(total_curvature(diag).tight);

    // Center joined to two adjacent corners instead: not in their hull.
    SpatialGraph bad = fixtures::cube_skeleton();
    bad.vertices[8] = {0.5, 0.5, 0.5};
    bad.edges.push_back(fixtures::straight_edge(12, 0, 8, bad.vertices[0], bad.vertices[8]));
    bad.edges.push_back(fixtures::straight_edge(13, 8, 1, bad.vertices[8], bad.vertices[1]));
    TypeSResult r = classify_type_s(bad);
    CHECK(!r.accepted);

    // Planar triangle with an interior vertex joined to all corners.
    SpatialGraph tri;
    tri.vertices[0] = {0, 0, 0};
    tri.vertices[1] = {3, 0, 0};
    tri.vertices[2] = {0, 3, 0};
    tri.vertices[3] = {0.8, 0.8, 0};
    tri.edges.push_back(fixtures::straight_edge(0, 0, 1, tri.vertices[0], tri.vertices[1]));
    tri.edges.push_back(fixtures::straight_edge(1, 1, 2, tri.vertices[1], tri.vertices[2]));
    tri.edges.push_back(fixtures::straight_edge(2, 2, 0, tri.vertices[2], tri.vertices[0]));
    for (int k = 0; k < 3; ++k)
        tri.edges.push_back(
            fixtures::straight_edge(3 + k, 3, k, tri.vertices[3], tri.vertices[k]));
    TypeSResult planar = classify_type_s(tri);
    CHECK(planar.accepted);
    CHECK(planar.evidence.interior_vertices == 1);

    // The dart's hull edge 1-2... the reflex vertex breaks the covering.
    CHECK(!classify_type_s(fixtures::dart()).accepted);

    // Curved input is rejected outright.
    CHECK(!classify_type_s(make_theta_graph(ThetaVariant::sampled, 16)).accepted);
}

TEST_CASE("type C classification") {
    TypeCResult theta = classify_type_c(make_theta_graph(ThetaVariant::sampled, 64));
    REQUIRE(theta.accepted);
    CHECK(theta.evidence.face_count == 2);
    CHECK(theta.evidence.convex_faces == 2);
    CHECK(theta.evidence.boundary_cycle.size() == 2);

    TypeCResult chords = classify_type_c(circle_two_chords());
    REQUIRE(chords.accepted);
    CHECK(chords.evidence.face_count == 3);

    // A zigzag interior path violates the straight-chord condition.
    SpatialGraph bad = circle_two_chords();
    bad.edges[4].polyline = {bad.vertices[0], {0.42, 0, 0}, bad.vertices[1]};
    TypeCResult r = classify_type_c(bad);
    CHECK(!r.accepted);

    // All-straight input is rejected (type S territory).
    CHECK(!classify_type_c(fixtures::unit_square()).accepted);
    // Non-planar curved input is rejected.
    CHECK(!classify_type_c(make_surgered_figure_eight(10.0, 128)).accepted);
}

TEST_CASE("verdict combines formula, probes, and classification") {
    TightnessVerdict sq = verdict(fixtures::unit_square(), 500, 3);
    CHECK(sq.tight_by_formula);
    CHECK(sq.classification == TightClass::TypeS);
    CHECK(sq.tpp_passed == sq.tpp_total);

    TightnessVerdict th = verdict(make_theta_graph(ThetaVariant::sampled, 48), 500, 3);
    CHECK(th.tight_by_formula);
    CHECK(th.classification == TightClass::TypeC);

    TightnessVerdict dart = verdict(fixtures::dart(), 1000, 3);
    CHECK(!dart.tight_by_formula);
    CHECK(dart.classification == TightClass::NotTight);
    CHECK(dart.tpp_passed < dart.tpp_total);

    TightnessVerdict knot = verdict(make_surgered_figure_eight(10.0, 128), 500, 3);
    CHECK(!knot.tight_by_formula);
    CHECK(knot.classification == TightClass::NotTight);
}

TEST_CASE("formula tightness matches probe behavior across the catalog") {
    for (const SpatialGraph& g : {fixtures::unit_square(), fixtures::cube_skeleton(),
                                  fixtures::dart(), make_theta_graph(ThetaVariant::pl_minimal),
                                  circle_two_chords(), make_suspension_planar(4, 32),
                                  make_hopf_gamma_eps(0.25, 48)}) {
        TightnessVerdict v = verdict(g, 2000, 7);
        if (v.tight_by_formula) {
            CHECK(v.tpp_passed == v.tpp_total);
            CHECK((v.classification == TightClass::TypeS ||
                   v.classification == TightClass::TypeC));
        } else {
            CHECK(v.classification == TightClass::NotTight);
        }
        // A probe failure always implies the formula is strict.
        if (v.tpp_passed != v.tpp_total) CHECK(!v.tight_by_formula);
    }
}

TEST_CASE("verdicts are rigid-motion invariant") {
    auto rot = [](const SpatialGraph& g) {
        SpatialGraph out = g;
        auto R = [](const Point3& p) {
            double c = std::cos(0.7), s = std::sin(0.7);
            Point3 q{c * p.x - s * p.y, s * p.x + c * p.y, p.z};
            double c2 = std::cos(0.4), s2 = std::sin(0.4);
            return Point3{q.x, c2 * q.y - s2 * q.z, s2 * q.y + c2 * q.z} + Point3{3, -1, 2};
        };
        for (auto& [vid, p] : out.vertices) p = R(p);
        for (auto& e : out.edges)
            for (auto& p : e.polyline) p = R(p);
        return out;
    };
    for (const SpatialGraph& g :
         {fixtures::cube_skeleton(), circle_two_chords(), fixtures::dart()}) {
        TightnessVerdict a = verdict(g, 400, 5);
        TightnessVerdict b = verdict(rot(g), 400, 5);
        CHECK(a.classification == b.classification);
        CHECK(a.tight_by_formula == b.tight_by_formula);
    }
}
