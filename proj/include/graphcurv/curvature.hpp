#pragma once

#include <map>
#include <utility>

#include "graphcurv/graph.hpp"

namespace graphcurv {

// Tightness tolerance on |K - (1 + b1)| for exact-PL graphs.
inline constexpr double kTightTol = 1e-6;

struct CurvatureReport {
    std::map<EdgeId, double> per_edge;     // K(e), units of pi divided out
    std::map<VertexId, double> per_vertex; // exterior spherical area (steradians)
    int chi = 0;
    int b1 = 0;
    double K_total = 0.0;
    double crookedness_mu = 0.0;
    double taniyama_T1_over_pi = 0.0;
    bool tight = false;
    double tight_tol = kTightTol;
};

// (1/pi) * sum of joint turning angles along the polyline.
double edge_total_curvature(const Edge& e);

// Area of the positive region of the vertex tangent fan.
double vertex_exterior_area(const SpatialGraph& g, VertexId v);

CurvatureReport total_curvature(const SpatialGraph& g);

// For a planar convex open arc and its closing chord: lhs is the arc's total
// turning (radians), rhs the sum of the two end angles against the chord.
// Throws on non-planar or non-convex input.
std::pair<double, double> convex_arc_curvature_check(const std::vector<Point3>& arc,
                                                     const std::array<Point3, 2>& chord);

// Closed forms for the n-meridian pole-to-pole graph, odd n: K and T/pi,
// with the per-edge curvature taken from the sampled meridians.
std::pair<double, double> meridian_graph_formulas(int n, int m = 64);

}  // namespace graphcurv
