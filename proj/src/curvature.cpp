#include "graphcurv/curvature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "graphcurv/generators.hpp"
#include "graphcurv/spherical.hpp"

namespace graphcurv {

namespace {
constexpr double kPi = std::numbers::pi;
}

double edge_total_curvature(const Edge& e) {
    double turning = 0.0;
    for (int j = 1; j + 1 < static_cast<int>(e.polyline.size()); ++j) {
        Vec3 a = e.polyline[j] - e.polyline[j - 1];
        Vec3 b = e.polyline[j + 1] - e.polyline[j];
        turning += angle_between(a, b);
    }
    return turning / kPi;
}

double vertex_exterior_area(const SpatialGraph& g, VertexId v) {
    return area(positive_region(tangent_fan(g, PointRef::at_vertex(v))));
}

CurvatureReport total_curvature(const SpatialGraph& g) {
    auto bad = validate(g);
    if (!bad.empty())
        throw std::invalid_argument("invalid graph: " + bad.front().rule + " (" +
                                    bad.front().detail + ")");
    CurvatureReport rep;
    rep.chi = euler_characteristic(g);
    rep.b1 = first_betti(g);

    double sigma_sum = 0.0;
    for (const auto& [vid, pos] : g.vertices) {
        double s = vertex_exterior_area(g, vid);
        rep.per_vertex[vid] = s;
        sigma_sum += s;
    }
    double edge_sum = 0.0;
    for (const auto& e : g.edges) {
        double k = edge_total_curvature(e);
        rep.per_edge[e.id] = k;
        edge_sum += k;
    }
    // Joints carry their turning inside K(e); re-expressed as the exterior
    // area of a promoted degree-2 vertex the two bookkeepings coincide, which
    // is exactly the vertex-set independence of the total.
    rep.K_total = sigma_sum / (2.0 * kPi) + edge_sum - rep.chi;
    rep.crookedness_mu = 0.5 * (rep.K_total + rep.chi);
    rep.tight = std::abs(rep.K_total - (1.0 + rep.b1)) <= kTightTol;

    double theta_sum = 0.0;
    for (const auto& [vid, pos] : g.vertices) {
        const auto dirs = tangent_fan(g, PointRef::at_vertex(vid)).directions;
        for (size_t i = 0; i < dirs.size(); ++i)
            for (size_t j = i + 1; j < dirs.size(); ++j)
                theta_sum += (kPi - angle_between(dirs[i], dirs[j])) / kPi;
    }
    rep.taniyama_T1_over_pi = edge_sum + theta_sum;
    return rep;
}

std::pair<double, double> convex_arc_curvature_check(const std::vector<Point3>& arc,
                                                     const std::array<Point3, 2>& chord) {
    if (arc.size() < 2) throw std::invalid_argument("arc needs at least two points");
    double tol = 1e-9;
    bool fwd = dist(chord[0], arc.front()) <= tol && dist(chord[1], arc.back()) <= tol;
    bool rev = dist(chord[1], arc.front()) <= tol && dist(chord[0], arc.back()) <= tol;
    if (!fwd && !rev) throw std::invalid_argument("closing segment does not match arc endpoints");
    if (dist(arc.front(), arc.back()) <= tol)
        throw std::invalid_argument("arc endpoints must be distinct");

    // Close the arc with the chord and demand a convex plane curve: consistent
    // turning sign about a common normal, total turning 2*pi.
    std::vector<Vec3> dirs;
    for (size_t i = 0; i + 1 < arc.size(); ++i) {
        Vec3 d = arc[i + 1] - arc[i];
        if (norm(d) > 0) dirs.push_back(normalized(d));
    }
    dirs.push_back(normalized(arc.front() - arc.back()));  // chord, closing up

    Edge pseudo;
    pseudo.polyline = arc;
    double lhs = kPi * edge_total_curvature(pseudo);

    Vec3 normal{0, 0, 0};
    for (size_t i = 0; i < dirs.size(); ++i) normal += cross(dirs[i], dirs[(i + 1) % dirs.size()]);
    if (norm(normal) < 1e-12) {
        // Collinear configuration: fine iff the arc is itself straight.
        if (lhs > 1e-12) throw std::invalid_argument("arc is collinear-degenerate");
        return {0.0, 0.0};
    }
    normal = normalized(normal);
    for (const Vec3& d : dirs)
        if (std::abs(dot(d, normal)) > 1e-7)
            throw std::invalid_argument("arc is not planar");

    double total = 0.0;
    for (size_t i = 0; i < dirs.size(); ++i) {
        const Vec3& a = dirs[i];
        const Vec3& b = dirs[(i + 1) % dirs.size()];
        double turn = angle_between(a, b);
        if (dot(cross(a, b), normal) < -1e-9 * std::max(turn, 1e-30) && turn > 1e-12)
            throw std::invalid_argument("arc is not convex (turning sign flips)");
        total += turn;
    }
    if (std::abs(total - 2.0 * kPi) > 1e-6)
        throw std::invalid_argument("closed curve total turning is not 2*pi");

    Vec3 chord_from_start = normalized(arc.back() - arc.front());
    Vec3 t0 = normalized(arc[1] - arc[0]);
    Vec3 t1 = normalized(arc[arc.size() - 2] - arc.back());
    double theta0 = angle_between(t0, chord_from_start);
    double theta1 = angle_between(t1, -chord_from_start);
    return {lhs, theta0 + theta1};
}

std::pair<double, double> meridian_graph_formulas(int n, int m) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("meridian closed forms require odd n >= 3");
    SpatialGraph g = make_meridian_graph(n, m);
    double edge_sum = 0.0;
    for (const auto& e : g.edges) edge_sum += edge_total_curvature(e);
    double K = edge_sum + n - 2;
    double T_over_pi = 1.0 + edge_sum;
    return {K, T_over_pi};
}

}  // namespace graphcurv
