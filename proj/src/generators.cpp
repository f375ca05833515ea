#include "graphcurv/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "graphcurv/curvature.hpp"

namespace graphcurv {

namespace {

constexpr double kPi = std::numbers::pi;

Point3 on_circle(double angle, double radius = 1.0) {
    return {radius * std::cos(angle), radius * std::sin(angle), 0.0};
}

// Circle arc in the xy-plane from angle a0 to a1 (signed sweep), endpoints
// exact, interior sampled.
std::vector<Point3> arc_points(double a0, double a1, int segments, double radius = 1.0) {
    std::vector<Point3> pts;
    int n = std::max(segments, 1);
    for (int i = 0; i <= n; ++i) pts.push_back(on_circle(a0 + (a1 - a0) * i / n, radius));
    return pts;
}

Edge make_edge(EdgeId id, VertexId a, VertexId b, std::vector<Point3> polyline) {
    Edge e;
    e.id = id;
    e.ends = {a, b};
    e.polyline = std::move(polyline);
    return e;
}

int arc_segments(int m, double sweep) {
    return std::max(2, static_cast<int>(std::lround(m * std::abs(sweep) / (2.0 * kPi))));
}

}  // namespace

SpatialGraph make_convex_polygon(int n, double radius) {
    if (n < 3) throw std::invalid_argument("polygon needs n >= 3");
    SpatialGraph g;
    for (int k = 0; k < n; ++k) g.vertices[k] = on_circle(2.0 * kPi * k / n, radius);
    for (int k = 0; k < n; ++k)
        g.edges.push_back(make_edge(k, k, (k + 1) % n,
                                    {g.vertices[k], g.vertices[(k + 1) % n]}));
    return g;
}

SpatialGraph make_theta_graph(ThetaVariant variant, int m) {
    SpatialGraph g;
    Point3 top{0, 1, 0}, bot{0, -1, 0};
    g.vertices[0] = top;
    g.vertices[1] = bot;
    if (variant == ThetaVariant::pl_minimal) {
        g.edges.push_back(make_edge(0, 0, 1, {top, {-1, 0, 0}, bot}));
        g.edges.push_back(make_edge(1, 0, 1, {top, {1, 0, 0}, bot}));
        g.edges.push_back(make_edge(2, 0, 1, {top, {0, 0, 0}, bot}));
    } else {
        g.edges.push_back(make_edge(0, 0, 1, arc_points(kPi / 2, 3 * kPi / 2, m)));
        g.edges.push_back(make_edge(1, 0, 1, arc_points(kPi / 2, -kPi / 2, m)));
        g.edges.push_back(make_edge(2, 0, 1, {top, {0, 0, 0}, bot}));
    }
    return g;
}

SpatialGraph make_suspension_planar(int n, int m) {
    if (n < 2) throw std::invalid_argument("suspension needs n >= 2");
    SpatialGraph g;
    Point3 left{-1, 0, 0}, right{1, 0, 0};
    g.vertices[0] = left;
    g.vertices[1] = right;
    g.edges.push_back(make_edge(0, 0, 1, arc_points(kPi, 0.0, m)));      // upper semicircle
    g.edges.push_back(make_edge(1, 0, 1, arc_points(kPi, 2 * kPi, m)));  // lower semicircle
    // Interior arcs: shallow nested parabolic bulges near the diameter.
    for (int j = 2; j < n; ++j) {
        double h = 0.004 * (j - 1);
        std::vector<Point3> pts;
        for (int i = 0; i <= m; ++i) {
            double x = -1.0 + 2.0 * i / m;
            pts.push_back({x, h * (1.0 - x * x), 0.0});
        }
        pts.front() = left;
        pts.back() = right;
        g.edges.push_back(make_edge(j, 0, 1, pts));
    }
    return g;
}

SpatialGraph make_suspension_braided(int n, const std::vector<int>& word, int /*m*/) {
    if (n < 2) throw std::invalid_argument("suspension needs n >= 2");
    for (int letter : word) {
        int i = std::abs(letter);
        if (i < 1 || i >= n) throw std::invalid_argument("braid word letter out of range");
    }
    const double kPoleOffset = 6.0;  // gentle pole cones keep the turning budget low
    const double kBand = 4.0;
    const double kDip = 0.1;

    auto slot_x = [&](int s) { return static_cast<double>(s) - 0.5 * (n - 1); };
    int nc = static_cast<int>(word.size());
    double z_top = nc * kBand;
    Point3 pole_bot{0, 0, -kPoleOffset}, pole_top{0, 0, z_top + kPoleOffset};

    SpatialGraph g;
    g.vertices[0] = pole_bot;
    g.vertices[1] = pole_top;

    std::vector<int> slot_of(n);      // strand -> current slot
    std::vector<std::vector<Point3>> pts(n);
    for (int k = 0; k < n; ++k) {
        slot_of[k] = k;
        pts[k] = {pole_bot, {slot_x(k), 0, 0}};
    }
    for (int b = 0; b < nc; ++b) {
        int letter = word[b];
        int i = std::abs(letter);     // swaps slots i-1 and i
        double z0 = b * kBand, z1 = (b + 1) * kBand;
        for (int k = 0; k < n; ++k) {
            int s = slot_of[k];
            if (s == i - 1 || s == i) {
                int target = s == i - 1 ? i : i - 1;
                // The strand moving rightward takes the dip named by the sign.
                bool moving_right = s == i - 1;
                double midx = 0.5 * (slot_x(s) + slot_x(target));
                double y = moving_right ? (letter > 0 ? kDip : -kDip) : 0.0;
                pts[k].push_back({midx, y, 0.5 * (z0 + z1)});
                pts[k].push_back({slot_x(target), 0, z1});
            } else {
                pts[k].push_back({slot_x(s), 0, z1});
            }
        }
        // Commit the swap.
        int a = -1, c = -1;
        for (int k = 0; k < n; ++k) {
            if (slot_of[k] == i - 1) a = k;
            if (slot_of[k] == i) c = k;
        }
        std::swap(slot_of[a], slot_of[c]);
    }
    for (int k = 0; k < n; ++k) {
        pts[k].push_back(pole_top);
        g.edges.push_back(make_edge(k, 0, 1, pts[k]));
    }
    return g;
}

SpatialGraph make_meridian_graph(int n, int m) {
    if (n < 3) throw std::invalid_argument("meridian graph needs n >= 3");
    if (m < 2) throw std::invalid_argument("meridian graph needs m >= 2");
    SpatialGraph g;
    Point3 north{0, 0, 1}, south{0, 0, -1};
    g.vertices[0] = north;
    g.vertices[1] = south;
    double stub = 0.25 * std::sin(kPi / m);
    for (int k = 0; k < n; ++k) {
        double phi = 2.0 * kPi * k / n;
        double cx = std::cos(phi), cy = std::sin(phi);
        std::vector<Point3> pts;
        pts.push_back(north);
        pts.push_back({stub * cx, stub * cy, 1.0});  // horizontal stub: exact pole tangent
        for (int j = 1; j < m; ++j) {
            double theta = kPi * j / m;
            pts.push_back({std::sin(theta) * cx, std::sin(theta) * cy, std::cos(theta)});
        }
        pts.push_back({stub * cx, stub * cy, -1.0});
        pts.push_back(south);
        g.edges.push_back(make_edge(k, 0, 1, pts));
    }
    return g;
}

Edge make_helix_arc(double a, double b, double turns, int segments) {
    if (a <= 0.0) throw std::invalid_argument("helix radius must be positive");
    if (turns <= 0.0 || segments < 1) throw std::invalid_argument("bad helix sampling");
    double c = std::sqrt(a * a + b * b);
    double total = 2.0 * kPi * c * turns;
    Edge e;
    e.id = 0;
    e.ends = {0, 1};
    for (int i = 0; i <= segments; ++i) {
        double s = total * i / segments;
        e.polyline.push_back({a * std::cos(s / c), a * std::sin(s / c), b * s / c});
    }
    return e;
}

SpatialGraph make_surgered_figure_eight(double m_slope, int helix_segments) {
    if (m_slope <= 0.0) throw std::invalid_argument("slope must be positive");
    const double h = 0.75;            // helix half-height
    const double b = 2.0 * h / (3.0 * kPi);
    const double a = b / m_slope;     // coil radius
    const double zlift = 0.15;        // over/under routing depth for the lobes

    Point3 A_bot{a, -h, 0}, A_top{-a, h, 0};
    Point3 B_bot{0, -1.25, 0}, B_top{0, 1.25, 0};

    SpatialGraph g;
    g.vertices[0] = A_bot;
    g.vertices[1] = A_top;
    g.vertices[2] = B_bot;
    g.vertices[3] = B_top;

    // Helix strand coiling 1.5 turns around the thread.
    std::vector<Point3> helix;
    for (int i = 0; i <= helix_segments; ++i) {
        double psi = 3.0 * kPi * i / helix_segments;
        double y = -h + 2.0 * h * i / helix_segments;
        helix.push_back({a * std::cos(psi), y, a * std::sin(psi)});
    }
    helix.front() = A_bot;
    helix.back() = A_top;
    g.edges.push_back(make_edge(0, 0, 1, helix));

    // Thread: the straight strand the helix winds around.
    g.edges.push_back(make_edge(1, 2, 3, {B_bot, B_top}));

    // Shadow paths (xy) built from straights and arcs, then lifted by a
    // triangular z-profile in arc length so the over/under routing never
    // introduces sharp ramps.
    struct Shadow {
        std::vector<std::pair<double, double>> pts;
        void line_to(double x, double y, int steps = 8) {
            auto [x0, y0] = pts.back();
            for (int i = 1; i <= steps; ++i)
                pts.emplace_back(x0 + (x - x0) * i / steps, y0 + (y - y0) * i / steps);
        }
        void arc(double cx, double cy, double r, double ang0, double ang1, int steps = 24) {
            for (int i = 1; i <= steps; ++i) {
                double t = ang0 + (ang1 - ang0) * i / steps;
                pts.emplace_back(cx + r * std::cos(t), cy + r * std::sin(t));
            }
        }
    };
    auto lift = [&](const Shadow& s, double peak, Point3 from, Point3 to) {
        std::vector<double> len{0.0};
        for (size_t i = 1; i < s.pts.size(); ++i)
            len.push_back(len.back() + std::hypot(s.pts[i].first - s.pts[i - 1].first,
                                                  s.pts[i].second - s.pts[i - 1].second));
        std::vector<Point3> out;
        for (size_t i = 0; i < s.pts.size(); ++i) {
            double f = len[i] / len.back();
            double z = peak * std::min(2 * f, 2 * (1 - f));
            out.push_back({s.pts[i].first, s.pts[i].second, z});
        }
        out.front() = from;
        out.back() = to;
        return out;
    };

    // Over lobe: thread top -> around the left -> helix bottom.
    Shadow sl;
    sl.pts.emplace_back(B_top.x, B_top.y);
    sl.line_to(0, 2.0);
    sl.arc(-0.8, 2.0, 0.8, 0.0, kPi, 48);       // half-turn over the top to the left
    sl.line_to(-1.6, -1.9, 24);
    sl.arc(0.5 * (-1.6 + a), -1.9, 0.5 * (1.6 + a), kPi, 2.0 * kPi, 48);
    sl.line_to(A_bot.x, A_bot.y);
    g.edges.push_back(make_edge(2, 3, 0, lift(sl, zlift, B_top, A_bot)));

    // Under lobe: helix top -> around the right -> thread bottom.
    Shadow sr;
    sr.pts.emplace_back(A_top.x, A_top.y);
    sr.line_to(-a, 1.0);
    sr.arc(-a + 0.4, 1.0, 0.4, kPi, kPi / 2, 16);
    sr.line_to(1.0, 1.4);
    sr.arc(1.0, 1.0, 0.4, kPi / 2, 0.0, 16);
    sr.line_to(1.4, -1.25, 16);
    sr.arc(1.0, -1.25, 0.4, 0.0, -kPi / 2, 16);
    sr.line_to(0.4, -1.65);
    sr.arc(0.4, -1.25, 0.4, -kPi / 2, -kPi, 16);
    g.edges.push_back(make_edge(3, 1, 2, lift(sr, -zlift, A_top, B_bot)));
    return g;
}

SpatialGraph make_hopf_gamma_eps(double eps, int m) {
    if (!(eps > 0.0 && eps <= 0.5)) throw std::invalid_argument("eps must lie in (0, 0.5]");

    // Beak angle theta = pi*eps/4 fixes the chord separation r.
    double theta = kPi * eps / 4.0;
    double r = (2.0 / 3.0) * std::tan(theta);
    double y_a = std::sqrt(1.0 - 0.25 * r * r);
    r = (2.0 / 3.0) * y_a * std::tan(theta);
    y_a = std::sqrt(1.0 - 0.25 * r * r);

    double phi_a = std::atan2(y_a, 0.5 * r);  // circle angle of vertex A
    Point3 A{0.5 * r, y_a, 0}, B{0.5 * r, -y_a, 0};
    Point3 C{-0.5 * r, y_a, 0}, D{-0.5 * r, -y_a, 0};

    SpatialGraph g;
    g.vertices[0] = A;
    g.vertices[1] = B;
    g.vertices[2] = C;
    g.vertices[3] = D;

    auto circle_arc = [&](double a0, double a1) {
        return arc_points(a0, a1, arc_segments(m, a1 - a0));
    };
    auto snap = [&](std::vector<Point3> pts, const Point3& p0, const Point3& p1) {
        pts.front() = p0;
        pts.back() = p1;
        return pts;
    };
    double phi_c = kPi - phi_a;
    g.edges.push_back(make_edge(0, 2, 0, snap(circle_arc(phi_c, phi_a), C, A)));            // top
    g.edges.push_back(make_edge(1, 0, 1, snap(circle_arc(phi_a, -phi_a), A, B)));           // right
    g.edges.push_back(make_edge(2, 1, 3, snap(circle_arc(-phi_a, phi_a - kPi), B, D)));     // bottom
    g.edges.push_back(make_edge(3, 3, 2, snap(circle_arc(kPi + phi_a, kPi - phi_a), D, C))); // left
    g.edges.push_back(make_edge(4, 2, 3, {C, D}));                                          // chord

    // Bent chord A -> V -> B with V pushed past the chord, plane crossings
    // resolved by an under dimple on AV and an over dimple on VB.
    Point3 V{-r, 0, 0};
    auto dimple = [&](std::vector<Point3>& out, const Point3& from, const Point3& to) {
        // Crossing of segment [from,to] with the plane x = -r/2.
        double t = (-0.5 * r - from.x) / (to.x - from.x);
        Point3 P = from + (to - from) * t;
        Vec3 u = normalized(to - from);
        double reach = std::min(dist(P, from), dist(P, to));
        double L = 0.15 * reach;
        double d = 0.5 * L * std::tan(kPi * eps / 16.0);
        double zsign = from.x > to.x ? -1.0 : 1.0;  // toward V: under; away: over
        out.push_back(P - u * L);
        out.push_back({P.x, P.y, zsign * d});
        out.push_back(P + u * L);
    };
    std::vector<Point3> bent;
    bent.push_back(A);
    dimple(bent, A, V);
    bent.push_back(V);
    dimple(bent, V, B);
    bent.push_back(B);
    g.edges.push_back(make_edge(5, 0, 1, bent));

    CurvatureReport rep = total_curvature(g);
    if (!(rep.crookedness_mu < 1.0 + eps))
        throw std::logic_error("crookedness budget exceeded in hopf construction");
    return g;
}

}  // namespace graphcurv
