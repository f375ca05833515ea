#include "graphcurv/tightness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <thread>

#include "graphcurv/morse.hpp"
#include "graphcurv/spherical.hpp"

namespace graphcurv {

namespace {

constexpr double kPi = std::numbers::pi;

double max_joint_turning(const Edge& e) {
    double t = 0.0;
    for (int j = 1; j + 1 < static_cast<int>(e.polyline.size()); ++j)
        t = std::max(t, angle_between(e.polyline[j] - e.polyline[j - 1],
                                      e.polyline[j + 1] - e.polyline[j]));
    return t;
}

bool edge_is_straight(const Edge& e) { return max_joint_turning(e) <= kStraightAngle; }

// ---- small dense phase-one simplex ----------------------------------------

// Feasibility of A x = b, x >= 0 (rows 4, cols k), via artificial variables.
bool lp_feasible(std::vector<std::array<double, 4>> cols, std::array<double, 4> b, double tol) {
    const int rows = 4;
    const int k = static_cast<int>(cols.size());
    for (int r = 0; r < rows; ++r) {
        if (b[r] < 0.0) {
            b[r] = -b[r];
            for (auto& c : cols) c[r] = -c[r];
        }
    }
    // Tableau columns: k structural + rows artificial; basis starts artificial.
    std::vector<std::vector<double>> T(rows, std::vector<double>(k + rows + 1, 0.0));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < k; ++c) T[r][c] = cols[c][r];
        T[r][k + r] = 1.0;
        T[r][k + rows] = b[r];
    }
    std::vector<int> basis(rows);
    for (int r = 0; r < rows; ++r) basis[r] = k + r;
    // Reduced costs for objective = sum of artificials.
    std::vector<double> z(k + rows, 0.0);
    double obj = 0.0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < k + rows; ++c) z[c] -= T[r][c];
        obj -= T[r][k + rows];
    }
    for (int r = 0; r < rows; ++r) z[k + r] += 1.0;  // artificial cost 1
    for (int it = 0; it < 1000; ++it) {
        int enter = -1;
        for (int c = 0; c < k + rows; ++c)
            if (z[c] < -1e-12) { enter = c; break; }  // Bland's rule
        if (enter < 0) break;
        int leave = -1;
        double best = 0.0;
        for (int r = 0; r < rows; ++r) {
            if (T[r][enter] > 1e-12) {
                double ratio = T[r][k + rows] / T[r][enter];
                if (leave < 0 || ratio < best - 1e-15 ||
                    (ratio < best + 1e-15 && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
        }
        if (leave < 0) break;  // unbounded cannot happen here
        double piv = T[leave][enter];
        for (double& x : T[leave]) x /= piv;
        for (int r = 0; r < rows; ++r) {
            if (r == leave) continue;
            double f = T[r][enter];
            if (f == 0.0) continue;
            for (int c = 0; c <= k + rows; ++c) T[r][c] -= f * T[leave][c];
        }
        double f = z[enter];
        for (int c = 0; c < k + rows; ++c) z[c] -= f * T[leave][c];
        obj -= f * T[leave][k + rows];
        basis[leave] = enter;
    }
    return std::abs(obj) <= tol;
}

// ---- convex hull ------------------------------------------------------------

struct HullOutput {
    std::vector<int> corners;                 // indices into the point list
    std::vector<std::pair<int, int>> edges;   // corner index pairs
};

int affine_rank(const std::vector<Point3>& pts, double tol, Vec3 axes[3]) {
    Point3 c{0, 0, 0};
    for (const auto& p : pts) c += p;
    c = c / static_cast<double>(pts.size());
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    for (const auto& p : pts) {
        Vec3 d = p - c;
        double v[3] = {d.x, d.y, d.z};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] += v[i] * v[j];
    }
    // Jacobi sweeps for a symmetric 3x3.
    double e[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int sweep = 0; sweep < 64; ++sweep) {
        int p = 0, q = 1;
        double off = std::abs(m[0][1]);
        if (std::abs(m[0][2]) > off) { p = 0; q = 2; off = std::abs(m[0][2]); }
        if (std::abs(m[1][2]) > off) { p = 1; q = 2; off = std::abs(m[1][2]); }
        if (off < 1e-30) break;
        double phi = 0.5 * std::atan2(2 * m[p][q], m[q][q] - m[p][p]);
        double co = std::cos(phi), si = std::sin(phi);
        for (int i = 0; i < 3; ++i) {
            double mip = m[i][p], miq = m[i][q];
            m[i][p] = co * mip - si * miq;
            m[i][q] = si * mip + co * miq;
        }
        for (int j = 0; j < 3; ++j) {
            double mpj = m[p][j], mqj = m[q][j];
            m[p][j] = co * mpj - si * mqj;
            m[q][j] = si * mpj + co * mqj;
        }
        for (int i = 0; i < 3; ++i) {
            double eip = e[i][p], eiq = e[i][q];
            e[i][p] = co * eip - si * eiq;
            e[i][q] = si * eip + co * eiq;
        }
    }
    std::array<std::pair<double, int>, 3> ev{{{m[0][0], 0}, {m[1][1], 1}, {m[2][2], 2}}};
    std::sort(ev.begin(), ev.end(), [](auto& a, auto& b) { return a.first > b.first; });
    int rank = 0;
    double scale = std::max(ev[0].first, tol * tol);
    for (int i = 0; i < 3; ++i) {
        int c0 = ev[i].second;
        axes[i] = normalized({e[0][c0], e[1][c0], e[2][c0]});
        if (ev[i].first > 1e-18 * std::max(1.0, scale) + tol * tol) ++rank;
    }
    return rank;
}

HullOutput hull_rank1(const std::vector<Point3>& pts, const Vec3& axis) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
        if (dot(pts[i], axis) < dot(pts[lo], axis)) lo = i;
        if (dot(pts[i], axis) > dot(pts[hi], axis)) hi = i;
    }
    return {{lo, hi}, {{lo, hi}}};
}

HullOutput hull_rank2(const std::vector<Point3>& pts, const Vec3& e1, const Vec3& e2,
                      double tol) {
    // Andrew monotone chain; collinear points are dropped, leaving corners.
    size_t n = pts.size();
    std::vector<int> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
    auto X = [&](int i) { return dot(pts[i], e1); };
    auto Y = [&](int i) { return dot(pts[i], e2); };
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return X(a) < X(b) || (X(a) == X(b) && Y(a) < Y(b));
    });
    auto cr = [&](int o, int a, int b) {
        return (X(a) - X(o)) * (Y(b) - Y(o)) - (Y(a) - Y(o)) * (X(b) - X(o));
    };
    std::vector<int> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cr(h[k - 2], h[k - 1], idx[i]) <= tol) --k;
        h[k++] = idx[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cr(h[k - 2], h[k - 1], idx[i]) <= tol) --k;
        h[k++] = idx[i];
    }
    h.resize(k - 1);
    HullOutput out;
    out.corners = h;
    for (size_t i = 0; i < h.size(); ++i)
        out.edges.emplace_back(h[i], h[(i + 1) % h.size()]);
    return out;
}

struct Tri {
    int a, b, c;
    Vec3 n;  // outward
};

HullOutput hull_rank3(const std::vector<Point3>& pts, double tol) {
    int n = static_cast<int>(pts.size());
    // Initial tetrahedron from extreme points.
    int i0 = 0, i1 = 0;
    for (int i = 0; i < n; ++i) {
        if (pts[i].x < pts[i0].x) i0 = i;
        if (pts[i].x > pts[i1].x) i1 = i;
    }
    int i2 = -1;
    double best = tol;
    for (int i = 0; i < n; ++i) {
        double d = norm(cross(pts[i1] - pts[i0], pts[i] - pts[i0]));
        if (d > best) { best = d; i2 = i; }
    }
    int i3 = -1;
    Vec3 n012 = normalized(cross(pts[i1] - pts[i0], pts[i2] - pts[i0]));
    best = tol;
    for (int i = 0; i < n; ++i) {
        double d = std::abs(dot(pts[i] - pts[i0], n012));
        if (d > best) { best = d; i3 = i; }
    }
    if (i2 < 0 || i3 < 0) throw std::logic_error("rank-3 hull on degenerate input");

    auto face = [&](int a, int b, int c, const Point3& inside) {
        Tri t{a, b, c, normalized(cross(pts[b] - pts[a], pts[c] - pts[a]))};
        if (dot(t.n, inside - pts[a]) > 0) {
            std::swap(t.b, t.c);
            t.n = -t.n;
        }
        return t;
    };
    Point3 inner = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;
    std::vector<Tri> faces{face(i0, i1, i2, inner), face(i0, i1, i3, inner),
                           face(i0, i2, i3, inner), face(i1, i2, i3, inner)};
    for (int i = 0; i < n; ++i) {
        if (i == i0 || i == i1 || i == i2 || i == i3) continue;
        std::vector<char> visible(faces.size(), 0);
        bool any = false;
        for (size_t f = 0; f < faces.size(); ++f) {
            if (dot(pts[i] - pts[faces[f].a], faces[f].n) > tol) {
                visible[f] = 1;
                any = true;
            }
        }
        if (!any) continue;
        // Horizon: directed edges of visible faces whose reverse is not visible.
        std::set<std::pair<int, int>> vis_edges;
        for (size_t f = 0; f < faces.size(); ++f) {
            if (!visible[f]) continue;
            const Tri& t = faces[f];
            vis_edges.insert({t.a, t.b});
            vis_edges.insert({t.b, t.c});
            vis_edges.insert({t.c, t.a});
        }
        std::vector<std::pair<int, int>> horizon;
        for (const auto& e : vis_edges)
            if (!vis_edges.count({e.second, e.first})) horizon.push_back(e);
        std::vector<Tri> next;
        for (size_t f = 0; f < faces.size(); ++f)
            if (!visible[f]) next.push_back(faces[f]);
        for (const auto& e : horizon) {
            Tri t{e.first, e.second, i,
                  normalized(cross(pts[e.second] - pts[e.first], pts[i] - pts[e.first]))};
            if (dot(t.n, inner - pts[t.a]) > 0) {
                std::swap(t.b, t.c);
                t.n = -t.n;
            }
            next.push_back(t);
        }
        faces = std::move(next);
    }
    // Polytope edges: triangulation edges with a genuine dihedral.
    std::map<std::pair<int, int>, std::vector<Vec3>> edge_normals;
    for (const Tri& t : faces) {
        for (auto [a, b] : {std::pair{t.a, t.b}, {t.b, t.c}, {t.c, t.a}}) {
            auto key = std::minmax(a, b);
            edge_normals[{key.first, key.second}].push_back(t.n);
        }
    }
    HullOutput out;
    std::set<int> corner_set;
    for (const auto& [e, ns] : edge_normals) {
        bool real = ns.size() != 2 || angle_between(ns[0], ns[1]) > 1e-7;
        if (real) {
            out.edges.push_back(e);
            corner_set.insert(e.first);
            corner_set.insert(e.second);
        }
    }
    out.corners.assign(corner_set.begin(), corner_set.end());
    return out;
}

}  // namespace

bool in_convex_hull(const Point3& p, const std::vector<Point3>& hull_points, double tol) {
    if (hull_points.empty()) return false;
    // Scale to the cloud size so the simplex tolerance is relative.
    double scale = 0.0;
    for (const auto& q : hull_points) scale = std::max(scale, dist(q, p));
    if (scale == 0.0) return true;
    std::vector<std::array<double, 4>> cols;
    for (const auto& q : hull_points) {
        Vec3 d = (q - p) / scale;
        cols.push_back({d.x, d.y, d.z, 1.0});
    }
    return lp_feasible(std::move(cols), {0.0, 0.0, 0.0, 1.0}, tol);
}

TppResult tpp_probe(const SpatialGraph& g, int n_probes, std::uint64_t seed, int threads) {
    // Height ranges are direction dependent; draw c from the full span of the
    // projection for the drawn direction, expanded by 10%.
    auto heights = [&](const Vec3& u, double& a, double& b) {
        a = 1e300;
        b = -1e300;
        for (const auto& e : g.edges)
            for (const auto& p : e.polyline) {
                a = std::min(a, dot(u, p));
                b = std::max(b, dot(u, p));
            }
    };
    int nt = threads > 0 ? threads
                         : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    nt = std::max(1, std::min(nt, n_probes));
    std::vector<TppResult> parts(nt);
    auto work = [&](int k, int begin, int end) {
        TppResult& r = parts[k];
        for (int i = begin; i < end; ++i) {
            std::mt19937_64 rng = derived_stream(seed, static_cast<std::uint64_t>(i));
            Vec3 u = uniform_unit_vector(rng);
            double a, b;
            heights(u, a, b);
            double pad = 0.1 * std::max(b - a, 1e-9);
            double c = (a - pad) + (b - a + 2 * pad) * uniform01(rng);
            int comp = sublevel_components(g, u, c);
            if (comp <= 1) {
                r.passed += 1;
            } else {
                r.failed += 1;
                if (r.counterexamples.size() < 16) r.counterexamples.push_back({u, c, comp});
            }
        }
    };
    if (nt == 1) {
        work(0, 0, n_probes);
    } else {
        std::vector<std::thread> pool;
        int chunk = (n_probes + nt - 1) / nt;
        for (int k = 0; k < nt; ++k)
            pool.emplace_back(work, k, k * chunk, std::min(n_probes, (k + 1) * chunk));
        for (auto& t : pool) t.join();
    }
    TppResult out;
    for (const auto& p : parts) {
        out.passed += p.passed;
        out.failed += p.failed;
        for (const auto& ce : p.counterexamples)
            if (out.counterexamples.size() < 16) out.counterexamples.push_back(ce);
    }
    return out;
}

TypeSResult classify_type_s(const SpatialGraph& g) {
    for (const auto& e : g.edges)
        if (!edge_is_straight(e)) return {false, "curved edge present (edge " +
                                          std::to_string(e.id) + ")", {}};
    double tol = g.geo_tol();
    std::vector<Point3> pts;
    std::vector<VertexId> ids;
    for (const auto& [vid, p] : g.vertices) {
        ids.push_back(vid);
        pts.push_back(p);
    }
    Vec3 axes[3];
    int rank = affine_rank(pts, tol, axes);
    HullOutput hull;
    if (rank <= 1) {
        hull = hull_rank1(pts, axes[0]);
    } else if (rank == 2) {
        hull = hull_rank2(pts, axes[0], axes[1], tol);
    } else {
        hull = hull_rank3(pts, tol);
    }

    TypeSEvidence ev;
    for (int c : hull.corners) ev.hull_corners.push_back(ids[c]);
    std::sort(ev.hull_corners.begin(), ev.hull_corners.end());

    // Hull 1-skeleton must be covered by straight graph edges through the
    // vertices lying on it.
    std::map<std::pair<VertexId, VertexId>, bool> has_edge;
    for (const auto& e : g.edges) {
        auto k = std::minmax(e.ends[0], e.ends[1]);
        has_edge[{k.first, k.second}] = true;
    }
    for (auto [ca, cb] : hull.edges) {
        const Point3& P = pts[ca];
        const Point3& Q = pts[cb];
        std::vector<std::pair<double, VertexId>> on_seg;
        for (size_t i = 0; i < pts.size(); ++i) {
            if (point_segment_distance(pts[i], P, Q) <= tol)
                on_seg.emplace_back(dot(pts[i] - P, Q - P), ids[i]);
        }
        std::sort(on_seg.begin(), on_seg.end());
        for (size_t i = 0; i + 1 < on_seg.size(); ++i) {
            auto k = std::minmax(on_seg[i].second, on_seg[i + 1].second);
            if (!has_edge.count({k.first, k.second}))
                return {false,
                        "hull edge " + std::to_string(ids[ca]) + "-" + std::to_string(ids[cb]) +
                            " not covered by graph edges",
                        {}};
        }
        ev.hull_edges.emplace_back(ids[ca], ids[cb]);
    }

    // Every non-corner vertex must lie in the convex hull of its neighbors.
    std::set<VertexId> corner_ids(ev.hull_corners.begin(), ev.hull_corners.end());
    for (const auto& [vid, p] : g.vertices) {
        if (corner_ids.count(vid)) continue;
        ev.interior_vertices += 1;
        std::vector<Point3> nbrs;
        for (const auto& e : g.edges) {
            if (e.ends[0] == vid) nbrs.push_back(g.vertex_pos(e.ends[1]));
            if (e.ends[1] == vid) nbrs.push_back(g.vertex_pos(e.ends[0]));
        }
        if (!in_convex_hull(p, nbrs, 1e-9))
            return {false,
                    "vertex " + std::to_string(vid) + " outside the hull of its neighbors",
                    {}};
    }
    return {true, "", ev};
}

TypeCResult classify_type_c(const SpatialGraph& g) {
    bool any_curved = false;
    for (const auto& e : g.edges) any_curved |= !edge_is_straight(e);
    if (!any_curved) return {false, "all edges straight", {}};

    double tol = g.geo_tol();
    std::vector<Point3> all;
    for (const auto& e : g.edges)
        for (const auto& p : e.polyline) all.push_back(p);
    Vec3 axes[3];
    int rank = affine_rank(all, tol, axes);
    if (rank > 2) return {false, "graph is not planar", {}};
    Vec3 normal = axes[2];
    Point3 origin = all.front();
    for (const auto& p : all)
        if (std::abs(dot(p - origin, normal)) > 1e3 * tol)
            return {false, "graph is not planar", {}};
    Vec3 e1 = axes[0], e2 = axes[1];
    auto uv = [&](const Point3& p) {
        return std::pair<double, double>{dot(p - origin, e1), dot(p - origin, e2)};
    };

    // phi-walk from the lexicographically extreme vertex: leave along the
    // counterclockwise-most fan direction of the spanning half-plane.
    struct Leg {
        double angle;
        EdgeId edge;
        bool from_start;  // leaving along the polyline orientation
    };
    std::map<VertexId, std::vector<Leg>> legs;
    for (const auto& e : g.edges) {
        auto dir_angle = [&](const Point3& a, const Point3& b) {
            auto [ax, ay] = uv(a);
            auto [bx, by] = uv(b);
            return std::atan2(by - ay, bx - ax);
        };
        legs[e.ends[0]].push_back({dir_angle(e.polyline[0], e.polyline[1]), e.id, true});
        size_t n = e.polyline.size();
        legs[e.ends[1]].push_back({dir_angle(e.polyline[n - 1], e.polyline[n - 2]), e.id, false});
    }
    for (auto& [vid, v] : legs)
        std::sort(v.begin(), v.end(), [](const Leg& a, const Leg& b) {
            return a.angle < b.angle || (a.angle == b.angle && a.edge < b.edge);
        });

    VertexId start = g.vertices.begin()->first;
    for (const auto& [vid, p] : g.vertices) {
        auto [x, y] = uv(p);
        auto [sx, sy] = uv(g.vertex_pos(start));
        if (x < sx - tol || (std::abs(x - sx) <= tol && y < sy - tol)) start = vid;
    }

    auto extreme_leg = [&](VertexId v) -> const Leg* {
        const auto& L = legs.at(v);
        size_t k = L.size();
        if (k == 1) return &L[0];
        double max_gap = -1.0;
        size_t at = 0;
        for (size_t i = 0; i < k; ++i) {
            double a0 = L[i].angle;
            double a1 = (i + 1 < k ? L[i + 1].angle : L[0].angle + 2 * kPi);
            if (a1 - a0 > max_gap) {
                max_gap = a1 - a0;
                at = i;
            }
        }
        if (2 * kPi - max_gap > kPi + 1e-9) return nullptr;  // fan spans more than a half-plane
        return &L[at];  // ccw end of the occupied sector
    };

    TypeCEvidence ev;
    ev.plane_normal = normal;
    std::set<EdgeId> boundary;
    VertexId v = start;
    EdgeId first_edge = -1;
    for (size_t step = 0; step <= g.vertices.size() + 1; ++step) {
        const Leg* leg = extreme_leg(v);
        if (!leg) return {false, "walk reached a vertex spanning more than a half-plane", {}};
        if (v == start && first_edge >= 0) break;  // closed up
        if (first_edge < 0) first_edge = leg->edge;
        if (boundary.count(leg->edge))
            return {false, "walk does not close up (edge repeated)", {}};
        boundary.insert(leg->edge);
        ev.boundary_cycle.push_back(leg->edge);
        const Edge& e = g.edge(leg->edge);
        v = leg->from_start ? e.ends[1] : e.ends[0];
        if (v == start) { /* next loop iteration terminates */ }
    }
    if (v != start) return {false, "walk does not close up", {}};

    // Materialize the boundary and demand convexity: consistent turning,
    // total 2*pi.
    std::vector<std::pair<double, double>> bpts;
    {
        VertexId at = start;
        for (EdgeId eid : ev.boundary_cycle) {
            const Edge& e = g.edge(eid);
            std::vector<Point3> pl = e.polyline;
            if (e.ends[0] != at) std::reverse(pl.begin(), pl.end());
            for (size_t i = 0; i + 1 < pl.size(); ++i) bpts.push_back(uv(pl[i]));
            at = e.ends[0] == at ? e.ends[1] : e.ends[0];
        }
    }
    double total_turn = 0.0;
    size_t nb = bpts.size();
    for (size_t i = 0; i < nb; ++i) {
        auto [ax, ay] = bpts[i];
        auto [bx, by] = bpts[(i + 1) % nb];
        auto [cx, cy] = bpts[(i + 2) % nb];
        double ux = bx - ax, uy = by - ay, vx = cx - bx, vy = cy - by;
        double turn = std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
        total_turn += turn;
    }
    if (std::abs(std::abs(total_turn) - 2 * kPi) > 1e-6)
        return {false, "boundary walk is not convex (total turning)", {}};
    double sign = total_turn > 0 ? 1.0 : -1.0;
    for (size_t i = 0; i < nb; ++i) {
        auto [ax, ay] = bpts[i];
        auto [bx, by] = bpts[(i + 1) % nb];
        auto [cx, cy] = bpts[(i + 2) % nb];
        double crossz = (bx - ax) * (cy - by) - (by - ay) * (cx - bx);
        if (sign * crossz < -1e-9) return {false, "boundary walk is not convex", {}};
    }

    // Interior edges must be straight chords inside the boundary region.
    auto inside_or_on = [&](const std::pair<double, double>& q) {
        double wind = 0.0;
        for (size_t i = 0; i < nb; ++i) {
            auto [ax, ay] = bpts[i];
            auto [bx, by] = bpts[(i + 1) % nb];
            // On the boundary counts as inside.
            double dx = bx - ax, dy = by - ay;
            double t = ((q.first - ax) * dx + (q.second - ay) * dy) / (dx * dx + dy * dy);
            t = std::clamp(t, 0.0, 1.0);
            double px = ax + t * dx - q.first, py = ay + t * dy - q.second;
            if (px * px + py * py <= tol * tol) return true;
            wind += std::atan2((ax - q.first) * (by - q.second) - (ay - q.second) * (bx - q.first),
                               (ax - q.first) * (bx - q.first) + (ay - q.second) * (by - q.second));
        }
        return std::abs(wind) > kPi;  // winding number +-1
    };
    for (const auto& e : g.edges) {
        if (boundary.count(e.id)) continue;
        if (!edge_is_straight(e))
            return {false, "interior edge " + std::to_string(e.id) + " is not a line segment", {}};
        for (const auto& p : e.polyline)
            if (!inside_or_on(uv(p)))
                return {false, "interior edge " + std::to_string(e.id) + " leaves the region", {}};
    }

    // Face extraction over the segment subdivision; every bounded face must
    // be convex.
    std::map<PointRef, int> node_index;
    std::vector<std::pair<double, double>> node_uv;
    auto node_of = [&](const PointRef& r, const Point3& p) {
        auto [it, fresh] = node_index.emplace(r, static_cast<int>(node_index.size()));
        if (fresh) node_uv.push_back(uv(p));
        return it->second;
    };
    std::vector<std::pair<int, int>> segs;
    for (const auto& e : g.edges) {
        int prev = -1;
        for (size_t i = 0; i < e.polyline.size(); ++i) {
            PointRef r = i == 0 ? PointRef::at_vertex(e.ends[0])
                        : i + 1 == e.polyline.size()
                            ? PointRef::at_vertex(e.ends[1])
                            : PointRef::at_joint(e.id, static_cast<int>(i));
            int cur = node_of(r, e.polyline[i]);
            if (prev >= 0) segs.emplace_back(prev, cur);
            prev = cur;
        }
    }
    int N = static_cast<int>(node_uv.size());
    int S = static_cast<int>(segs.size());
    // Half-edges: 2*S entries; he 2k = segs[k] forward, 2k+1 backward.
    auto he_from = [&](int h) { return h % 2 == 0 ? segs[h / 2].first : segs[h / 2].second; };
    auto he_to = [&](int h) { return h % 2 == 0 ? segs[h / 2].second : segs[h / 2].first; };
    std::vector<std::vector<int>> out_at(N);
    for (int h = 0; h < 2 * S; ++h) out_at[he_from(h)].push_back(h);
    auto he_angle = [&](int h) {
        auto [ax, ay] = node_uv[he_from(h)];
        auto [bx, by] = node_uv[he_to(h)];
        return std::atan2(by - ay, bx - ax);
    };
    for (auto& v2 : out_at)
        std::sort(v2.begin(), v2.end(), [&](int a, int b) { return he_angle(a) < he_angle(b); });
    std::vector<int> next(2 * S, -1);
    for (int h = 0; h < 2 * S; ++h) {
        int w = he_to(h);
        int twin = h ^ 1;
        const auto& lst = out_at[w];
        int pos = static_cast<int>(std::find(lst.begin(), lst.end(), twin) - lst.begin());
        next[h] = lst[(pos + static_cast<int>(lst.size()) - 1) % lst.size()];
    }
    std::vector<char> seen(2 * S, 0);
    int bounded = 0, convex_cnt = 0, faces = 0;
    for (int h0 = 0; h0 < 2 * S; ++h0) {
        if (seen[h0]) continue;
        std::vector<int> cycle;
        int h = h0;
        do {
            seen[h] = 1;
            cycle.push_back(he_from(h));
            h = next[h];
        } while (h != h0 && cycle.size() <= static_cast<size_t>(2 * S));
        faces += 1;
        double area2 = 0.0;
        size_t m = cycle.size();
        for (size_t i = 0; i < m; ++i) {
            auto [ax, ay] = node_uv[cycle[i]];
            auto [bx, by] = node_uv[cycle[(i + 1) % m]];
            area2 += ax * by - ay * bx;
        }
        if (area2 <= 0) continue;  // outer face (or degenerate sliver)
        bounded += 1;
        bool convex = true;
        for (size_t i = 0; i < m; ++i) {
            auto [ax, ay] = node_uv[cycle[i]];
            auto [bx, by] = node_uv[cycle[(i + 1) % m]];
            auto [cx, cy] = node_uv[cycle[(i + 2) % m]];
            double crossz = (bx - ax) * (cy - by) - (by - ay) * (cx - bx);
            if (crossz < -1e-9) convex = false;
        }
        if (convex) convex_cnt += 1;
    }
    if (N - S + faces != 2)
        return {false, "face extraction failed (genus bookkeeping)", {}};
    ev.face_count = bounded;
    ev.convex_faces = convex_cnt;
    if (convex_cnt != bounded)
        return {false, "a complementary face is not convex", {}};
    return {true, "", ev};
}

std::string to_string(TightClass c) {
    switch (c) {
        case TightClass::TypeS: return "TypeS";
        case TightClass::TypeC: return "TypeC";
        case TightClass::NotTight: return "NotTight";
        default: return "Unclassified";
    }
}

TightnessVerdict verdict(const SpatialGraph& g, int n_probes, std::uint64_t seed, int threads) {
    TightnessVerdict out;
    out.curvature = total_curvature(g);
    double sigma_sum = 0.0;
    for (auto& [v, s] : out.curvature.per_vertex) sigma_sum += s;
    double edge_sum = 0.0;
    for (auto& [e, k] : out.curvature.per_edge) edge_sum += k;
    out.formula_residual = std::abs(sigma_sum + 2 * kPi * edge_sum - 4 * kPi);
    out.tight_by_formula = out.formula_residual <= kTightTol * 2 * kPi;

    TppResult tpp = tpp_probe(g, n_probes, seed, threads);
    out.tpp_passed = tpp.passed;
    out.tpp_total = tpp.passed + tpp.failed;

    bool all_straight = true;
    for (const auto& e : g.edges) all_straight &= edge_is_straight(e);
    if (all_straight) {
        TypeSResult r = classify_type_s(g);
        if (r.accepted) {
            out.classification = TightClass::TypeS;
            out.type_s = r.evidence;
        }
    } else {
        TypeCResult r = classify_type_c(g);
        if (r.accepted) {
            out.classification = TightClass::TypeC;
            out.type_c = r.evidence;
        }
    }
    if (out.classification == TightClass::Unclassified && !out.tight_by_formula)
        out.classification = TightClass::NotTight;
    return out;
}

}  // namespace graphcurv
