#include "graphcurv/topology.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "graphcurv/curvature.hpp"
#include "graphcurv/estimators.hpp"
#include "graphcurv/spherical.hpp"

namespace graphcurv {

namespace {

// Append an oriented edge's polyline, dropping the duplicated junction point.
void append_edge(std::vector<Point3>& pts, const Edge& e, bool reversed) {
    std::vector<Point3> pl = e.polyline;
    if (reversed) std::reverse(pl.begin(), pl.end());
    size_t start = pts.empty() ? 0 : 1;
    pts.insert(pts.end(), pl.begin() + start, pl.end());
}

}  // namespace

CycleRef make_cycle(const SpatialGraph& g, const std::vector<std::pair<EdgeId, bool>>& edges) {
    if (edges.empty()) throw std::invalid_argument("empty cycle");
    CycleRef c;
    c.edges = edges;
    VertexId at = -1;
    for (const auto& [eid, rev] : edges) {
        const Edge& e = g.edge(eid);
        VertexId from = rev ? e.ends[1] : e.ends[0];
        VertexId to = rev ? e.ends[0] : e.ends[1];
        if (at >= 0 && from != at) throw std::invalid_argument("cycle edges do not chain");
        at = to;
        append_edge(c.points, e, rev);
    }
    VertexId first = edges.front().second ? g.edge(edges.front().first).ends[1]
                                          : g.edge(edges.front().first).ends[0];
    if (at != first) throw std::invalid_argument("cycle does not close");
    c.points.pop_back();  // drop the duplicated closing point
    return c;
}

std::vector<CycleRef> cycle_basis(const SpatialGraph& g) {
    // BFS spanning tree; each non-tree edge contributes edge + tree path.
    std::map<VertexId, std::pair<EdgeId, VertexId>> parent;  // v -> (edge, parent vertex)
    std::set<VertexId> seen;
    std::vector<EdgeId> non_tree;
    VertexId root = g.vertices.begin()->first;
    seen.insert(root);
    std::vector<VertexId> frontier{root};
    std::set<EdgeId> tree;
    while (!frontier.empty()) {
        std::vector<VertexId> next;
        for (VertexId v : frontier) {
            for (const auto& e : g.edges) {
                VertexId other;
                if (e.ends[0] == v) other = e.ends[1];
                else if (e.ends[1] == v) other = e.ends[0];
                else continue;
                if (tree.count(e.id)) continue;
                if (seen.count(other)) continue;
                seen.insert(other);
                tree.insert(e.id);
                parent[other] = {e.id, v};
                next.push_back(other);
            }
        }
        frontier = std::move(next);
    }
    for (const auto& e : g.edges)
        if (!tree.count(e.id)) non_tree.push_back(e.id);
    std::sort(non_tree.begin(), non_tree.end());

    auto path_to_root = [&](VertexId v) {
        std::vector<std::pair<EdgeId, bool>> path;  // oriented v -> root
        while (parent.count(v)) {
            auto [eid, p] = parent.at(v);
            const Edge& e = g.edge(eid);
            path.emplace_back(eid, e.ends[0] == v ? false : true);
            v = p;
        }
        return path;
    };

    std::vector<CycleRef> out;
    for (EdgeId eid : non_tree) {
        const Edge& e = g.edge(eid);
        // Cycle: e from ends[0] to ends[1], then tree path ends[1] -> ends[0].
        auto up1 = path_to_root(e.ends[1]);
        auto up0 = path_to_root(e.ends[0]);
        // Strip the common tail so the path goes through the lowest ancestor.
        while (!up1.empty() && !up0.empty() && up1.back() == up0.back()) {
            up1.pop_back();
            up0.pop_back();
        }
        std::vector<std::pair<EdgeId, bool>> cyc{{eid, false}};
        for (auto& [id, rev] : up1) cyc.emplace_back(id, rev);
        for (auto it = up0.rbegin(); it != up0.rend(); ++it)
            cyc.emplace_back(it->first, !it->second);
        out.push_back(make_cycle(g, cyc));
    }
    return out;
}

int linking_number(const CycleRef& a, const CycleRef& b, std::uint64_t seed) {
    if (a.points.size() < 3 || b.points.size() < 3)
        throw std::invalid_argument("cycles must be closed polylines");
    double scale = 0.0;
    for (const auto& p : a.points) scale = std::max(scale, norm(p));
    for (const auto& p : b.points) scale = std::max(scale, norm(p));
    double touch_tol = 1e-9 * std::max(scale, 1.0);
    size_t na = a.points.size(), nb = b.points.size();
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j)
            if (segment_segment_distance(a.points[i], a.points[(i + 1) % na], b.points[j],
                                         b.points[(j + 1) % nb]) <= touch_tol)
                throw std::invalid_argument("cycles intersect");

    std::mt19937_64 rng = derived_stream(seed, 0);
    const double kParamTol = 1e-9;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Vec3 w = uniform_unit_vector(rng);
        Vec3 e1, e2;
        plane_basis(w, e1, e2);
        auto px = [&](const Point3& p) { return dot(p, e1); };
        auto py = [&](const Point3& p) { return dot(p, e2); };
        int signed_sum = 0;
        bool retry = false;
        for (size_t i = 0; i < na && !retry; ++i) {
            Point3 A0 = a.points[i], A1 = a.points[(i + 1) % na];
            double ax0 = px(A0), ay0 = py(A0), ax1 = px(A1), ay1 = py(A1);
            double rx = ax1 - ax0, ry = ay1 - ay0;
            for (size_t j = 0; j < nb && !retry; ++j) {
                Point3 B0 = b.points[j], B1 = b.points[(j + 1) % nb];
                double bx0 = px(B0), by0 = py(B0), bx1 = px(B1), by1 = py(B1);
                double sx = bx1 - bx0, sy = by1 - by0;
                double denom = rx * sy - ry * sx;
                double qx = bx0 - ax0, qy = by0 - ay0;
                double lenscale = std::max(std::hypot(rx, ry) * std::hypot(sx, sy), 1e-300);
                if (std::abs(denom) < 1e-12 * lenscale) {
                    // Near-parallel in projection: harmless unless the shadows
                    // come close.
                    double d = segment_segment_distance({ax0, ay0, 0}, {ax1, ay1, 0},
                                                        {bx0, by0, 0}, {bx1, by1, 0});
                    if (d < 1e-7 * std::sqrt(lenscale)) retry = true;
                    continue;
                }
                double t = (qx * sy - qy * sx) / denom;
                double u = (qx * ry - qy * rx) / denom;
                if (t <= -kParamTol || t >= 1 + kParamTol || u <= -kParamTol ||
                    u >= 1 + kParamTol)
                    continue;
                if (t < kParamTol || t > 1 - kParamTol || u < kParamTol || u > 1 - kParamTol) {
                    retry = true;  // crossing at a segment endpoint: resample
                    continue;
                }
                // Sign from the projection-independent orientation determinant.
                Vec3 ta = A1 - A0, tb = B1 - B0;
                Vec3 gap = (A0 + ta * t) - (B0 + tb * u);
                double det = dot(cross(ta, tb), gap);
                double detscale = norm(ta) * norm(tb) * std::max(norm(gap), 1e-300);
                if (std::abs(det) < 1e-9 * detscale) {
                    retry = true;  // too close to call: escalate to a new direction
                    continue;
                }
                signed_sum += det > 0 ? 1 : -1;
            }
        }
        if (retry) continue;
        if (signed_sum % 2 != 0) throw std::logic_error("odd crossing parity between cycles");
        return signed_sum / 2;
    }
    throw std::runtime_error("no generic projection direction found in 64 attempts");
}

UnknotReport unknot_certificate(const SpatialGraph& g, std::int64_t n_samples,
                                std::uint64_t seed) {
    // Suspension shape: exactly two distinguished vertices of equal degree n
    // joined by n disjoint paths through degree-2 vertices. For n = 2 only a
    // two-vertex circle qualifies; larger cycles carry no distinguished poles.
    std::vector<VertexId> poles;
    for (const auto& [vid, p] : g.vertices)
        if (g.degree(vid) != 2) poles.push_back(vid);
    int n = 0;
    if (poles.empty()) {
        if (g.vertices.size() != 2 || first_betti(g) != 1)
            throw std::invalid_argument("not a suspension");
        n = 2;
    } else {
        if (poles.size() != 2 || g.degree(poles[0]) != g.degree(poles[1]))
            throw std::invalid_argument("not a suspension");
        n = g.degree(poles[0]);
        // Walk each meridian from pole 0 through degree-2 vertices.
        int arrived = 0;
        std::set<EdgeId> used;
        for (const auto& e0 : g.edges) {
            if (e0.ends[0] != poles[0] && e0.ends[1] != poles[0]) continue;
            EdgeId cur = e0.id;
            VertexId at = e0.ends[0] == poles[0] ? e0.ends[1] : e0.ends[0];
            if (used.count(cur)) throw std::invalid_argument("not a suspension");
            used.insert(cur);
            size_t guard = 0;
            while (at != poles[1] && guard++ <= g.edges.size()) {
                if (at == poles[0]) throw std::invalid_argument("not a suspension");
                const Edge* nxt = nullptr;
                for (const auto& e : g.edges) {
                    if (e.id == cur || used.count(e.id)) continue;
                    if (e.ends[0] == at || e.ends[1] == at) {
                        if (nxt) throw std::invalid_argument("not a suspension");
                        nxt = &e;
                    }
                }
                if (!nxt) throw std::invalid_argument("not a suspension");
                used.insert(nxt->id);
                at = nxt->ends[0] == at ? nxt->ends[1] : nxt->ends[0];
                cur = nxt->id;
            }
            if (at == poles[1]) ++arrived;
        }
        if (arrived != n || used.size() != g.edges.size())
            throw std::invalid_argument("not a suspension");
    }

    UnknotReport rep;
    rep.n = n;
    rep.mu_closed = total_curvature(g).crookedness_mu;
    rep.mu_hat = estimate(g, n_samples, seed).mu_hat;
    rep.certificate = rep.mu_closed < 2.0;
    rep.statement = rep.certificate
                        ? "unknotted: suspension with crookedness below 2 is isotopic to a "
                          "planar embedding"
                        : "inconclusive: crookedness is not below 2 (this does not certify "
                          "knotting)";
    return rep;
}

}  // namespace graphcurv
