#include "graphcurv/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace graphcurv {

namespace {

std::string edge_tag(const Edge& e) {
    std::ostringstream os;
    os << "edge " << e.id;
    return os.str();
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

const Point3& SpatialGraph::vertex_pos(VertexId v) const {
    auto it = vertices.find(v);
    if (it == vertices.end()) throw std::out_of_range("unknown vertex id " + std::to_string(v));
    return it->second;
}

const Edge& SpatialGraph::edge(EdgeId e) const {
    for (const auto& ed : edges)
        if (ed.id == e) return ed;
    throw std::out_of_range("unknown edge id " + std::to_string(e));
}

bool SpatialGraph::has_edge(EdgeId e) const {
    for (const auto& ed : edges)
        if (ed.id == e) return true;
    return false;
}

int SpatialGraph::degree(VertexId v) const {
    int d = 0;
    for (const auto& e : edges) {
        if (e.ends[0] == v) ++d;
        if (e.ends[1] == v) ++d;
    }
    return d;
}

double SpatialGraph::diameter() const {
    if (vertices.empty()) return 0.0;
    Point3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
    auto absorb = [&](const Point3& p) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y); lo.z = std::min(lo.z, p.z);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y); hi.z = std::max(hi.z, p.z);
    };
    for (const auto& [id, p] : vertices) absorb(p);
    for (const auto& e : edges)
        for (const auto& p : e.polyline) absorb(p);
    return dist(lo, hi);
}

VertexId SpatialGraph::max_vertex_id() const {
    VertexId m = -1;
    for (const auto& [id, p] : vertices) m = std::max(m, id);
    return m;
}

EdgeId SpatialGraph::max_edge_id() const {
    EdgeId m = -1;
    for (const auto& e : edges) m = std::max(m, e.id);
    return m;
}

std::vector<Violation> validate(const SpatialGraph& g) {
    std::vector<Violation> out;
    auto flag = [&](const std::string& rule, const std::string& detail) {
        out.push_back({rule, detail});
    };

    if (g.vertices.empty()) {
        flag("empty", "graph has no vertices");
        return out;
    }
    double tol = g.geo_tol();

    for (const auto& [id, p] : g.vertices) {
        if (id < 0) flag("vertex-id", "vertex id " + std::to_string(id) + " is negative");
        if (!finite(p)) flag("non-finite", "vertex " + std::to_string(id));
    }

    // Pairwise-distinct vertex positions.
    for (auto it = g.vertices.begin(); it != g.vertices.end(); ++it) {
        auto jt = it;
        for (++jt; jt != g.vertices.end(); ++jt) {
            if (dist(it->second, jt->second) <= tol)
                flag("coincident-vertices",
                     "vertices " + std::to_string(it->first) + " and " + std::to_string(jt->first));
        }
    }

    std::set<EdgeId> edge_ids;
    for (const auto& e : g.edges) {
        if (!edge_ids.insert(e.id).second) flag("duplicate-edge-id", edge_tag(e));
        if (e.ends[0] == e.ends[1]) flag("loop-edge", edge_tag(e));
        bool ends_known = g.vertices.count(e.ends[0]) && g.vertices.count(e.ends[1]);
        if (!ends_known) {
            flag("unknown-endpoint", edge_tag(e));
            continue;
        }
        if (e.polyline.size() < 2) {
            flag("short-polyline", edge_tag(e));
            continue;
        }
        for (const auto& p : e.polyline)
            if (!finite(p)) flag("non-finite", edge_tag(e));
        if (dist(e.polyline.front(), g.vertex_pos(e.ends[0])) > tol ||
            dist(e.polyline.back(), g.vertex_pos(e.ends[1])) > tol)
            flag("endpoint-mismatch", edge_tag(e));
        for (size_t i = 0; i + 1 < e.polyline.size(); ++i)
            if (dist(e.polyline[i], e.polyline[i + 1]) <= tol) {
                flag("degenerate-segment", edge_tag(e) + " segment " + std::to_string(i));
                break;
            }
        // A joint turning by pi means the polyline backtracks over itself.
        for (int j = 1; j + 1 < static_cast<int>(e.polyline.size()); ++j) {
            Vec3 a = e.polyline[j - 1] - e.polyline[j];
            Vec3 b = e.polyline[j + 1] - e.polyline[j];
            if (angle_between(a, b) < kFanMergeAngle)
                flag("polyline-backtrack", edge_tag(e) + " joint " + std::to_string(j));
        }
        // Self-intersection: non-adjacent segment pairs must keep their distance.
        for (size_t i = 0; i + 1 < e.polyline.size(); ++i) {
            for (size_t j = i + 2; j + 1 < e.polyline.size(); ++j) {
                bool wrap = i == 0 && j + 2 == e.polyline.size() &&
                            dist(e.polyline.front(), e.polyline.back()) <= tol;
                if (wrap) continue;  // closed edge would be a loop, flagged above
                double d = segment_segment_distance(e.polyline[i], e.polyline[i + 1],
                                                    e.polyline[j], e.polyline[j + 1]);
                if (d <= tol) {
                    flag("self-intersection",
                         edge_tag(e) + " segments " + std::to_string(i) + "," + std::to_string(j));
                    j = e.polyline.size();  // one report per edge pair is enough
                }
            }
        }
    }
    if (!out.empty()) return out;  // geometry below assumes well-formed pieces

    // Edge interiors must avoid vertices other than their own endpoints.
    for (const auto& e : g.edges) {
        for (const auto& [vid, vp] : g.vertices) {
            if (vid == e.ends[0] || vid == e.ends[1]) continue;
            for (size_t i = 0; i + 1 < e.polyline.size(); ++i) {
                if (point_segment_distance(vp, e.polyline[i], e.polyline[i + 1]) <= tol) {
                    flag("vertex-on-edge", edge_tag(e) + " passes vertex " + std::to_string(vid));
                    break;
                }
            }
        }
    }

    // Distinct edges may touch only at shared endpoint vertices.
    for (size_t a = 0; a < g.edges.size(); ++a) {
        for (size_t b = a + 1; b < g.edges.size(); ++b) {
            const Edge& ea = g.edges[a];
            const Edge& eb = g.edges[b];
            bool reported = false;
            for (size_t i = 0; i + 1 < ea.polyline.size() && !reported; ++i) {
                for (size_t j = 0; j + 1 < eb.polyline.size() && !reported; ++j) {
                    double d = segment_segment_distance(ea.polyline[i], ea.polyline[i + 1],
                                                        eb.polyline[j], eb.polyline[j + 1]);
                    if (d > tol) continue;
                    // Allowed iff both segments meet at a shared endpoint vertex.
                    bool ok = false;
                    for (VertexId v : {ea.ends[0], ea.ends[1]}) {
                        if (v != eb.ends[0] && v != eb.ends[1]) continue;
                        const Point3& vp = g.vertex_pos(v);
                        bool a_at_v = dist(ea.polyline[i], vp) <= tol || dist(ea.polyline[i + 1], vp) <= tol;
                        bool b_at_v = dist(eb.polyline[j], vp) <= tol || dist(eb.polyline[j + 1], vp) <= tol;
                        // Touching is confined to the shared vertex itself.
                        if (a_at_v && b_at_v) ok = true;
                    }
                    if (!ok) {
                        flag("edge-intersection", edge_tag(ea) + " meets " + edge_tag(eb));
                        reported = true;
                    }
                }
            }
        }
    }

    // Connectivity over the vertex-edge incidence.
    {
        std::map<VertexId, int> index;
        for (const auto& [vid, p] : g.vertices) index.emplace(vid, static_cast<int>(index.size()));
        UnionFind uf(index.size());
        for (const auto& e : g.edges) uf.unite(index[e.ends[0]], index[e.ends[1]]);
        std::set<int> roots;
        for (auto& [vid, i] : index) roots.insert(uf.find(i));
        if (roots.size() > 1)
            flag("disconnected", std::to_string(roots.size()) + " components");
    }
    return out;
}

bool is_valid(const SpatialGraph& g) { return validate(g).empty(); }

int euler_characteristic(const SpatialGraph& g) {
    int chi = static_cast<int>(g.vertices.size()) - static_cast<int>(g.edges.size());
    // Same number from the degree sum; both forms are kept and compared.
    int twice = 0;
    for (const auto& [vid, p] : g.vertices) twice += 2 - g.degree(vid);
    if (twice != 2 * chi) throw std::logic_error("euler characteristic bookkeeping mismatch");
    return chi;
}

int first_betti(const SpatialGraph& g) {
    std::map<VertexId, int> index;
    for (const auto& [vid, p] : g.vertices) index.emplace(vid, static_cast<int>(index.size()));
    UnionFind uf(index.size());
    for (const auto& e : g.edges) uf.unite(index[e.ends[0]], index[e.ends[1]]);
    std::set<int> roots;
    for (auto& [vid, i] : index) roots.insert(uf.find(i));
    if (roots.size() != 1) throw std::invalid_argument("first_betti requires a connected graph");
    return 1 - euler_characteristic(g);
}

Point3 point_of(const SpatialGraph& g, const PointRef& p) {
    if (p.kind == PointRef::Kind::vertex) return g.vertex_pos(p.vertex);
    const Edge& e = g.edge(p.edge);
    if (p.joint < 1 || p.joint > e.joint_count())
        throw std::out_of_range("joint index out of range");
    return e.polyline[p.joint];
}

std::vector<PointRef> all_joints(const SpatialGraph& g) {
    std::vector<PointRef> out;
    for (const auto& e : g.edges)
        for (int j = 1; j <= e.joint_count(); ++j) out.push_back(PointRef::at_joint(e.id, j));
    return out;
}

int point_degree(const SpatialGraph& g, const PointRef& p) {
    return p.kind == PointRef::Kind::vertex ? g.degree(p.vertex) : 2;
}

TangentFan tangent_fan(const SpatialGraph& g, const PointRef& p) {
    TangentFan fan;
    fan.base = point_of(g, p);
    if (p.kind == PointRef::Kind::vertex) {
        for (const auto& e : g.edges) {
            if (e.ends[0] == p.vertex)
                fan.branches.push_back(normalized(e.polyline[1] - e.polyline[0]));
            if (e.ends[1] == p.vertex) {
                size_t n = e.polyline.size();
                fan.branches.push_back(normalized(e.polyline[n - 2] - e.polyline[n - 1]));
            }
        }
        if (fan.branches.empty()) throw std::out_of_range("vertex has no incident edges");
    } else {
        const Edge& e = g.edge(p.edge);
        if (p.joint < 1 || p.joint > e.joint_count())
            throw std::out_of_range("joint index out of range");
        fan.branches.push_back(normalized(e.polyline[p.joint - 1] - e.polyline[p.joint]));
        fan.branches.push_back(normalized(e.polyline[p.joint + 1] - e.polyline[p.joint]));
    }
    for (const Vec3& b : fan.branches) {
        bool dup = false;
        for (const Vec3& d : fan.directions)
            if (angle_between(b, d) < kFanMergeAngle) dup = true;
        if (!dup) fan.directions.push_back(b);
    }
    return fan;
}

SpatialGraph refine_vertex_set(const SpatialGraph& g, const PointRef& joint) {
    if (joint.kind != PointRef::Kind::joint)
        throw std::invalid_argument("refine_vertex_set expects a joint reference");
    const Edge& e = g.edge(joint.edge);
    if (joint.joint < 1 || joint.joint > e.joint_count())
        throw std::out_of_range("joint index out of range");

    SpatialGraph out;
    out.vertices = g.vertices;
    VertexId nv = g.max_vertex_id() + 1;
    out.vertices[nv] = e.polyline[joint.joint];

    EdgeId next_id = g.max_edge_id() + 1;
    for (const auto& ed : g.edges) {
        if (ed.id != joint.edge) {
            out.edges.push_back(ed);
            continue;
        }
        Edge a, b;
        a.id = ed.id;
        a.ends = {ed.ends[0], nv};
        a.polyline.assign(ed.polyline.begin(), ed.polyline.begin() + joint.joint + 1);
        b.id = next_id;
        b.ends = {nv, ed.ends[1]};
        b.polyline.assign(ed.polyline.begin() + joint.joint, ed.polyline.end());
        out.edges.push_back(a);
        out.edges.push_back(b);
    }
    return out;
}

}  // namespace graphcurv
