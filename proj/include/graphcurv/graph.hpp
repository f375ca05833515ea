#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "graphcurv/geom.hpp"

namespace graphcurv {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Geometric tolerance, relative to the graph diameter.
inline constexpr double kGeoTolRel = 1e-9;
// Tangent directions closer than this angle are merged into one fan direction.
inline constexpr double kFanMergeAngle = 1e-8;
// A polyline joint turning by more than this counts as curved.
inline constexpr double kStraightAngle = 1e-7;

// An open edge realized as a polyline. The first and last points coincide with
// the endpoint vertices' positions; interior points are "joints".
struct Edge {
    EdgeId id = -1;
    std::array<VertexId, 2> ends{-1, -1};
    std::vector<Point3> polyline;

    int joint_count() const { return static_cast<int>(polyline.size()) - 2; }
    int segment_count() const { return static_cast<int>(polyline.size()) - 1; }
};

struct SpatialGraph {
    std::map<VertexId, Point3> vertices;
    std::vector<Edge> edges;

    const Point3& vertex_pos(VertexId v) const;
    const Edge& edge(EdgeId e) const;
    bool has_edge(EdgeId e) const;
    int degree(VertexId v) const;

    // Bounding-box diagonal; the scale for geometric tolerances.
    double diameter() const;
    double geo_tol() const { return kGeoTolRel * std::max(diameter(), 1.0); }

    VertexId max_vertex_id() const;
    EdgeId max_edge_id() const;
};

struct Violation {
    std::string rule;    // e.g. "loop-edge", "disconnected"
    std::string detail;  // offending element
};

std::vector<Violation> validate(const SpatialGraph& g);
bool is_valid(const SpatialGraph& g);

int euler_characteristic(const SpatialGraph& g);
int first_betti(const SpatialGraph& g);

// Reference to a point of the graph carrying a stratum: either a graph vertex
// or an interior polyline joint.
struct PointRef {
    enum class Kind { vertex, joint };
    Kind kind = Kind::vertex;
    VertexId vertex = -1;
    EdgeId edge = -1;
    int joint = -1;  // polyline index, 1 .. size-2

    static PointRef at_vertex(VertexId v) { return {Kind::vertex, v, -1, -1}; }
    static PointRef at_joint(EdgeId e, int j) { return {Kind::joint, -1, e, j}; }

    bool operator<(const PointRef& o) const {
        return std::tie(kind, vertex, edge, joint) < std::tie(o.kind, o.vertex, o.edge, o.joint);
    }
    bool operator==(const PointRef& o) const {
        return kind == o.kind && vertex == o.vertex && edge == o.edge && joint == o.joint;
    }
};

Point3 point_of(const SpatialGraph& g, const PointRef& p);
std::vector<PointRef> all_joints(const SpatialGraph& g);
int point_degree(const SpatialGraph& g, const PointRef& p);

// The set N_p of unit interior tangent directions at a point, together with
// the underlying branch directions counted with multiplicity (tangent edges
// merge in `directions` but each branch still counts for Morse bookkeeping).
struct TangentFan {
    Point3 base;
    std::vector<Vec3> branches;    // one unit vector per incident local branch
    std::vector<Vec3> directions;  // deduplicated set N_p
};

TangentFan tangent_fan(const SpatialGraph& g, const PointRef& p);

// Promote an interior joint to a degree-2 graph vertex, splitting its edge.
// The underlying point set is unchanged.
SpatialGraph refine_vertex_set(const SpatialGraph& g, const PointRef& joint);

}  // namespace graphcurv
