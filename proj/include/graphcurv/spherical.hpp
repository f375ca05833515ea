#pragma once

#include <random>
#include <vector>

#include "graphcurv/graph.hpp"

namespace graphcurv {

// Absolute tolerance on unit-vector dot products below which a direction
// counts as degenerate for a graph.
inline constexpr double kDegenerateTol = 1e-9;
// A dual cone whose best interior margin falls below this is flat (area 0).
inline constexpr double kSolidTol = 1e-10;

// Intersection of the dual cone of a tangent fan with the unit sphere.
// Solid pointed cones give a convex geodesic polygon; a planar fan spanning
// less than pi gives a lune; a single direction gives a hemisphere; anything
// flatter has zero area.
struct SphericalPolygon {
    enum class Kind { empty, hemisphere, lune, polygon, full_sphere };
    Kind kind = Kind::empty;
    std::vector<Vec3> vertices;    // polygon: extreme rays, ccw seen from outside
    std::array<Vec3, 2> normals{}; // hemisphere: [0]; lune: bounding fan vectors
};

SphericalPolygon positive_region(const std::vector<Vec3>& fan_directions);
SphericalPolygon positive_region(const TangentFan& fan);

double area(const SphericalPolygon& poly);

// Best margin of the fan's dual cone: max over u in S^2 of min_i (u, tau_i),
// with the maximizing direction written to *arg if given. Positive iff the
// dual cone is solid.
double dual_cone_margin(const std::vector<Vec3>& dirs, Vec3* arg = nullptr);

// Uniform draw on S^2; deterministic for a fixed engine state and portable
// across platforms (raw 53-bit mantissa mapping, no distribution objects).
double uniform01(std::mt19937_64& rng);
Vec3 uniform_unit_vector(std::mt19937_64& rng);

// Independent per-index stream derived from a master seed; any partition of
// indices across workers reproduces the same draws.
std::mt19937_64 derived_stream(std::uint64_t seed, std::uint64_t index);

// PL discriminant predicate: u is degenerate iff it is nearly perpendicular
// to some polyline segment (vertex and joint fans are segment directions, so
// this covers every stratum).
bool is_degenerate(const SpatialGraph& g, const Vec3& u);

}  // namespace graphcurv
