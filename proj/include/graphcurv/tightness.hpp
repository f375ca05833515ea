#pragma once

#include <optional>
#include <string>

#include "graphcurv/curvature.hpp"
#include "graphcurv/graph.hpp"

namespace graphcurv {

// Two-piece-property probing: random closed half-spaces must meet the graph
// in an empty or connected set.
struct TppResult {
    int passed = 0;
    int failed = 0;
    struct Counterexample {
        Vec3 direction;
        double level;
        int components;
    };
    std::vector<Counterexample> counterexamples;  // capped, by probe order
};

TppResult tpp_probe(const SpatialGraph& g, int n_probes, std::uint64_t seed, int threads = 1);

struct TypeSEvidence {
    std::vector<VertexId> hull_corners;
    std::vector<std::pair<VertexId, VertexId>> hull_edges;
    int interior_vertices = 0;
};

struct TypeSResult {
    bool accepted = false;
    std::string rejection;
    TypeSEvidence evidence;
};

// Straight-edged graphs: hull skeleton covered by the graph and every
// non-corner vertex inside the convex hull of its neighbors.
TypeSResult classify_type_s(const SpatialGraph& g);

struct TypeCEvidence {
    std::vector<EdgeId> boundary_cycle;  // the convex outer walk, in order
    Vec3 plane_normal;
    int face_count = 0;                  // bounded complementary faces
    int convex_faces = 0;
};

struct TypeCResult {
    bool accepted = false;
    std::string rejection;
    TypeCEvidence evidence;
};

// Planar graphs with a curved edge: convex boundary walk, straight interior
// chords, convex complementary faces.
TypeCResult classify_type_c(const SpatialGraph& g);

enum class TightClass { TypeS, TypeC, NotTight, Unclassified };

std::string to_string(TightClass c);

struct TightnessVerdict {
    bool tight_by_formula = false;
    double formula_residual = 0.0;  // |sum sigma+ + 2 pi sum K(e) - 4 pi|
    int tpp_passed = 0;
    int tpp_total = 0;
    TightClass classification = TightClass::Unclassified;
    std::optional<TypeSEvidence> type_s;
    std::optional<TypeCEvidence> type_c;
    CurvatureReport curvature;
};

TightnessVerdict verdict(const SpatialGraph& g, int n_probes = 1000, std::uint64_t seed = 1,
                         int threads = 1);

// Is the point inside the convex hull of the given points, to tolerance?
// Solved by a small phase-one simplex; rank-deficient point sets are fine.
bool in_convex_hull(const Point3& p, const std::vector<Point3>& hull_points, double tol = 1e-9);

}  // namespace graphcurv
