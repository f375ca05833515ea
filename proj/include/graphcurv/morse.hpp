#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "graphcurv/graph.hpp"

namespace graphcurv {

struct DegenerateDirection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CriticalPoint {
    enum class Kind { local_min, other, regular };
    PointRef location;
    double height = 0.0;
    int d_minus = 0, d_plus = 0;
    Kind kind = Kind::regular;
    std::array<int, 2> morse_poly{0, 0};  // (c0, c1): 1 for a minimum, (d_minus - 1) t otherwise
    int weight() const { return morse_poly[0] + morse_poly[1]; }
};

// Per-direction stratified analysis of the height function (u, .) on the graph.
struct MorseReport {
    Vec3 direction;
    std::vector<CriticalPoint> criticals;  // all vertices, plus sign-flip joints; by height
    std::array<int, 2> M{0, 0};            // Morse polynomial coefficients
    int w = 0;                             // M(1), the homological weight
    int mu = 0;                            // M(0), number of local minima
    int chi_check = 0;                     // M(-1), must equal the Euler characteristic
};

// Throws DegenerateDirection when u fails the nondegeneracy predicate.
MorseReport analyze_direction(const SpatialGraph& g, const Vec3& u);

// Connected components of {x in graph : (u, x) <= c}, clipped partial
// segments included. 0 for an empty sublevel set.
int sublevel_components(const SpatialGraph& g, const Vec3& u, double c);

// w == 1 + b1, cross-checked against the minimum count and against sublevel
// connectivity between consecutive critical heights; disagreement throws.
bool is_perfect(const SpatialGraph& g, const Vec3& u);

}  // namespace graphcurv
