#pragma once

#include <vector>

#include "graphcurv/graph.hpp"

namespace graphcurv {

// Regular n-gon in the xy-plane; total curvature 2 exactly.
SpatialGraph make_convex_polygon(int n, double radius = 1.0);

enum class ThetaVariant { pl_minimal, sampled };

// Circle plus diameter. pl_minimal is the 5-point version (poles (0,±1,0),
// arcs through (∓1,0,0), chord through the origin); sampled uses m-segment
// circle arcs and a straight diameter.
SpatialGraph make_theta_graph(ThetaVariant variant, int m = 64);

// Suspension of an n-point set, poles joined by n arcs.
// Planar: two exact semicircles plus n-2 shallow interior arcs; total
// curvature approaches n from above as the bulges shrink.
SpatialGraph make_suspension_planar(int n, int m = 64);

// Braided: strands monotone in height between two poles, crossings realized
// by depth-0.1 over/under displacements. Word letters are +-i for the
// generator swapping slots i-1 and i (1-based), sign picking the over strand.
SpatialGraph make_suspension_braided(int n, const std::vector<int>& word, int m = 64);

// North and south pole joined by n meridians of equally spaced longitudes.
// Short horizontal stubs at the poles keep the pole tangent fans planar, so
// the pole exterior areas vanish and each meridian has total curvature 1.
SpatialGraph make_meridian_graph(int n, int m);

// Circular helix arc (a cos(s/c), a sin(s/c), b s/c), c = sqrt(a^2+b^2),
// sampled over the given number of turns. Total curvature of one turn tends
// to 2/sqrt(1+m^2) where m = b/a is the slope.
Edge make_helix_arc(double a, double b, double turns, int segments = 512);

// Closed curve modeled on the two-lobe singular eight: a straight thread and
// a 1.5-turn helix of slope m_slope coiling around it, joined by one lobe
// routed above and one below. Crookedness sits just above 2, the excess of
// helix order 1/sqrt(1+m^2).
SpatialGraph make_surgered_figure_eight(double m_slope, int helix_segments = 512);

// Circle with two near-center vertical chords, one chord bent past the other
// and the two plane crossings resolved by opposite dimples. Crookedness stays
// below 1 + eps while the cycles (chord + left arc) and (bent chord + right
// arc) form a Hopf link. Edge ids: 0 top arc C->A, 1 right arc A->B, 2 bottom
// arc B->D, 3 left arc D->C, 4 chord C->D, 5 bent chord A->B.
SpatialGraph make_hopf_gamma_eps(double eps, int m = 96);

}  // namespace graphcurv
