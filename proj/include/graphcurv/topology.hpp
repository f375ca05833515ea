#pragma once

#include <string>
#include <vector>

#include "graphcurv/graph.hpp"

namespace graphcurv {

// A closed walk of oriented edges with its materialized polyline (closed:
// segment i runs points[i] -> points[(i+1) % n]).
struct CycleRef {
    std::vector<std::pair<EdgeId, bool>> edges;  // (edge id, reversed)
    std::vector<Point3> points;
};

// Fundamental cycles of a spanning tree; exactly b1 of them.
std::vector<CycleRef> cycle_basis(const SpatialGraph& g);

// Build a cycle from an explicit oriented edge list, validating closure.
CycleRef make_cycle(const SpatialGraph& g, const std::vector<std::pair<EdgeId, bool>>& edges);

// Signed-crossing linking number of two disjoint simple closed polylines.
// Projects along a sampled direction, retrying (up to 64 draws) whenever a
// segment pair is near-degenerate for the projection. Throws if the curves
// touch or no generic direction is found.
int linking_number(const CycleRef& a, const CycleRef& b, std::uint64_t seed = 12345);

struct UnknotReport {
    int n = 0;                 // suspension arity
    double mu_closed = 0.0;    // closed-form crookedness
    double mu_hat = 0.0;       // Monte Carlo check
    bool certificate = false;  // crookedness < 2
    std::string statement;
};

// For a graph homeomorphic to the suspension of n points (two poles joined by
// n disjoint paths): certificate that the embedding is isotopic to a planar
// one when the crookedness is below 2. The converse direction is not decided;
// crookedness >= 2 only yields "inconclusive". Throws if the graph is not a
// suspension.
UnknotReport unknot_certificate(const SpatialGraph& g, std::int64_t n_samples,
                                std::uint64_t seed);

}  // namespace graphcurv
