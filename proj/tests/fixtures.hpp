#pragma once

#include "graphcurv/graph.hpp"

namespace graphcurv::fixtures {

inline Edge straight_edge(EdgeId id, VertexId a, VertexId b, const Point3& pa, const Point3& pb) {
    Edge e;
    e.id = id;
    e.ends = {a, b};
    e.polyline = {pa, pb};
    return e;
}

// Axis-aligned unit square in the xy-plane.
inline SpatialGraph unit_square() {
    SpatialGraph g;
    g.vertices[0] = {0, 0, 0};
    g.vertices[1] = {1, 0, 0};
    g.vertices[2] = {1, 1, 0};
    g.vertices[3] = {0, 1, 0};
    for (int k = 0; k < 4; ++k)
        g.edges.push_back(straight_edge(k, k, (k + 1) % 4, g.vertices[k], g.vertices[(k + 1) % 4]));
    return g;
}

// 1-skeleton of the unit cube.
inline SpatialGraph cube_skeleton() {
    SpatialGraph g;
    for (int i = 0; i < 8; ++i)
        g.vertices[i] = {static_cast<double>(i & 1), static_cast<double>((i >> 1) & 1),
                         static_cast<double>((i >> 2) & 1)};
    EdgeId id = 0;
    for (int i = 0; i < 8; ++i)
        for (int bit = 0; bit < 3; ++bit) {
            int j = i ^ (1 << bit);
            if (j > i)
                g.edges.push_back(straight_edge(id++, i, j, g.vertices[i], g.vertices[j]));
        }
    return g;
}

// Planar quadrilateral with a reflex corner: fails the two-piece property.
inline SpatialGraph dart() {
    SpatialGraph g;
    g.vertices[0] = {0, 0, 0};
    g.vertices[1] = {2, 0, 0};
    g.vertices[2] = {1, 2, 0};
    g.vertices[3] = {1, 0.5, 0};  // reflex vertex inside triangle 0-1-2
    int seq[4] = {0, 1, 2, 3};
    for (int k = 0; k < 4; ++k) {
        int a = seq[k], b = seq[(k + 1) % 4];
        g.edges.push_back(straight_edge(k, a, b, g.vertices[a], g.vertices[b]));
    }
    return g;
}

// Open zigzag with two local minima under the vertical direction.
inline SpatialGraph zigzag_two_minima() {
    SpatialGraph g;
    g.vertices[0] = {0, 0, 0};
    g.vertices[1] = {3, 3, 0};
    Edge e;
    e.id = 0;
    e.ends = {0, 1};
    e.polyline = {{0, 0, 0}, {1, 2, 0}, {2, 1, 0}, {3, 3, 0}};
    g.edges.push_back(e);
    return g;
}

// Two-component graph (invalid: disconnected).
inline SpatialGraph two_squares_apart() {
    SpatialGraph g = unit_square();
    for (int k = 0; k < 4; ++k) {
        Point3 p{(k == 1 || k == 2) ? 11.0 : 10.0, (k >= 2) ? 1.0 : 0.0, 0.0};
        g.vertices[4 + k] = p;
    }
    for (int k = 0; k < 4; ++k)
        g.edges.push_back(straight_edge(4 + k, 4 + k, 4 + (k + 1) % 4, g.vertices[4 + k],
                                        g.vertices[4 + (k + 1) % 4]));
    return g;
}

}  // namespace graphcurv::fixtures
