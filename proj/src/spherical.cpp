#include "graphcurv/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace graphcurv {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Vec3> dedup_directions(const std::vector<Vec3>& dirs) {
    std::vector<Vec3> out;
    for (const Vec3& d : dirs) {
        Vec3 u = normalized(d);
        bool dup = false;
        for (const Vec3& v : out)
            if (angle_between(u, v) < kFanMergeAngle) dup = true;
        if (!dup) out.push_back(u);
    }
    return out;
}

double min_dot(const Vec3& u, const std::vector<Vec3>& dirs) {
    double m = 1.0;
    for (const Vec3& d : dirs) m = std::min(m, dot(u, d));
    return m;
}

}  // namespace

double dual_cone_margin(const std::vector<Vec3>& dirs, Vec3* arg) {
    // max-min of finitely many linear functions on S^2: the optimum has an
    // active set of size <= 3, so candidates are single directions, pair
    // bisectors, and equal-dot solutions of triples.
    double best = -2.0;
    Vec3 best_u{0, 0, 1};
    auto consider = [&](const Vec3& cand) {
        Vec3 u = normalized(cand);
        if (norm(u) == 0.0) return;
        double m = min_dot(u, dirs);
        if (m > best) {
            best = m;
            best_u = u;
        }
    };
    size_t k = dirs.size();
    for (size_t i = 0; i < k; ++i) consider(dirs[i]);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) consider(dirs[i] + dirs[j]);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            for (size_t l = j + 1; l < k; ++l) {
                Vec3 d = cross(dirs[i] - dirs[j], dirs[j] - dirs[l]);
                consider(d);
                consider(-d);
            }
    if (arg) *arg = best_u;
    return best;
}

SphericalPolygon positive_region(const std::vector<Vec3>& fan_directions) {
    SphericalPolygon poly;
    std::vector<Vec3> dirs = dedup_directions(fan_directions);
    if (dirs.empty()) {
        poly.kind = SphericalPolygon::Kind::full_sphere;
        return poly;
    }
    if (dirs.size() == 1) {
        poly.kind = SphericalPolygon::Kind::hemisphere;
        poly.normals[0] = dirs[0];
        return poly;
    }
    if (dual_cone_margin(dirs) <= kSolidTol) {
        poly.kind = SphericalPolygon::Kind::empty;  // dual cone is flat
        return poly;
    }

    // Extreme rays of the solid dual cone lie among cross products of
    // constraint pairs that satisfy every constraint.
    std::vector<Vec3> rays;
    for (size_t i = 0; i < dirs.size(); ++i) {
        for (size_t j = i + 1; j < dirs.size(); ++j) {
            Vec3 c = cross(dirs[i], dirs[j]);
            if (norm(c) < 1e-14) continue;
            for (Vec3 r : {normalized(c), -normalized(c)}) {
                if (min_dot(r, dirs) < -1e-12) continue;
                bool dup = false;
                for (const Vec3& q : rays)
                    if (angle_between(r, q) < kFanMergeAngle) dup = true;
                if (!dup) rays.push_back(r);
            }
        }
    }
    if (rays.size() < 2) throw std::logic_error("solid dual cone without extreme rays");

    if (rays.size() == 2) {
        // Wedge: the fan is planar; the lune is bounded by the two extreme
        // fan directions (the widest pair).
        double span = -1.0;
        size_t bi = 0, bj = 1;
        for (size_t i = 0; i < dirs.size(); ++i)
            for (size_t j = i + 1; j < dirs.size(); ++j) {
                double a = angle_between(dirs[i], dirs[j]);
                if (a > span) {
                    span = a;
                    bi = i;
                    bj = j;
                }
            }
        poly.kind = SphericalPolygon::Kind::lune;
        poly.normals[0] = dirs[bi];
        poly.normals[1] = dirs[bj];
        return poly;
    }

    // Convex polygon: order rays angularly around an interior axis.
    Vec3 axis{0, 0, 0};
    for (const Vec3& r : rays) axis += r;
    axis = normalized(axis);
    if (norm(axis) == 0.0) {
        Vec3 u;
        dual_cone_margin(dirs, &u);
        axis = u;
    }
    Vec3 e1, e2;
    plane_basis(axis, e1, e2);
    std::sort(rays.begin(), rays.end(), [&](const Vec3& a, const Vec3& b) {
        return std::atan2(dot(a, e2), dot(a, e1)) < std::atan2(dot(b, e2), dot(b, e1));
    });
    poly.kind = SphericalPolygon::Kind::polygon;
    poly.vertices = std::move(rays);
    return poly;
}

SphericalPolygon positive_region(const TangentFan& fan) {
    if (fan.directions.empty()) throw std::invalid_argument("empty tangent fan");
    return positive_region(fan.directions);
}

double area(const SphericalPolygon& poly) {
    switch (poly.kind) {
        case SphericalPolygon::Kind::empty: return 0.0;
        case SphericalPolygon::Kind::full_sphere: return 4.0 * kPi;
        case SphericalPolygon::Kind::hemisphere: return 2.0 * kPi;
        case SphericalPolygon::Kind::lune:
            // Dihedral angle between the bounding planes is pi - angle(n0, n1).
            return 2.0 * (kPi - angle_between(poly.normals[0], poly.normals[1]));
        case SphericalPolygon::Kind::polygon: break;
    }
    const auto& v = poly.vertices;
    size_t n = v.size();
    double angle_sum = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const Vec3& prev = v[(i + n - 1) % n];
        const Vec3& cur = v[i];
        const Vec3& next = v[(i + 1) % n];
        Vec3 ta = prev - cur * dot(prev, cur);
        Vec3 tb = next - cur * dot(next, cur);
        angle_sum += angle_between(ta, tb);
    }
    return angle_sum - static_cast<double>(n - 2) * kPi;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vec3 uniform_unit_vector(std::mt19937_64& rng) {
    double z = 2.0 * uniform01(rng) - 1.0;
    double phi = 2.0 * kPi * uniform01(rng);
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

std::mt19937_64 derived_stream(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over (seed, index); decorrelates nearby indices.
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27; x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return std::mt19937_64(x);
}

bool is_degenerate(const SpatialGraph& g, const Vec3& u) {
    for (const auto& e : g.edges) {
        for (size_t i = 0; i + 1 < e.polyline.size(); ++i) {
            Vec3 s = normalized(e.polyline[i + 1] - e.polyline[i]);
            if (std::abs(dot(u, s)) < kDegenerateTol) return true;
        }
    }
    return false;
}

}  // namespace graphcurv
