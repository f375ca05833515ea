#include "graphcurv/geom.hpp"

#include <algorithm>

namespace graphcurv {

double point_segment_distance(const Point3& p, const Point3& a, const Point3& b) {
    Vec3 ab = b - a;
    double len2 = norm2(ab);
    if (len2 == 0.0) return dist(p, a);
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + ab * t);
}

double segment_segment_distance(const Point3& p1, const Point3& p2,
                                const Point3& q1, const Point3& q2) {
    // Lumelsky-style clamped closest-point computation.
    Vec3 d1 = p2 - p1, d2 = q2 - q1, r = p1 - q1;
    double a = norm2(d1), e = norm2(d2), f = dot(d2, r);
    double s = 0.0, t = 0.0;
    if (a == 0.0 && e == 0.0) return dist(p1, q1);
    if (a == 0.0) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        double c = dot(d1, r);
        if (e == 0.0) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            double b = dot(d1, d2);
            double denom = a * e - b * b;
            if (denom > 0.0) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
            t = b * s + f;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > e) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            } else {
                t /= e;
            }
        }
    }
    return dist(p1 + d1 * s, q1 + d2 * t);
}

void plane_basis(const Vec3& n, Vec3& e1, Vec3& e2) {
    Vec3 pick = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    e1 = normalized(cross(n, pick));
    e2 = cross(n, e1);
}

}  // namespace graphcurv
