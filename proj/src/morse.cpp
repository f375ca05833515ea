#include "graphcurv/morse.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "graphcurv/spherical.hpp"

namespace graphcurv {

namespace {

CriticalPoint classify(const PointRef& loc, double h, int d_minus, int deg) {
    CriticalPoint cp;
    cp.location = loc;
    cp.height = h;
    cp.d_minus = d_minus;
    cp.d_plus = deg - d_minus;
    if (d_minus == 0) {
        cp.kind = CriticalPoint::Kind::local_min;
        cp.morse_poly = {1, 0};
    } else if (d_minus == 1) {
        cp.kind = CriticalPoint::Kind::regular;
        cp.morse_poly = {0, 0};
    } else {
        cp.kind = CriticalPoint::Kind::other;
        cp.morse_poly = {0, d_minus - 1};
    }
    return cp;
}

}  // namespace

MorseReport analyze_direction(const SpatialGraph& g, const Vec3& u) {
    if (is_degenerate(g, u))
        throw DegenerateDirection("direction is degenerate for this graph; resample");

    MorseReport rep;
    rep.direction = u;

    for (const auto& [vid, pos] : g.vertices) {
        TangentFan fan = tangent_fan(g, PointRef::at_vertex(vid));
        int d_minus = 0;
        for (const Vec3& b : fan.branches)
            if (dot(u, b) < 0.0) ++d_minus;
        rep.criticals.push_back(classify(PointRef::at_vertex(vid), dot(u, pos), d_minus,
                                         static_cast<int>(fan.branches.size())));
    }
    for (const auto& e : g.edges) {
        for (int j = 1; j <= e.joint_count(); ++j) {
            Vec3 a = normalized(e.polyline[j - 1] - e.polyline[j]);
            Vec3 b = normalized(e.polyline[j + 1] - e.polyline[j]);
            int d_minus = (dot(u, a) < 0.0 ? 1 : 0) + (dot(u, b) < 0.0 ? 1 : 0);
            if (d_minus == 1) continue;  // regular joint, not a stratified critical point
            rep.criticals.push_back(
                classify(PointRef::at_joint(e.id, j), dot(u, e.polyline[j]), d_minus, 2));
        }
    }
    std::stable_sort(rep.criticals.begin(), rep.criticals.end(),
                     [](const CriticalPoint& a, const CriticalPoint& b) {
                         if (a.height != b.height) return a.height < b.height;
                         return a.location < b.location;
                     });
    for (const auto& cp : rep.criticals) {
        rep.M[0] += cp.morse_poly[0];
        rep.M[1] += cp.morse_poly[1];
    }
    rep.w = rep.M[0] + rep.M[1];
    rep.mu = rep.M[0];
    rep.chi_check = rep.M[0] - rep.M[1];
    return rep;
}

int sublevel_components(const SpatialGraph& g, const Vec3& u, double c) {
    // Anchor nodes are vertices and joints; a whole segment below level c
    // unites its two ends, a clipped segment dangles from its low end.
    std::map<PointRef, int> index;
    std::vector<double> height;
    auto node = [&](const PointRef& p, const Point3& pos) {
        auto [it, fresh] = index.emplace(p, static_cast<int>(index.size()));
        if (fresh) height.push_back(dot(u, pos));
        return it->second;
    };
    for (const auto& [vid, pos] : g.vertices) node(PointRef::at_vertex(vid), pos);
    for (const auto& e : g.edges)
        for (int j = 1; j <= e.joint_count(); ++j)
            node(PointRef::at_joint(e.id, j), e.polyline[j]);

    std::vector<int> parent(index.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };

    for (const auto& e : g.edges) {
        int prev = -1;
        for (size_t i = 0; i < e.polyline.size(); ++i) {
            PointRef p = i == 0 ? PointRef::at_vertex(e.ends[0])
                       : i + 1 == e.polyline.size() ? PointRef::at_vertex(e.ends[1])
                                                    : PointRef::at_joint(e.id, static_cast<int>(i));
            int cur = index.at(p);
            if (prev >= 0 && height[prev] <= c && height[cur] <= c)
                parent[find(prev)] = find(cur);
            prev = cur;
        }
    }
    std::set<int> roots;
    for (size_t i = 0; i < parent.size(); ++i)
        if (height[i] <= c) roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
}

bool is_perfect(const SpatialGraph& g, const Vec3& u) {
    MorseReport rep = analyze_direction(g, u);
    int b1 = first_betti(g);
    bool by_weight = rep.w == 1 + b1;
    bool by_minima = rep.mu == 1;

    std::vector<double> heights;
    for (const auto& cp : rep.criticals) heights.push_back(cp.height);
    std::sort(heights.begin(), heights.end());
    heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
    double pad = std::max(1.0, g.diameter());
    std::vector<double> probes{heights.front() - pad, heights.back() + pad};
    for (size_t i = 0; i + 1 < heights.size(); ++i)
        probes.push_back(0.5 * (heights[i] + heights[i + 1]));
    bool by_sublevels = true;
    for (double c : probes)
        if (sublevel_components(g, u, c) > 1) by_sublevels = false;

    if (by_weight != by_minima || by_weight != by_sublevels)
        throw std::logic_error("perfection tests disagree (tied critical heights?)");
    return by_weight;
}

}  // namespace graphcurv
