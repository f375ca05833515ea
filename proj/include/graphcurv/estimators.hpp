#pragma once

#include <cstdint>
#include <map>

#include "graphcurv/graph.hpp"

namespace graphcurv {

// Sphere-average estimates. Per-sample values (weight, minimum count, degree
// defect) are small integers, so sums are accumulated exactly and the report
// is identical for any worker count or merge order.
struct EstimateReport {
    std::int64_t samples = 0;
    std::int64_t rejected_degenerate = 0;
    double K_hat = 0.0;
    double mu_hat = 0.0;
    double T_hat_over_pi = 0.0;
    double K_se = 0.0;
    double mu_se = 0.0;
    double T_se = 0.0;
    std::uint64_t seed = 0;
    int max_weight_seen = 0;
};

// Antithetic sampling: directions are drawn in +-u pairs (n_samples rounds up
// to even). Degenerate directions are rejected and redrawn; more than 50%
// rejections aborts.
EstimateReport estimate(const SpatialGraph& g, std::int64_t n_samples, std::uint64_t seed,
                        int threads = 1);

// Monte Carlo degree-defect average plus the closed-form edge curvature sum.
double gulliver_yamada(const SpatialGraph& g, std::int64_t n_samples, std::uint64_t seed,
                       int threads = 1);

struct MinimaHistogram {
    std::map<int, double> frequency;  // mu(u) value -> fraction of samples
    double mu_hat = 0.0;
    double fraction_two_or_more = 0.0;
    std::int64_t samples = 0;
};

MinimaHistogram minima_histogram(const SpatialGraph& g, std::int64_t n_samples,
                                 std::uint64_t seed, int threads = 1);

// Cached per-graph direction scan: weight w(u), minimum count mu(u), and the
// vertex degree defect sum, evaluated without re-walking the graph structure.
struct DirectionScan {
    explicit DirectionScan(const SpatialGraph& g);

    struct Sample {
        int w = 0;
        int mu = 0;
        int gy_defect = 0;
    };
    Sample eval(const Vec3& u) const;
    bool degenerate(const Vec3& u) const;

    int chi = 0;
    int b1 = 0;
    double edge_curvature_sum = 0.0;

  private:
    std::vector<std::pair<int, int>> vertex_branch_span_;  // [begin,end) into branch_dirs_
    std::vector<Vec3> branch_dirs_;
    std::vector<std::pair<Vec3, Vec3>> joint_dirs_;        // away-directions per joint
    std::vector<Vec3> segment_dirs_;
};

}  // namespace graphcurv
