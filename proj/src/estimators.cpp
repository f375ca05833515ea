#include "graphcurv/estimators.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "graphcurv/curvature.hpp"
#include "graphcurv/spherical.hpp"

namespace graphcurv {

DirectionScan::DirectionScan(const SpatialGraph& g) {
    chi = euler_characteristic(g);
    b1 = first_betti(g);
    for (const auto& [vid, pos] : g.vertices) {
        TangentFan fan = tangent_fan(g, PointRef::at_vertex(vid));
        int begin = static_cast<int>(branch_dirs_.size());
        for (const Vec3& b : fan.branches) branch_dirs_.push_back(b);
        vertex_branch_span_.emplace_back(begin, static_cast<int>(branch_dirs_.size()));
    }
    for (const auto& e : g.edges) {
        edge_curvature_sum += edge_total_curvature(e);
        for (int j = 1; j <= e.joint_count(); ++j) {
            joint_dirs_.emplace_back(normalized(e.polyline[j - 1] - e.polyline[j]),
                                     normalized(e.polyline[j + 1] - e.polyline[j]));
        }
        for (size_t i = 0; i + 1 < e.polyline.size(); ++i)
            segment_dirs_.push_back(normalized(e.polyline[i + 1] - e.polyline[i]));
    }
}

bool DirectionScan::degenerate(const Vec3& u) const {
    for (const Vec3& s : segment_dirs_)
        if (std::abs(dot(u, s)) < kDegenerateTol) return true;
    return false;
}

DirectionScan::Sample DirectionScan::eval(const Vec3& u) const {
    Sample s;
    for (auto [begin, end] : vertex_branch_span_) {
        int d_minus = 0;
        for (int i = begin; i < end; ++i)
            if (dot(u, branch_dirs_[i]) < 0.0) ++d_minus;
        int deg = end - begin;
        if (d_minus == 0) {
            s.w += 1;
            s.mu += 1;
        } else {
            s.w += d_minus - 1;
        }
        s.gy_defect += std::max(2 * d_minus - deg, 0);
    }
    for (const auto& [a, b] : joint_dirs_) {
        bool a_down = dot(u, a) < 0.0;
        bool b_down = dot(u, b) < 0.0;
        if (a_down && b_down) s.w += 1;         // local maximum along the edge
        if (!a_down && !b_down) {
            s.w += 1;                           // local minimum
            s.mu += 1;
        }
    }
    return s;
}

namespace {

struct Totals {
    std::int64_t pairs = 0;
    std::int64_t rejected = 0;
    // Per-pair sums of (value(u) + value(-u)) and their squares; all integers.
    std::int64_t w = 0, w2 = 0;
    std::int64_t mu = 0, mu2 = 0;
    std::int64_t gy = 0, gy2 = 0;
    int max_w = 0;
    std::map<int, std::int64_t> mu_counts;

    void merge(const Totals& o) {
        pairs += o.pairs;
        rejected += o.rejected;
        w += o.w; w2 += o.w2;
        mu += o.mu; mu2 += o.mu2;
        gy += o.gy; gy2 += o.gy2;
        max_w = std::max(max_w, o.max_w);
        for (auto& [k, v] : o.mu_counts) mu_counts[k] += v;
    }
};

constexpr int kMaxRedrawsPerPair = 256;

Totals run_pairs(const DirectionScan& scan, std::uint64_t seed, std::int64_t pair_begin,
                 std::int64_t pair_end) {
    Totals t;
    for (std::int64_t i = pair_begin; i < pair_end; ++i) {
        std::mt19937_64 rng = derived_stream(seed, static_cast<std::uint64_t>(i));
        Vec3 u;
        int redraws = 0;
        for (;;) {
            u = uniform_unit_vector(rng);
            if (!scan.degenerate(u)) break;
            ++t.rejected;
            if (++redraws > kMaxRedrawsPerPair)
                throw std::runtime_error("degenerate-direction rejection rate too high");
        }
        auto s1 = scan.eval(u);
        auto s2 = scan.eval(-u);
        t.pairs += 1;
        int w = s1.w + s2.w, mu = s1.mu + s2.mu, gy = s1.gy_defect + s2.gy_defect;
        t.w += w; t.w2 += static_cast<std::int64_t>(w) * w;
        t.mu += mu; t.mu2 += static_cast<std::int64_t>(mu) * mu;
        t.gy += gy; t.gy2 += static_cast<std::int64_t>(gy) * gy;
        t.max_w = std::max(t.max_w, std::max(s1.w, s2.w));
        t.mu_counts[s1.mu] += 1;
        t.mu_counts[s2.mu] += 1;
    }
    return t;
}

Totals run_all(const DirectionScan& scan, std::int64_t n_samples, std::uint64_t seed,
               int threads) {
    if (n_samples < 1) throw std::invalid_argument("need at least one sample");
    std::int64_t pairs = (n_samples + 1) / 2;
    int nt = threads > 0 ? threads
                         : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    nt = static_cast<int>(std::min<std::int64_t>(nt, pairs));
    if (nt <= 1) {
        Totals t = run_pairs(scan, seed, 0, pairs);
        if (t.rejected > pairs) throw std::runtime_error("degenerate rejection rate above 50%");
        return t;
    }
    std::vector<Totals> parts(nt);
    std::vector<std::thread> pool;
    std::int64_t chunk = (pairs + nt - 1) / nt;
    for (int k = 0; k < nt; ++k) {
        std::int64_t b = k * chunk, e = std::min(pairs, b + chunk);
        pool.emplace_back([&, k, b, e] { parts[k] = run_pairs(scan, seed, b, e); });
    }
    for (auto& th : pool) th.join();
    Totals t;
    for (const auto& p : parts) t.merge(p);  // integer sums: order-independent
    if (t.rejected > pairs) throw std::runtime_error("degenerate rejection rate above 50%");
    return t;
}

// Mean and standard error of per-sample values from per-pair sums (pair
// averages are the independent observations).
void mean_se(std::int64_t sum, std::int64_t sum2, std::int64_t pairs, double& mean, double& se) {
    double n = static_cast<double>(pairs);
    double pair_mean = static_cast<double>(sum) / n;            // sum of the two samples
    double pair_var = static_cast<double>(sum2) / n - pair_mean * pair_mean;
    pair_var = std::max(0.0, pair_var);
    mean = 0.5 * pair_mean;
    se = 0.5 * std::sqrt(pair_var / std::max(1.0, n - 1.0));
}

}  // namespace

EstimateReport estimate(const SpatialGraph& g, std::int64_t n_samples, std::uint64_t seed,
                        int threads) {
    DirectionScan scan(g);
    Totals t = run_all(scan, n_samples, seed, threads);
    EstimateReport rep;
    rep.samples = 2 * t.pairs;
    rep.rejected_degenerate = t.rejected;
    rep.seed = seed;
    rep.max_weight_seen = t.max_w;
    mean_se(t.w, t.w2, t.pairs, rep.K_hat, rep.K_se);
    mean_se(t.mu, t.mu2, t.pairs, rep.mu_hat, rep.mu_se);
    double gy_mean, gy_se;
    mean_se(t.gy, t.gy2, t.pairs, gy_mean, gy_se);
    rep.T_hat_over_pi = gy_mean + scan.edge_curvature_sum;
    rep.T_se = gy_se;
    return rep;
}

double gulliver_yamada(const SpatialGraph& g, std::int64_t n_samples, std::uint64_t seed,
                       int threads) {
    return estimate(g, n_samples, seed, threads).T_hat_over_pi;
}

MinimaHistogram minima_histogram(const SpatialGraph& g, std::int64_t n_samples,
                                 std::uint64_t seed, int threads) {
    DirectionScan scan(g);
    Totals t = run_all(scan, n_samples, seed, threads);
    MinimaHistogram h;
    h.samples = 2 * t.pairs;
    double n = static_cast<double>(h.samples);
    for (auto& [k, c] : t.mu_counts) {
        h.frequency[k] = static_cast<double>(c) / n;
        if (k >= 2) h.fraction_two_or_more += static_cast<double>(c) / n;
    }
    h.mu_hat = 0.5 * static_cast<double>(t.mu) / static_cast<double>(t.pairs);
    return h;
}

}  // namespace graphcurv
