#pragma once

#include <Eigen/Dense>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pkmopt/evaluation.hpp"
#include "pkmopt/nelder_mead.hpp"
#include "pkmopt/sobol.hpp"

namespace pkmopt {

using Box = std::vector<std::pair<double, double>>;

struct MultiStartConfig {
    int starts = 100;          // m
    int fine_starts = 0;       // k; 0 selects ceil(0.1 * m)
    Box box;
    double fine_simplex_scale = 0.05;  // fraction of each axis extent
    int workers = 1;

    int dimension() const { return static_cast<int>(box.size()); }

    int resolved_fine_starts() const {
        int k = fine_starts > 0 ? fine_starts
                                : static_cast<int>(std::ceil(0.1 * starts));
        return std::max(1, std::min(k, starts));
    }

    void validate() const {
        if (starts < 1) throw std::invalid_argument("multistart: starts must be >= 1");
        if (fine_starts > starts)
            throw std::invalid_argument("multistart: fine_starts must be <= starts");
        if (!(fine_simplex_scale > 0.0 && fine_simplex_scale < 1.0))
            throw std::invalid_argument("multistart: fine_simplex_scale must be in (0,1)");
        if (box.empty()) throw std::invalid_argument("multistart: empty box");
        for (const auto& [lo, hi] : box)
            if (!(lo < hi)) throw std::invalid_argument("multistart: empty box axis");
    }
};

inline bool in_box(const DesignPoint& p, const Box& box) {
    for (int i = 0; i < p.size(); ++i)
        if (p(i) < box[i].first || p(i) > box[i].second) return false;
    return true;
}

/// m initial simplexes of n+1 vertices each, taken as consecutive groups of
/// scaled Sobol points. Affinely dependent groups are repaired by nudging the
/// last vertex by 1% of the box extent along the first axis.
inline std::vector<Simplex> initial_simplexes(const MultiStartConfig& cfg) {
    cfg.validate();
    const int n = cfg.dimension();
    const auto unit = sobol_points(n, cfg.starts * (n + 1));

    std::vector<Simplex> out(cfg.starts);
    for (int s = 0; s < cfg.starts; ++s) {
        auto& sim = out[s];
        sim.vertices.reserve(n + 1);
        for (int i = 0; i <= n; ++i)
            sim.vertices.push_back(scale_to_box(unit[s * (n + 1) + i], cfg.box));

        Eigen::MatrixXd edges(n, n);
        for (int i = 1; i <= n; ++i)
            edges.col(i - 1) = sim.vertices[i] - sim.vertices[0];
        Eigen::FullPivLU<Eigen::MatrixXd> lu(edges);
        lu.setThreshold(1e-12);
        if (lu.rank() < n) {
            const double nudge = 0.01 * (cfg.box[0].second - cfg.box[0].first);
            auto& v = sim.vertices[n];
            v(0) += (v(0) + nudge <= cfg.box[0].second) ? nudge : -nudge;
        }
    }
    return out;
}

/// The objective pair a cascade runs on. Mechanism problems supply the
/// coarse/fine grid evaluations; tests may plug in synthetic functions.
struct CascadeObjective {
    std::function<double(const DesignPoint&)> coarse;
    std::function<double(const DesignPoint&)> fine;
    double e_max_coarse = std::numeric_limits<double>::infinity();
    double e_max_fine = std::numeric_limits<double>::infinity();
};

struct StartSummary {
    int id = 0;
    std::string stage;  // "coarse" | "fine"
    DesignPoint point;
    double eval = kNegInf;
    int iterations = 0;
    double wall_ms = 0.0;
};

struct CascadeOutcome {
    DesignPoint best;
    double eval = kNegInf;
    std::vector<StartSummary> starts;
    std::vector<std::vector<TraceStep>> traces;  // filled when tracing
};

namespace detail {

/// Runs `count` jobs on `workers` threads. Results land in caller-indexed
/// slots, so the outcome is identical for any worker count.
inline void parallel_for(int count, int workers, const std::function<void(int)>& job) {
    workers = std::max(1, std::min(workers, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) job(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace detail

/// Two-stage multi-start: m coarse Nelder-Mead starts from Sobol simplexes,
/// then fine polishing of the top k coarse optima on the fine grid. Fully
/// deterministic for a fixed configuration, independent of worker count.
inline CascadeOutcome run_cascade(const CascadeObjective& obj, const MultiStartConfig& cfg,
                                  NmConfig coarse_cfg, NmConfig fine_cfg,
                                  bool record_traces = false) {
    cfg.validate();
    const int n = cfg.dimension();
    const int k = cfg.resolved_fine_starts();

    const auto guard = [&](const std::function<double(const DesignPoint&)>& f) {
        return [&cfg, f](const DesignPoint& p) {
            return in_box(p, cfg.box) ? f(p) : kNegInf;
        };
    };
    const auto coarse_obj = guard(obj.coarse);
    const auto fine_obj = guard(obj.fine);

    coarse_cfg.e_max = obj.e_max_coarse;
    fine_cfg.e_max = obj.e_max_fine;

    const auto simplexes = initial_simplexes(cfg);

    CascadeOutcome out;
    out.starts.resize(cfg.starts + k);
    if (record_traces) out.traces.resize(cfg.starts + k);

    detail::parallel_for(cfg.starts, cfg.workers, [&](int s) {
        const auto t0 = std::chrono::steady_clock::now();
        auto res = single_start(coarse_obj, simplexes[s], coarse_cfg, record_traces);
        const auto t1 = std::chrono::steady_clock::now();
        out.starts[s] = {s, "coarse", res.best, res.eval, res.iterations,
                         std::chrono::duration<double, std::milli>(t1 - t0).count()};
        if (record_traces) out.traces[s] = std::move(res.trace);
    });

    // deterministic selection barrier: by evaluation, then start index
    std::vector<int> order(cfg.starts);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return out.starts[a].eval > out.starts[b].eval;
    });

    detail::parallel_for(k, cfg.workers, [&](int i) {
        const int src = order[i];
        const DesignPoint& v0 = out.starts[src].point;

        Simplex sim;
        sim.vertices.push_back(v0);
        for (int a = 0; a < n; ++a) {
            DesignPoint v = v0;
            const double off = cfg.fine_simplex_scale * (cfg.box[a].second - cfg.box[a].first);
            v(a) += (v(a) + off <= cfg.box[a].second) ? off : -off;
            sim.vertices.push_back(v);
        }

        const auto t0 = std::chrono::steady_clock::now();
        auto res = single_start(fine_obj, sim, fine_cfg, record_traces);
        const auto t1 = std::chrono::steady_clock::now();
        out.starts[cfg.starts + i] = {src, "fine", res.best, res.eval, res.iterations,
                                      std::chrono::duration<double, std::milli>(t1 - t0).count()};
        if (record_traces) out.traces[cfg.starts + i] = std::move(res.trace);
    });

    int best = cfg.starts;
    for (int i = cfg.starts; i < cfg.starts + k; ++i)
        if (out.starts[i].eval > out.starts[best].eval) best = i;
    out.best = out.starts[best].point;
    out.eval = out.starts[best].eval;
    return out;
}

}  // namespace pkmopt
