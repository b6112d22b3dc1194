#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "pkmopt/evaluation.hpp"  // kNegInf

namespace pkmopt {

using DesignPoint = Eigen::VectorXd;

/// n+1 design points with evaluations, kept sorted best-first.
struct Simplex {
    std::vector<DesignPoint> vertices;
    std::vector<double> evals;

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }

    void sort_best_first() {
        std::vector<int> order(vertices.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return evals[a] > evals[b]; });
        std::vector<DesignPoint> v;
        std::vector<double> e;
        v.reserve(order.size());
        e.reserve(order.size());
        for (int i : order) {
            v.push_back(std::move(vertices[i]));
            e.push_back(evals[i]);
        }
        vertices = std::move(v);
        evals = std::move(e);
    }

    /// Mean of the best n vertices (the worst one excluded).
    DesignPoint centroid() const {
        DesignPoint m = DesignPoint::Zero(vertices[0].size());
        const int n = dimension();
        for (int i = 0; i < n; ++i) m += vertices[i];
        return m / n;
    }

    double max_vertex_distance() const {
        double d = 0.0;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t k = i + 1; k < vertices.size(); ++k)
                d = std::max(d, (vertices[i] - vertices[k]).norm());
        return d;
    }

    /// Max pairwise evaluation difference. A mix of finite and -inf evals is
    /// an infinite spread; an all -inf simplex counts as spread 0.
    double eval_spread() const {
        double lo = std::numeric_limits<double>::infinity(), hi = kNegInf;
        bool any_inf = false, any_fin = false;
        for (double e : evals) {
            if (std::isfinite(e)) {
                any_fin = true;
                lo = std::min(lo, e);
                hi = std::max(hi, e);
            } else {
                any_inf = true;
            }
        }
        if (!any_fin) return 0.0;
        if (any_inf) return std::numeric_limits<double>::infinity();
        return hi - lo;
    }
};

struct NmConfig {
    double reflection = 1.0;   // r > 0
    double expansion = 2.0;    // e > 1
    double contraction = 0.5;  // 0 < k < r
    double shrink = 0.5;       // 0 < s < 1
    double eps1 = 1e-3;        // simplex-size tolerance
    double eps2 = 1e-3;        // evaluation-spread tolerance
    int max_iter = 100;        // iterations allowed without improvement
    double margin = 1.05;      // improvement must exceed margin * previous best
    double limit = 1.0;        // stop at limit * e_max
    double e_max = std::numeric_limits<double>::infinity();

    /// Coarse-stage settings for an n-dimensional problem.
    static NmConfig coarse(int n, double e_max_value) {
        NmConfig c;
        c.max_iter = 3 * n;
        c.margin = 1.05;
        c.limit = 0.8;
        c.e_max = e_max_value;
        return c;
    }

    /// Fine-stage settings for an n-dimensional problem.
    static NmConfig fine(int n, double e_max_value) {
        NmConfig c;
        c.max_iter = 10 * n;
        c.margin = 1.01;
        c.limit = 1.0;
        c.e_max = e_max_value;
        return c;
    }
};

enum class NmOp { reflect, expand, contract_out, contract_in, shrink };

inline const char* nm_op_name(NmOp op) {
    switch (op) {
        case NmOp::reflect: return "reflect";
        case NmOp::expand: return "expand";
        case NmOp::contract_out: return "contract_out";
        case NmOp::contract_in: return "contract_in";
        case NmOp::shrink: return "shrink";
    }
    return "?";
}

// Geometric proposals about the centroid v_m and worst vertex v_n.
inline DesignPoint nm_reflect(const DesignPoint& vm, const DesignPoint& vn, double r) {
    return vm + r * (vm - vn);
}
inline DesignPoint nm_expand(const DesignPoint& vm, const DesignPoint& vr, double e) {
    return vm + e * (vr - vm);
}
inline DesignPoint nm_contract_out(const DesignPoint& vm, const DesignPoint& vn, double k) {
    return vm + k * (vm - vn);
}
inline DesignPoint nm_contract_in(const DesignPoint& vm, const DesignPoint& vn, double k) {
    return vm - k * (vm - vn);
}

/// Stopping rule: the simplex has collapsed in both size and evaluation
/// spread, or the allowed iterations without improvement are exhausted.
inline bool stopping(const Simplex& s, int iter, const NmConfig& cfg) {
    if (s.max_vertex_distance() <= cfg.eps1 && s.eval_spread() <= cfg.eps2) return true;
    return iter >= cfg.max_iter;
}

struct TraceStep {
    int step = 0;
    NmOp op = NmOp::reflect;
    DesignPoint point;
    double eval = 0.0;
    bool accepted = false;
};

struct StartResult {
    DesignPoint best;
    double eval = kNegInf;
    int iterations = 0;  // total accepted/attempted NM steps
    std::vector<TraceStep> trace;
};

/// One start of the maximizing Nelder-Mead search.
/// The iteration counter resets only when the new best exceeds
/// margin * previous best; the search also stops once the best evaluation
/// reaches limit * e_max. Out-of-box handling is the objective's concern
/// (it evaluates to -inf there).
template <typename F>
StartResult single_start(F&& objective, Simplex simplex, const NmConfig& cfg,
                         bool record_trace = false,
                         std::vector<Simplex>* simplex_log = nullptr) {
    if (simplex.evals.size() != simplex.vertices.size()) {
        simplex.evals.resize(simplex.vertices.size());
        for (std::size_t i = 0; i < simplex.vertices.size(); ++i)
            simplex.evals[i] = objective(simplex.vertices[i]);
    }
    simplex.sort_best_first();

    StartResult res;
    const int n = simplex.dimension();
    int iter = 0;
    int step = 0;

    const auto improved = [&](double prev, double now) {
        if (!std::isfinite(now)) return false;
        if (!std::isfinite(prev)) return true;
        return now >= cfg.margin * prev;
    };

    while (true) {
        if (simplex.evals[0] >= cfg.limit * cfg.e_max) break;
        if (stopping(simplex, iter, cfg)) break;
        if (simplex_log) simplex_log->push_back(simplex);

        const double prev_best = simplex.evals[0];
        const DesignPoint vm = simplex.centroid();
        const DesignPoint& vn = simplex.vertices[n];
        const double en = simplex.evals[n];
        const double e_second_worst = simplex.evals[n > 0 ? n - 1 : 0];

        const auto note = [&](NmOp op, const DesignPoint& pt, double e, bool acc) {
            if (record_trace) res.trace.push_back({step, op, pt, e, acc});
        };

        const DesignPoint vr = nm_reflect(vm, vn, cfg.reflection);
        const double er = objective(vr);

        DesignPoint accepted_pt;
        double accepted_e = 0.0;
        bool shrunk = false;

        if (er > simplex.evals[0]) {
            const DesignPoint ve = nm_expand(vm, vr, cfg.expansion);
            const double ee = objective(ve);
            if (ee > er) {
                note(NmOp::reflect, vr, er, false);
                note(NmOp::expand, ve, ee, true);
                accepted_pt = ve;
                accepted_e = ee;
            } else {
                note(NmOp::expand, ve, ee, false);
                note(NmOp::reflect, vr, er, true);
                accepted_pt = vr;
                accepted_e = er;
            }
        } else if (n > 1 && er > e_second_worst) {
            note(NmOp::reflect, vr, er, true);
            accepted_pt = vr;
            accepted_e = er;
        } else if (er > en) {
            const DesignPoint voc = nm_contract_out(vm, vn, cfg.contraction);
            const double eoc = objective(voc);
            note(NmOp::reflect, vr, er, false);
            if (eoc >= er) {
                note(NmOp::contract_out, voc, eoc, true);
                accepted_pt = voc;
                accepted_e = eoc;
            } else {
                note(NmOp::contract_out, voc, eoc, false);
                shrunk = true;
            }
        } else {
            const DesignPoint vic = nm_contract_in(vm, vn, cfg.contraction);
            const double eic = objective(vic);
            note(NmOp::reflect, vr, er, false);
            if (eic > en) {
                note(NmOp::contract_in, vic, eic, true);
                accepted_pt = vic;
                accepted_e = eic;
            } else {
                note(NmOp::contract_in, vic, eic, false);
                shrunk = true;
            }
        }

        if (shrunk) {
            for (int i = 1; i <= n; ++i) {
                simplex.vertices[i] =
                    simplex.vertices[0] + cfg.shrink * (simplex.vertices[i] - simplex.vertices[0]);
                simplex.evals[i] = objective(simplex.vertices[i]);
                note(NmOp::shrink, simplex.vertices[i], simplex.evals[i], true);
            }
        } else {
            simplex.vertices[n] = accepted_pt;
            simplex.evals[n] = accepted_e;
        }
        simplex.sort_best_first();
        ++step;

        if (improved(prev_best, simplex.evals[0]))
            iter = 0;
        else
            ++iter;
    }

    res.best = simplex.vertices[0];
    res.eval = simplex.evals[0];
    res.iterations = step;
    return res;
}

}  // namespace pkmopt
