#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pkmopt/evaluation.hpp"
#include "pkmopt/multistart.hpp"

namespace pkmopt {

/// A design-synthesis problem: mechanism model, parameter box, desired
/// workspace and the constraint/reward configuration.
struct Problem {
    MechModel mech;
    Box box;
    RdwSpec rdw;
    ConstraintConfig constraints;
    RewardStrategy reward;

    int dimension() const { return static_cast<int>(box.size()); }

    EvalResult evaluate(const DesignPoint& v, GridLevel level) const {
        return evaluate_design(v, mech, rdw, constraints, reward, level);
    }

    /// Upper bound on the evaluation, used by the early-stop rule. Binary
    /// rewards are bounded by the grid count; kappa^-1 and VAF rewards by 1
    /// per pose. The lambda mechanism's scalar-j quality is bounded by a
    /// one-off scan over the parameter box and grid.
    double e_max(GridLevel level) const {
        const double n = static_cast<double>(grid_points(rdw, level).size());
        const RewardKind k =
            reward.kind == RewardKind::center_biased ? reward.inner : reward.kind;
        double per_pose = 1.0;
        if (k == RewardKind::quality && mech.kind == MechKind::lambda)
            per_pose = lambda_quality_bound(level);
        return n * per_pose;
    }

    CascadeObjective cascade_objective() const {
        CascadeObjective obj;
        obj.coarse = [this](const DesignPoint& v) {
            return evaluate(v, GridLevel::coarse).e;
        };
        obj.fine = [this](const DesignPoint& v) {
            return evaluate(v, GridLevel::fine).e;
        };
        obj.e_max_coarse = e_max(GridLevel::coarse);
        obj.e_max_fine = e_max(GridLevel::fine);
        return obj;
    }

  private:
    double lambda_quality_bound(GridLevel level) const {
        constexpr int kScan = 201;
        const auto grid = grid_points(rdw, level);
        double jmax = 0.0;
        for (int i = 0; i < kScan; ++i) {
            Eigen::VectorXd v(1);
            v(0) = box[0].first + (box[0].second - box[0].first) * i / (kScan - 1);
            for (const auto& pose : grid) {
                const auto ev = mech.solve(v, pose);
                if (ev) jmax = std::max(jmax, ev->quality);
            }
        }
        return jmax;
    }
};

struct NoFeasibleDesign : std::runtime_error {
    ConstraintCounters counters;
    explicit NoFeasibleDesign(const ConstraintCounters& c)
        : std::runtime_error(describe(c)), counters(c) {}

    static std::string describe(const ConstraintCounters& c) {
        std::string dominant = "singularity";
        long best = c.singular;
        if (c.passive > best) {
            dominant = "passive joint limits";
            best = c.passive;
        }
        if (c.collision > best) dominant = "collision clearance";
        return "no feasible design found; most frequent blocker: " + dominant +
               " (singular " + std::to_string(c.singular) + ", passive " +
               std::to_string(c.passive) + ", collision " + std::to_string(c.collision) + ")";
    }
};

/// Cascade outcome augmented with the fine-grid evaluation of the winner.
struct RunResult {
    DesignPoint best;
    double eval = kNegInf;
    std::optional<ActuatorBracket> bracket;
    long feasible = 0;
    long grid_size = 0;
    double gci = 0.0;  // eval / feasible count
    std::vector<StartSummary> starts;
    std::vector<std::vector<TraceStep>> traces;
};

/// Runs the coarse->fine cascade on a mechanism problem and re-evaluates the
/// winner on the fine grid for the bracket and the reported statistics.
/// Throws NoFeasibleDesign when no start found any constraint-satisfying pose.
inline RunResult optimize(const Problem& problem, const MultiStartConfig& ms,
                          std::optional<NmConfig> coarse_override = std::nullopt,
                          std::optional<NmConfig> fine_override = std::nullopt,
                          bool record_traces = false) {
    const int n = problem.dimension();
    const auto obj = problem.cascade_objective();
    const NmConfig coarse_cfg =
        coarse_override.value_or(NmConfig::coarse(n, obj.e_max_coarse));
    const NmConfig fine_cfg = fine_override.value_or(NmConfig::fine(n, obj.e_max_fine));

    const auto outcome = run_cascade(obj, ms, coarse_cfg, fine_cfg, record_traces);

    RunResult rr;
    rr.best = outcome.best;
    rr.eval = outcome.eval;
    rr.starts = outcome.starts;
    rr.traces = outcome.traces;

    if (std::isfinite(outcome.eval)) {
        const auto fine_eval = problem.evaluate(outcome.best, GridLevel::fine);
        rr.bracket = fine_eval.bracket;
        rr.feasible = fine_eval.feasible;
        rr.grid_size = fine_eval.grid_size;
        if (fine_eval.feasible > 0) rr.gci = fine_eval.e / fine_eval.feasible;
    }

    if (!std::isfinite(rr.eval) || rr.feasible == 0)
        throw NoFeasibleDesign(problem.evaluate(outcome.best, GridLevel::fine).counters);
    return rr;
}

struct OracleResult {
    DesignPoint argmax;
    double max_eval = kNegInf;
    std::vector<double> evals;  // lattice evaluations, lexicographic order
    std::vector<DesignPoint> lattice;
};

/// Exhaustive lattice scan of the parameter box on the fine grid. Ties keep
/// the last maximal lattice point, so plateaus report their upper edge.
/// Refuses dimensions above 4 unless forced (cost grows geometrically).
inline OracleResult oracle_scan(const Problem& problem, int points_per_axis = 301,
                                bool force = false) {
    const int n = problem.dimension();
    if (n > 4 && !force)
        throw std::invalid_argument("oracle: dimension > 4; pass force to override");
    if (points_per_axis < 1)
        throw std::invalid_argument("oracle: points_per_axis must be positive");

    OracleResult res;
    std::vector<int> idx(n, 0);
    while (true) {
        DesignPoint v(n);
        for (int a = 0; a < n; ++a) {
            const auto& [lo, hi] = problem.box[a];
            v(a) = points_per_axis == 1
                       ? 0.5 * (lo + hi)
                       : lo + (hi - lo) * idx[a] / (points_per_axis - 1);
        }
        const double e = problem.evaluate(v, GridLevel::fine).e;
        res.evals.push_back(e);
        res.lattice.push_back(v);
        if (e >= res.max_eval) {
            res.max_eval = e;
            res.argmax = v;
        }
        int a = n - 1;
        while (a >= 0 && ++idx[a] == points_per_axis) idx[a--] = 0;
        if (a < 0) break;
    }
    return res;
}

}  // namespace pkmopt
