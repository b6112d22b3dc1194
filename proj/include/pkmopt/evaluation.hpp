#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pkmopt/grid.hpp"
#include "pkmopt/mechanisms.hpp"

namespace pkmopt {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Actuator lengths and earned reward of one constraint-satisfying pose.
struct ValidPointRecord {
    std::vector<double> rho;
    double reward = 0.0;
};

struct ActuatorBracket {
    double rho_min = 0.0;
    double rho_max = 0.0;

    double ratio() const { return rho_max / rho_min; }
};

enum class RewardKind { binary, quality, vaf, center_biased };

/// Per-pose reward assignment. center_biased wraps one of the other kinds
/// and scales it by closeness to the workspace center.
struct RewardStrategy {
    RewardKind kind = RewardKind::quality;
    RewardKind inner = RewardKind::quality;  // used when kind == center_biased
    double vaf_low = 0.3;
    double vaf_high = 3.0;
};

struct ConstraintConfig {
    // [q_pmin, q_pmax] applied to the leading passive angles; shorter than
    // the mechanism's passive vector leaves the rest unconstrained.
    std::vector<std::pair<double, double>> passive_limits;
    bool collision_enabled = false;
    double collision_threshold = 0.05;  // minimum clearance, model units
    double singular_tol = 1e-9;
    double stroke = 1.5;      // rho_max <= stroke * rho_min, in [1, 2]
    int bracket_steps = 100;

    void validate() const {
        if (!(stroke >= 1.0 && stroke <= 2.0))
            throw std::invalid_argument("constraints: stroke must be in [1, 2]");
        if (collision_threshold < 0.0)
            throw std::invalid_argument("constraints: collision_threshold must be >= 0");
        if (bracket_steps < 1)
            throw std::invalid_argument("constraints: bracket_steps must be positive");
        for (const auto& [lo, hi] : passive_limits)
            if (!(lo < hi))
                throw std::invalid_argument("constraints: passive limit interval empty");
    }
};

/// Relative slack on bracket inclusion; absorbs the 1-ulp rounding of
/// stroke*(rho_max/stroke) so the sweep can close exactly on a record.
inline constexpr double kBracketRelTol = 1e-12;

/// Best stroke-constrained actuator interval over the valid records.
/// If the full spread already satisfies the stroke ratio it is returned
/// unaltered; otherwise rho_lower sweeps [rho_min, rho_max/stroke] in
/// `steps` equal increments and the bracket with the highest summed reward
/// wins (ties: smallest rho_lower).
inline std::pair<double, ActuatorBracket> best_actuator_bracket(
    const std::vector<ValidPointRecord>& records, double stroke, int steps) {
    if (records.empty())
        throw std::invalid_argument("best_actuator_bracket: no feasible points");

    double rmin = std::numeric_limits<double>::infinity();
    double rmax = 0.0;
    double total = 0.0;
    for (const auto& rec : records) {
        for (double r : rec.rho) {
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
        }
        total += rec.reward;
    }
    if (rmax <= stroke * rmin * (1.0 + kBracketRelTol))
        return {total, {rmin, rmax}};

    const double lo_end = rmax / stroke;
    double best_e = kNegInf;
    ActuatorBracket best{rmin, stroke * rmin};
    for (int i = 0; i < steps; ++i) {
        const double lo = steps == 1 ? rmin : rmin + (lo_end - rmin) * i / (steps - 1);
        const double hi = stroke * lo;
        const double lo_tol = lo * (1.0 - kBracketRelTol);
        const double hi_tol = hi * (1.0 + kBracketRelTol);
        double e = 0.0;
        for (const auto& rec : records) {
            bool inside = true;
            for (double r : rec.rho)
                if (r < lo_tol || r > hi_tol) {
                    inside = false;
                    break;
                }
            if (inside) e += rec.reward;
        }
        if (e > best_e) {
            best_e = e;
            best = {lo, hi};
        }
    }
    return {best_e, best};
}

/// Linear center-bias weight: 1 at the workspace center, 0 at the farthest
/// grid point. Distances are normalized per axis by the half extents.
inline double center_distance(const Pose& pose, const RdwSpec& rdw) {
    double d2 = 0.0;
    for (int a = 0; a < pose.size(); ++a) {
        const double u = (pose(a) - rdw.center[a]) / rdw.extent(a);
        d2 += u * u;
    }
    return std::sqrt(d2);
}

inline double center_weight(const Pose& pose, const RdwSpec& rdw, double d_max) {
    if (d_max <= 0.0) return 1.0;
    return 1.0 - center_distance(pose, rdw) / d_max;
}

inline double pose_reward(const RewardStrategy& rs, double quality, double weight) {
    const RewardKind k = rs.kind == RewardKind::center_biased ? rs.inner : rs.kind;
    double r = 0.0;
    switch (k) {
        case RewardKind::binary: r = 1.0; break;
        case RewardKind::quality: r = quality; break;
        case RewardKind::vaf: r = lambda_vaf(quality, rs.vaf_low, rs.vaf_high); break;
        case RewardKind::center_biased: break;  // not reachable as inner
    }
    return rs.kind == RewardKind::center_biased ? weight * r : r;
}

/// Which constraint most recently zeroed/killed an evaluation; feeds the
/// no-feasible-design diagnostic.
struct ConstraintCounters {
    long singular = 0;
    long passive = 0;
    long collision = 0;

    ConstraintCounters& operator+=(const ConstraintCounters& o) {
        singular += o.singular;
        passive += o.passive;
        collision += o.collision;
        return *this;
    }
};

struct EvalResult {
    double e = 0.0;
    std::vector<ValidPointRecord> records;
    std::optional<ActuatorBracket> bracket;
    long feasible = 0;      // poses satisfying constraints 1-3
    long grid_size = 0;
    ConstraintCounters counters;
};

/// Evaluates one design over the discretized RDW.
/// Constraints in order: (1) singularity -- |det J| <= tol at any pose or a
/// det J sign change between consecutive grid points aborts with e = -inf;
/// (2) passive joint limits and (3) collision clearance zero the pose reward.
/// e is the deterministic in-order sum of rewards; for prismatic mechanisms
/// the actuator bracket is selected and its filtered evaluation returned.
inline EvalResult evaluate_design(const Eigen::VectorXd& v, const MechModel& mech,
                                  const RdwSpec& rdw, const ConstraintConfig& cc,
                                  const RewardStrategy& rs, GridLevel level) {
    const auto grid = grid_points(rdw, level);

    EvalResult out;
    out.grid_size = static_cast<long>(grid.size());

    double d_max = 0.0;
    if (rs.kind == RewardKind::center_biased)
        for (const auto& pose : grid)
            d_max = std::max(d_max, center_distance(pose, rdw));

    double prev_det = 0.0;
    bool have_prev = false;
    for (const auto& pose : grid) {
        const auto ev = mech.solve(v, pose);
        if (!ev || std::abs(ev->detJ) <= cc.singular_tol ||
            (have_prev && std::signbit(ev->detJ) != std::signbit(prev_det))) {
            ++out.counters.singular;
            out.e = kNegInf;
            out.records.clear();
            out.bracket.reset();
            out.feasible = 0;
            return out;
        }
        prev_det = ev->detJ;
        have_prev = true;

        bool ok = true;
        const std::size_t nlim = std::min(cc.passive_limits.size(), ev->passive.size());
        for (std::size_t i = 0; i < nlim; ++i) {
            const auto& [lo, hi] = cc.passive_limits[i];
            if (ev->passive[i] >= hi || ev->passive[i] <= lo) {
                ok = false;
                ++out.counters.passive;
                break;
            }
        }
        if (ok && cc.collision_enabled && ev->clearance &&
            *ev->clearance < cc.collision_threshold) {
            ok = false;
            ++out.counters.collision;
        }
        if (!ok) continue;

        const double w = rs.kind == RewardKind::center_biased
                             ? center_weight(pose, rdw, d_max)
                             : 1.0;
        const double reward = pose_reward(rs, ev->quality, w);
        out.e += reward;
        out.records.push_back({ev->rho, reward});
        ++out.feasible;
    }

    if (mech.prismatic && !out.records.empty()) {
        auto [e, bracket] = best_actuator_bracket(out.records, cc.stroke, cc.bracket_steps);
        out.e = e;
        out.bracket = bracket;
    }
    return out;
}

/// One row of the grid dump behind the heatmap exporter. Unlike
/// evaluate_design this never aborts: every pose is reported with its own
/// per-pose feasibility flag.
struct GridRow {
    Pose pose;
    double detJ = 0.0;
    double quality = 0.0;
    std::vector<double> rho;
    std::optional<double> clearance;
    double reward = 0.0;
    bool feasible = false;
};

inline std::vector<GridRow> evaluate_grid(const Eigen::VectorXd& v, const MechModel& mech,
                                          const RdwSpec& rdw, const ConstraintConfig& cc,
                                          const RewardStrategy& rs, GridLevel level) {
    const auto grid = grid_points(rdw, level);

    double d_max = 0.0;
    if (rs.kind == RewardKind::center_biased)
        for (const auto& pose : grid)
            d_max = std::max(d_max, center_distance(pose, rdw));

    std::vector<GridRow> rows;
    rows.reserve(grid.size());
    for (const auto& pose : grid) {
        GridRow row;
        row.pose = pose;
        row.rho.assign(mech.legs, 0.0);
        const auto ev = mech.solve(v, pose);
        if (ev) {
            row.detJ = ev->detJ;
            row.quality = ev->quality;
            row.rho = ev->rho;
            row.clearance = ev->clearance;
            bool ok = std::abs(ev->detJ) > cc.singular_tol;
            const std::size_t nlim = std::min(cc.passive_limits.size(), ev->passive.size());
            for (std::size_t i = 0; ok && i < nlim; ++i)
                if (ev->passive[i] >= cc.passive_limits[i].second ||
                    ev->passive[i] <= cc.passive_limits[i].first)
                    ok = false;
            if (ok && cc.collision_enabled && ev->clearance &&
                *ev->clearance < cc.collision_threshold)
                ok = false;
            row.feasible = ok;
            if (ok) {
                const double w = rs.kind == RewardKind::center_biased
                                     ? center_weight(pose, rdw, d_max)
                                     : 1.0;
                row.reward = pose_reward(rs, ev->quality, w);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace pkmopt
