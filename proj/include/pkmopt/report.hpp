#pragma once

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pkmopt/config.hpp"
#include "pkmopt/problem.hpp"

namespace pkmopt {

using Json = nlohmann::ordered_json;

namespace report_detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline Json point_json(const DesignPoint& p) {
    Json arr = Json::array();
    for (int i = 0; i < p.size(); ++i) arr.push_back(p(i));
    return arr;
}

}  // namespace report_detail

/// Workspace axis labels for the grid CSV header.
inline std::vector<std::string> pose_axis_names(MechKind kind) {
    switch (kind) {
        case MechKind::lambda: return {"theta"};
        case MechKind::ups2: return {"alpha", "beta"};
        case MechKind::rpr3: return {"x", "y", "phi"};
    }
    return {};
}

/// Result document for cmd_optimize. Deterministic for a fixed config:
/// wall-clock timings enter only when `timings` is set.
inline Json run_result_json(const RunResult& rr, const ProblemConfig& cfg, bool timings) {
    Json j;
    j["mechanism"] = cfg.mechanism == MechKind::lambda
                         ? "lambda"
                         : cfg.mechanism == MechKind::ups2 ? "ups2" : "rpr3";
    j["best_point"] = report_detail::point_json(rr.best);
    j["evaluation"] = rr.eval;
    j["gci"] = rr.gci;
    j["feasible_poses"] = rr.feasible;
    j["grid_size"] = rr.grid_size;
    if (rr.bracket) {
        j["actuator_bracket"] = {{"rho_min", rr.bracket->rho_min},
                                 {"rho_max", rr.bracket->rho_max},
                                 {"ratio", rr.bracket->ratio()}};
    } else {
        j["actuator_bracket"] = nullptr;
    }
    Json starts = Json::array();
    for (const auto& s : rr.starts) {
        Json e;
        e["id"] = s.id;
        e["stage"] = s.stage;
        e["point"] = report_detail::point_json(s.point);
        e["evaluation"] = s.eval;
        e["iterations"] = s.iterations;
        if (timings) e["wall_ms"] = s.wall_ms;
        starts.push_back(std::move(e));
    }
    j["starts"] = std::move(starts);
    return j;
}

/// Aligned text table mirroring the shape of the result tables in the docs.
inline std::string run_result_table(const RunResult& rr, const ProblemConfig& cfg) {
    std::ostringstream os;
    os.precision(6);
    const auto row = [&](const std::string& k, const std::string& v) {
        os << std::left << std::setw(28) << k << "| " << v << "\n";
    };
    std::ostringstream pt;
    pt.precision(6);
    pt << "[";
    for (int i = 0; i < rr.best.size(); ++i) pt << (i ? ", " : "") << rr.best(i);
    pt << "]";
    row("Objective function",
        cfg.objective == ObjectiveKind::workspace
            ? "Workspace"
            : cfg.objective == ObjectiveKind::gci ? "Global Conditioning Index" : "VAF");
    row("Best point", pt.str());
    {
        std::ostringstream v;
        v.precision(6);
        v << rr.eval << "  (mean " << rr.gci << " over " << rr.feasible << " poses)";
        row("Evaluation", v.str());
    }
    if (rr.bracket) {
        std::ostringstream v;
        v.precision(4);
        v << "[" << rr.bracket->rho_min << ", " << rr.bracket->rho_max << "]";
        row("Best actuator range", v.str());
    }
    return os.str();
}

/// Per-start traces in JSON-lines form: one record per proposal.
inline void write_trace_jsonl(std::ostream& os, const RunResult& rr) {
    for (std::size_t t = 0; t < rr.traces.size() && t < rr.starts.size(); ++t) {
        for (const auto& step : rr.traces[t]) {
            Json j;
            j["start"] = rr.starts[t].id;
            j["stage"] = rr.starts[t].stage;
            j["step"] = step.step;
            j["op"] = nm_op_name(step.op);
            j["point"] = report_detail::point_json(step.point);
            j["evaluation"] = step.eval;
            j["accepted"] = step.accepted;
            os << j.dump() << "\n";
        }
    }
}

/// Grid dump CSV. Header: pose axes, detJ, quality, rho1..rhoL, clearance,
/// reward, feasible. Floats print as shortest-roundtrip %.17g; re-runs are
/// byte-identical.
inline void write_grid_csv(std::ostream& os, const std::vector<GridRow>& rows,
                           MechKind kind, int legs) {
    using report_detail::fmt;
    const auto axes = pose_axis_names(kind);
    for (const auto& a : axes) os << a << ",";
    os << "detJ,quality";
    for (int l = 1; l <= legs; ++l) os << ",rho" << l;
    os << ",clearance,reward,feasible\n";
    for (const auto& r : rows) {
        for (int a = 0; a < r.pose.size(); ++a) os << fmt(r.pose(a)) << ",";
        os << fmt(r.detJ) << "," << fmt(r.quality);
        for (int l = 0; l < legs; ++l)
            os << "," << (l < static_cast<int>(r.rho.size()) ? fmt(r.rho[l]) : "nan");
        os << "," << (r.clearance ? fmt(*r.clearance) : "nan");
        os << "," << fmt(r.reward) << "," << (r.feasible ? 1 : 0) << "\n";
    }
}

/// Evaluation report for cmd_evaluate: summary statistics of the quality
/// field over the feasible, in-bracket poses.
struct EvaluationReport {
    double e = kNegInf;
    long feasible = 0;
    long grid_size = 0;
    double gci_mean = 0.0;
    double gci_std = 0.0;
    double quality_max = 0.0;
    Pose quality_max_pose;
    double quality_min = 0.0;
    Pose quality_min_pose;
    std::optional<ActuatorBracket> bracket;
    bool singular = false;
};

inline EvaluationReport make_evaluation_report(const Problem& problem,
                                               const DesignPoint& v, GridLevel level) {
    EvaluationReport rep;
    const auto res = problem.evaluate(v, level);
    rep.e = res.e;
    rep.grid_size = res.grid_size;
    rep.bracket = res.bracket;
    if (!std::isfinite(res.e)) {
        rep.singular = true;
        return rep;
    }

    // per-pose qualities of the feasible set, restricted to the bracket
    const auto rows = evaluate_grid(v, problem.mech, problem.rdw, problem.constraints,
                                    problem.reward, level);
    double sum = 0.0, sum2 = 0.0;
    long count = 0;
    for (const auto& r : rows) {
        if (!r.feasible) continue;
        if (rep.bracket) {
            bool inside = true;
            for (double rho : r.rho)
                if (rho < rep.bracket->rho_min * (1.0 - kBracketRelTol) ||
                    rho > rep.bracket->rho_max * (1.0 + kBracketRelTol)) {
                    inside = false;
                    break;
                }
            if (!inside) continue;
        }
        if (count == 0 || r.quality > rep.quality_max) {
            rep.quality_max = r.quality;
            rep.quality_max_pose = r.pose;
        }
        if (count == 0 || r.quality < rep.quality_min) {
            rep.quality_min = r.quality;
            rep.quality_min_pose = r.pose;
        }
        sum += r.quality;
        sum2 += r.quality * r.quality;
        ++count;
    }
    rep.feasible = count;
    if (count > 0) {
        rep.gci_mean = sum / count;
        const double var = std::max(0.0, sum2 / count - rep.gci_mean * rep.gci_mean);
        rep.gci_std = std::sqrt(var);
    }
    return rep;
}

inline Json evaluation_report_json(const EvaluationReport& rep, const DesignPoint& v) {
    Json j;
    j["point"] = report_detail::point_json(v);
    if (rep.singular) {
        j["evaluation"] = "-inf";
        j["singular"] = true;
        return j;
    }
    j["evaluation"] = rep.e;
    j["feasible_poses"] = rep.feasible;
    j["grid_size"] = rep.grid_size;
    j["gci_mean"] = rep.gci_mean;
    j["gci_std"] = rep.gci_std;
    j["quality_max"] = rep.quality_max;
    j["quality_max_pose"] = report_detail::point_json(rep.quality_max_pose);
    j["quality_min"] = rep.quality_min;
    j["quality_min_pose"] = report_detail::point_json(rep.quality_min_pose);
    if (rep.bracket)
        j["actuator_bracket"] = {{"rho_min", rep.bracket->rho_min},
                                 {"rho_max", rep.bracket->rho_max},
                                 {"ratio", rep.bracket->ratio()}};
    else
        j["actuator_bracket"] = nullptr;
    return j;
}

}  // namespace pkmopt
