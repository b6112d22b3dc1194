// pkmopt: config-driven design optimization of parallel kinematic mechanisms.
//
// Subcommands: optimize, evaluate, grid, oracle, sobol.
// Exit codes: 0 success, 1 usage/config error, 2 no feasible design,
//             3 internal numeric failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pkmopt/config.hpp"
#include "pkmopt/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoFeasible = 2;
constexpr int kExitNumeric = 3;

pkmopt::DesignPoint parse_point(const std::string& text, int dim) {
    const auto parts = pkmopt::config_detail::split(text, ',');
    if (static_cast<int>(parts.size()) != dim)
        throw pkmopt::ConfigError("--point: expected " + std::to_string(dim) +
                                  " comma-separated values");
    pkmopt::DesignPoint p(dim);
    for (int i = 0; i < dim; ++i)
        p(i) = pkmopt::config_detail::parse_double("--point", parts[i]);
    return p;
}

int resolved_workers(int cli_workers, int cfg_workers) {
    if (const char* env = std::getenv("PKMOPT_WORKERS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            throw pkmopt::ConfigError("PKMOPT_WORKERS: not an integer");
        }
    }
    return cli_workers > 0 ? cli_workers : cfg_workers;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw pkmopt::ConfigError("cannot write: " + path);
    return os;
}

int cmd_optimize(const std::string& config_path, const std::string& out_override,
                 int cli_workers, bool trace, bool timings) {
    auto cfg = pkmopt::parse_config_file(config_path);
    cfg.multistart.workers = resolved_workers(cli_workers, cfg.multistart.workers);
    if (trace) cfg.output.trace = true;
    if (timings) cfg.output.timings = true;
    if (!out_override.empty()) cfg.output.result_json = out_override;

    const auto problem = cfg.problem();
    const auto ms = cfg.multistart_with_box();
    const int n = problem.dimension();
    const auto obj = problem.cascade_objective();
    const auto coarse = cfg.nm.apply_coarse(pkmopt::NmConfig::coarse(n, obj.e_max_coarse));
    const auto fine = cfg.nm.apply_fine(pkmopt::NmConfig::fine(n, obj.e_max_fine));

    pkmopt::RunResult rr;
    try {
        rr = pkmopt::optimize(problem, ms, coarse, fine, cfg.output.trace);
    } catch (const pkmopt::NoFeasibleDesign& e) {
        std::cerr << "error [no-feasible-design]: " << e.what() << "\n";
        return kExitNoFeasible;
    }

    {
        auto os = open_out(cfg.output.result_json);
        os << pkmopt::run_result_json(rr, cfg, cfg.output.timings).dump(2) << "\n";
    }
    if (!cfg.output.result_table.empty()) {
        auto os = open_out(cfg.output.result_table);
        os << pkmopt::run_result_table(rr, cfg);
    }
    if (cfg.output.trace) {
        auto os = open_out(cfg.output.result_json + ".trace.jsonl");
        pkmopt::write_trace_jsonl(os, rr);
    }

    std::cout << pkmopt::run_result_table(rr, cfg);
    std::cout << "result written to " << cfg.output.result_json << "\n";
    return kExitOk;
}

int cmd_evaluate(const std::string& config_path, const std::string& point_text,
                 const std::string& level_name, const std::string& out_path) {
    const auto cfg = pkmopt::parse_config_file(config_path);
    const auto problem = cfg.problem();
    const auto point = parse_point(point_text, problem.dimension());
    if (!pkmopt::in_box(point, cfg.box))
        throw pkmopt::ConfigError("--point: outside the parameter box");
    const auto level =
        level_name == "coarse" ? pkmopt::GridLevel::coarse : pkmopt::GridLevel::fine;

    const auto rep = pkmopt::make_evaluation_report(problem, point, level);
    const auto j = pkmopt::evaluation_report_json(rep, point);
    if (!out_path.empty()) {
        auto os = open_out(out_path);
        os << j.dump(2) << "\n";
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_grid(const std::string& config_path, const std::string& point_text,
             const std::string& level_name, const std::string& out_path) {
    const auto cfg = pkmopt::parse_config_file(config_path);
    const auto problem = cfg.problem();
    const auto point = parse_point(point_text, problem.dimension());
    if (!pkmopt::in_box(point, cfg.box))
        throw pkmopt::ConfigError("--point: outside the parameter box");
    const auto level =
        level_name == "coarse" ? pkmopt::GridLevel::coarse : pkmopt::GridLevel::fine;

    const auto rows = pkmopt::evaluate_grid(point, problem.mech, problem.rdw,
                                            problem.constraints, problem.reward, level);
    auto os = open_out(out_path);
    pkmopt::write_grid_csv(os, rows, cfg.mechanism, problem.mech.legs);
    std::cout << rows.size() << " rows written to " << out_path << "\n";
    return kExitOk;
}

int cmd_oracle(const std::string& config_path, int points_per_axis, bool force) {
    const auto cfg = pkmopt::parse_config_file(config_path);
    const auto problem = cfg.problem();
    const auto res = pkmopt::oracle_scan(problem, points_per_axis, force);

    pkmopt::Json j;
    j["points_per_axis"] = points_per_axis;
    pkmopt::Json arg = pkmopt::Json::array();
    for (int i = 0; i < res.argmax.size(); ++i) arg.push_back(res.argmax(i));
    j["argmax"] = arg;
    j["max_evaluation"] = res.max_eval;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_sobol(int dim, int count) {
    const auto pts = pkmopt::sobol_points(dim, count);
    for (const auto& p : pts) {
        for (int i = 0; i < p.size(); ++i)
            std::printf("%s%.17g", i ? " " : "", p(i));
        std::printf("\n");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"design optimization for parallel kinematic mechanisms"};
    app.require_subcommand(1);

    std::string config_path, point_text, out_path, level_name = "fine";
    int workers = 0, oracle_pts = 301, sobol_dim = 1, sobol_count = 0;
    bool trace = false, timings = false, force = false;

    auto* opt = app.add_subcommand("optimize", "run the multi-start cascade");
    opt->add_option("-c,--config", config_path, "config file")->required();
    opt->add_option("-o,--out", out_path, "result JSON path (overrides config)");
    opt->add_option("--workers", workers, "worker threads");
    opt->add_flag("--trace", trace, "write per-start traces");
    opt->add_flag("--timings", timings, "include wall times in the result file");

    auto* ev = app.add_subcommand("evaluate", "evaluate one design point");
    ev->add_option("-c,--config", config_path, "config file")->required();
    ev->add_option("-p,--point", point_text, "comma-separated parameters")->required();
    ev->add_option("--level", level_name, "coarse|fine")->check(CLI::IsMember({"coarse", "fine"}));
    ev->add_option("-o,--out", out_path, "also write the report JSON here");

    auto* gr = app.add_subcommand("grid", "dump the workspace grid as CSV");
    gr->add_option("-c,--config", config_path, "config file")->required();
    gr->add_option("-p,--point", point_text, "comma-separated parameters")->required();
    gr->add_option("--level", level_name, "coarse|fine")->check(CLI::IsMember({"coarse", "fine"}));
    gr->add_option("-o,--out", out_path, "output CSV path")->required();

    auto* orc = app.add_subcommand("oracle", "exhaustive lattice scan of the box");
    orc->add_option("-c,--config", config_path, "config file")->required();
    orc->add_option("--points-per-axis", oracle_pts, "lattice resolution");
    orc->add_flag("--force", force, "allow dimensions above 4");

    auto* so = app.add_subcommand("sobol", "print Sobol points");
    so->add_option("--dim", sobol_dim, "dimension (1..16)")->required();
    so->add_option("--count", sobol_count, "number of points")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (opt->parsed()) return cmd_optimize(config_path, out_path, workers, trace, timings);
        if (ev->parsed()) return cmd_evaluate(config_path, point_text, level_name, out_path);
        if (gr->parsed()) return cmd_grid(config_path, point_text, level_name, out_path);
        if (orc->parsed()) return cmd_oracle(config_path, oracle_pts, force);
        if (so->parsed()) return cmd_sobol(sobol_dim, sobol_count);
    } catch (const pkmopt::ConfigError& e) {
        std::cerr << "error [config]: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error [config]: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error [numeric]: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
