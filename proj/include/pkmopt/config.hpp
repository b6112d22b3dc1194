#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pkmopt/problem.hpp"

namespace pkmopt {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Output and runtime options carried alongside the problem definition.
struct OutputConfig {
    std::string result_json = "result.json";
    std::string result_table;  // empty: skip the human-readable table
    bool trace = false;
    bool timings = false;
};

struct NmOverrides {
    std::optional<double> reflection, expansion, contraction, shrink;
    std::optional<double> eps1, eps2;
    std::optional<int> coarse_max_iter, fine_max_iter;
    std::optional<double> coarse_margin, fine_margin;
    std::optional<double> coarse_limit, fine_limit;

    NmConfig apply_coarse(NmConfig c) const {
        if (reflection) c.reflection = *reflection;
        if (expansion) c.expansion = *expansion;
        if (contraction) c.contraction = *contraction;
        if (shrink) c.shrink = *shrink;
        if (eps1) c.eps1 = *eps1;
        if (eps2) c.eps2 = *eps2;
        if (coarse_max_iter) c.max_iter = *coarse_max_iter;
        if (coarse_margin) c.margin = *coarse_margin;
        if (coarse_limit) c.limit = *coarse_limit;
        return c;
    }
    NmConfig apply_fine(NmConfig c) const {
        if (reflection) c.reflection = *reflection;
        if (expansion) c.expansion = *expansion;
        if (contraction) c.contraction = *contraction;
        if (shrink) c.shrink = *shrink;
        if (eps1) c.eps1 = *eps1;
        if (eps2) c.eps2 = *eps2;
        if (fine_max_iter) c.max_iter = *fine_max_iter;
        if (fine_margin) c.margin = *fine_margin;
        if (fine_limit) c.limit = *fine_limit;
        return c;
    }
};

enum class ObjectiveKind { workspace, gci, vaf };

/// Everything a run needs, parsed from the sectioned key=value config file.
/// Angles are radians throughout.
struct ProblemConfig {
    MechKind mechanism = MechKind::lambda;
    ObjectiveKind objective = ObjectiveKind::gci;
    Box box;
    RdwSpec rdw;
    ConstraintConfig constraints;
    RewardStrategy reward;
    MultiStartConfig multistart;
    NmOverrides nm;
    OutputConfig output;

    Problem problem() const {
        Problem p;
        p.mech = make_model(mechanism);
        p.box = box;
        p.rdw = rdw;
        p.constraints = constraints;
        p.reward = reward;
        return p;
    }

    MultiStartConfig multistart_with_box() const {
        MultiStartConfig ms = multistart;
        ms.box = box;
        return ms;
    }
};

// ---------------------------------------------------------------------------
// defaults reproducing the experiment setups of the three mechanisms
// ---------------------------------------------------------------------------

inline ProblemConfig default_config(MechKind kind) {
    using std::numbers::pi;
    ProblemConfig c;
    c.mechanism = kind;
    switch (kind) {
        case MechKind::lambda:
            c.objective = ObjectiveKind::gci;
            c.box = {{1.0, 4.0}};
            c.rdw.shape = RdwShape::interval;
            c.rdw.center = {pi / 2};
            c.rdw.half_extents = {pi / 4};
            c.rdw.fine_points_per_axis = 100;
            c.rdw.coarse_points_per_axis = 10;
            c.constraints.collision_enabled = false;
            c.multistart.starts = 100;
            break;
        case MechKind::ups2:
            c.objective = ObjectiveKind::gci;
            c.box = {{0.25, 1.5}, {-1.745, 1.745}, {-0.1, 0.1},   // a1 phi1 h1
                     {0.25, 2.0}, {-1.745, 1.745}, {-0.1, 0.1},   // b1 psi1 h2
                     {0.25, 1.5}, {-1.745, 1.745}, {-0.1, 0.1},   // a2 phi2 h3
                     {0.25, 2.0}, {-1.745, 1.745}, {-0.1, 0.1},   // b2 psi2 h4
                     {1.0, 4.0}};                                 // t
            c.rdw.shape = RdwShape::disk;
            c.rdw.center = {0.0, 0.0};
            c.rdw.half_extents = {1.0};
            c.rdw.fine_points_per_axis = 101;
            c.rdw.coarse_points_per_axis = 11;
            c.constraints.passive_limits = {{-pi / 6, pi / 6}, {-pi / 6, pi / 6}};
            c.constraints.collision_enabled = true;
            c.multistart.starts = 200;
            break;
        case MechKind::rpr3:
            c.objective = ObjectiveKind::gci;
            c.reward.kind = RewardKind::center_biased;
            c.reward.inner = RewardKind::quality;
            c.box = {{1.0, 10.0}, {0.0, 2 * pi}, {0.0, 2 * pi}, {0.0, 2 * pi}};
            c.rdw.shape = RdwShape::box;
            c.rdw.center = {0.0, 0.0, 0.0};
            c.rdw.half_extents = {0.3, 0.3, 0.261};
            c.rdw.fine_points_per_axis = 41;
            c.rdw.coarse_points_per_axis = 5;
            c.constraints.collision_enabled = false;
            c.multistart.starts = 30;
            break;
    }
    return c;
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace config_detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

struct RawConfig {
    // section -> key -> value, plus key order for round-tripping
    std::map<std::string, std::map<std::string, std::string>> values;

    std::optional<std::string> get(const std::string& sec, const std::string& key) const {
        auto s = values.find(sec);
        if (s == values.end()) return std::nullopt;
        auto k = s->second.find(key);
        if (k == s->second.end()) return std::nullopt;
        return k->second;
    }
};

inline RawConfig parse_raw(std::istream& in) {
    RawConfig raw;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            raw.values[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || section.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        raw.values[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return raw;
}

inline double parse_double(const std::string& path, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError(path + ": not a number: '" + v + "'");
    }
}

inline int parse_int(const std::string& path, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int i = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        throw ConfigError(path + ": not an integer: '" + v + "'");
    }
}

inline bool parse_bool(const std::string& path, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(path + ": not a boolean: '" + v + "'");
}

inline std::vector<std::string> split(const std::string& v, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    if (out.empty()) out.push_back("");
    return out;
}

// "lo:hi, lo:hi, ..." -> interval list
inline std::vector<std::pair<double, double>> parse_intervals(const std::string& path,
                                                              const std::string& v) {
    std::vector<std::pair<double, double>> out;
    for (const auto& part : split(v, ',')) {
        const auto bounds = split(part, ':');
        if (bounds.size() != 2) throw ConfigError(path + ": expected lo:hi, got '" + part + "'");
        out.emplace_back(parse_double(path, bounds[0]), parse_double(path, bounds[1]));
    }
    return out;
}

inline std::vector<double> parse_list(const std::string& path, const std::string& v) {
    std::vector<double> out;
    for (const auto& part : split(v, ','))
        out.push_back(parse_double(path, part));
    return out;
}

}  // namespace config_detail

inline void validate_config(const ProblemConfig& cfg);

inline ProblemConfig parse_config(std::istream& in) {
    using namespace config_detail;
    const RawConfig raw = parse_raw(in);

    const auto need = [&](const std::string& sec, const std::string& key) {
        auto v = raw.get(sec, key);
        if (!v) throw ConfigError("[" + sec + "]." + key + ": missing required key");
        return *v;
    };

    // mechanism first, so that per-mechanism defaults apply
    const std::string mech_name = need("problem", "mechanism");
    MechKind kind;
    if (mech_name == "lambda") kind = MechKind::lambda;
    else if (mech_name == "ups2") kind = MechKind::ups2;
    else if (mech_name == "rpr3") kind = MechKind::rpr3;
    else throw ConfigError("[problem].mechanism: unknown mechanism '" + mech_name + "'");

    ProblemConfig cfg = default_config(kind);

    if (auto v = raw.get("problem", "objective")) {
        if (*v == "workspace") cfg.objective = ObjectiveKind::workspace;
        else if (*v == "gci") cfg.objective = ObjectiveKind::gci;
        else if (*v == "vaf") cfg.objective = ObjectiveKind::vaf;
        else throw ConfigError("[problem].objective: unknown objective '" + *v + "'");
    }
    if (auto v = raw.get("problem", "box"))
        cfg.box = parse_intervals("[problem].box", *v);
    if (auto v = raw.get("problem", "workers"))
        cfg.multistart.workers = parse_int("[problem].workers", *v);

    if (auto v = raw.get("rdw", "shape")) {
        if (*v == "interval") cfg.rdw.shape = RdwShape::interval;
        else if (*v == "disk") cfg.rdw.shape = RdwShape::disk;
        else if (*v == "box" || *v == "box-times-interval") cfg.rdw.shape = RdwShape::box;
        else throw ConfigError("[rdw].shape: unknown shape '" + *v + "'");
    }
    if (auto v = raw.get("rdw", "center"))
        cfg.rdw.center = parse_list("[rdw].center", *v);
    if (auto v = raw.get("rdw", "half_extents"))
        cfg.rdw.half_extents = parse_list("[rdw].half_extents", *v);
    if (auto v = raw.get("rdw", "fine_points_per_axis"))
        cfg.rdw.fine_points_per_axis = parse_int("[rdw].fine_points_per_axis", *v);
    if (auto v = raw.get("rdw", "coarse_points_per_axis"))
        cfg.rdw.coarse_points_per_axis = parse_int("[rdw].coarse_points_per_axis", *v);

    if (auto v = raw.get("constraints", "passive_limits"))
        cfg.constraints.passive_limits =
            v->empty() ? std::vector<std::pair<double, double>>{}
                       : parse_intervals("[constraints].passive_limits", *v);
    if (auto v = raw.get("constraints", "collision_enabled"))
        cfg.constraints.collision_enabled = parse_bool("[constraints].collision_enabled", *v);
    if (auto v = raw.get("constraints", "collision_threshold_len"))
        cfg.constraints.collision_threshold =
            parse_double("[constraints].collision_threshold_len", *v);
    if (auto v = raw.get("constraints", "singular_tol"))
        cfg.constraints.singular_tol = parse_double("[constraints].singular_tol", *v);
    if (auto v = raw.get("constraints", "stroke"))
        cfg.constraints.stroke = parse_double("[constraints].stroke", *v);
    if (auto v = raw.get("constraints", "bracket_steps"))
        cfg.constraints.bracket_steps = parse_int("[constraints].bracket_steps", *v);

    if (auto v = raw.get("reward", "kind")) {
        if (*v == "binary") cfg.reward.kind = RewardKind::binary;
        else if (*v == "quality") cfg.reward.kind = RewardKind::quality;
        else if (*v == "vaf") cfg.reward.kind = RewardKind::vaf;
        else if (*v == "center_biased") cfg.reward.kind = RewardKind::center_biased;
        else throw ConfigError("[reward].kind: unknown kind '" + *v + "'");
    }
    if (auto v = raw.get("reward", "inner")) {
        if (*v == "binary") cfg.reward.inner = RewardKind::binary;
        else if (*v == "quality") cfg.reward.inner = RewardKind::quality;
        else if (*v == "vaf") cfg.reward.inner = RewardKind::vaf;
        else throw ConfigError("[reward].inner: unknown kind '" + *v + "'");
    }
    if (auto v = raw.get("reward", "vaf_range")) {
        const auto iv = parse_intervals("[reward].vaf_range", *v);
        if (iv.size() != 1) throw ConfigError("[reward].vaf_range: expected one lo:hi pair");
        cfg.reward.vaf_low = iv[0].first;
        cfg.reward.vaf_high = iv[0].second;
    }

    // the objective choice selects the reward unless [reward].kind was given;
    // a center_biased default keeps the bias and swaps the inner reward
    if (!raw.get("reward", "kind")) {
        RewardKind sel = RewardKind::quality;
        switch (cfg.objective) {
            case ObjectiveKind::workspace: sel = RewardKind::binary; break;
            case ObjectiveKind::gci: sel = RewardKind::quality; break;
            case ObjectiveKind::vaf: sel = RewardKind::vaf; break;
        }
        if (cfg.reward.kind == RewardKind::center_biased)
            cfg.reward.inner = sel;
        else
            cfg.reward.kind = sel;
    }

    if (auto v = raw.get("nm", "reflection")) cfg.nm.reflection = parse_double("[nm].reflection", *v);
    if (auto v = raw.get("nm", "expansion")) cfg.nm.expansion = parse_double("[nm].expansion", *v);
    if (auto v = raw.get("nm", "contraction")) cfg.nm.contraction = parse_double("[nm].contraction", *v);
    if (auto v = raw.get("nm", "shrink")) cfg.nm.shrink = parse_double("[nm].shrink", *v);
    if (auto v = raw.get("nm", "eps1")) cfg.nm.eps1 = parse_double("[nm].eps1", *v);
    if (auto v = raw.get("nm", "eps2")) cfg.nm.eps2 = parse_double("[nm].eps2", *v);
    if (auto v = raw.get("nm", "coarse_max_iter")) cfg.nm.coarse_max_iter = parse_int("[nm].coarse_max_iter", *v);
    if (auto v = raw.get("nm", "fine_max_iter")) cfg.nm.fine_max_iter = parse_int("[nm].fine_max_iter", *v);
    if (auto v = raw.get("nm", "coarse_margin")) cfg.nm.coarse_margin = parse_double("[nm].coarse_margin", *v);
    if (auto v = raw.get("nm", "fine_margin")) cfg.nm.fine_margin = parse_double("[nm].fine_margin", *v);
    if (auto v = raw.get("nm", "coarse_limit")) cfg.nm.coarse_limit = parse_double("[nm].coarse_limit", *v);
    if (auto v = raw.get("nm", "fine_limit")) cfg.nm.fine_limit = parse_double("[nm].fine_limit", *v);

    if (auto v = raw.get("multistart", "starts"))
        cfg.multistart.starts = parse_int("[multistart].starts", *v);
    if (auto v = raw.get("multistart", "fine_starts"))
        cfg.multistart.fine_starts = parse_int("[multistart].fine_starts", *v);
    if (auto v = raw.get("multistart", "fine_simplex_scale"))
        cfg.multistart.fine_simplex_scale = parse_double("[multistart].fine_simplex_scale", *v);

    if (auto v = raw.get("output", "result_json")) cfg.output.result_json = *v;
    if (auto v = raw.get("output", "result_table")) cfg.output.result_table = *v;
    if (auto v = raw.get("output", "trace")) cfg.output.trace = parse_bool("[output].trace", *v);
    if (auto v = raw.get("output", "timings")) cfg.output.timings = parse_bool("[output].timings", *v);

    validate_config(cfg);
    return cfg;
}

inline ProblemConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config(in);
}

inline void validate_config(const ProblemConfig& cfg) {
    const int expect_dim = make_model(cfg.mechanism).param_dim;
    if (static_cast<int>(cfg.box.size()) != expect_dim)
        throw ConfigError("[problem].box: expected " + std::to_string(expect_dim) +
                          " axes, got " + std::to_string(cfg.box.size()));
    for (std::size_t i = 0; i < cfg.box.size(); ++i)
        if (!(cfg.box[i].first < cfg.box[i].second))
            throw ConfigError("[problem].box: axis " + std::to_string(i) + " is empty");

    try {
        cfg.rdw.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("[rdw]: ") + e.what());
    }
    const int pose_dim = make_model(cfg.mechanism).pose_dim;
    if (cfg.rdw.axes() != pose_dim)
        throw ConfigError("[rdw].shape: mechanism needs " + std::to_string(pose_dim) +
                          " workspace axes, shape provides " + std::to_string(cfg.rdw.axes()));

    try {
        cfg.constraints.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("[constraints]: ") + e.what());
    }

    if (cfg.reward.kind == RewardKind::center_biased &&
        cfg.reward.inner == RewardKind::center_biased)
        throw ConfigError("[reward].inner: center_biased cannot nest itself");
    if (!(cfg.reward.vaf_low < cfg.reward.vaf_high))
        throw ConfigError("[reward].vaf_range: low must be < high");

    if (cfg.multistart.starts < 1)
        throw ConfigError("[multistart].starts: must be >= 1");
    if (cfg.multistart.fine_starts > cfg.multistart.starts)
        throw ConfigError("[multistart].fine_starts: must be <= starts");
    if (!(cfg.multistart.fine_simplex_scale > 0 && cfg.multistart.fine_simplex_scale < 1))
        throw ConfigError("[multistart].fine_simplex_scale: must be in (0,1)");
    if (expect_dim > sobol_detail::kMaxDim)
        throw ConfigError("[problem].mechanism: dimension exceeds the Sobol table");
    if (cfg.multistart.workers < 1)
        throw ConfigError("[problem].workers: must be >= 1");

    if (cfg.nm.reflection && !(*cfg.nm.reflection > 0))
        throw ConfigError("[nm].reflection: must be > 0");
    if (cfg.nm.expansion && !(*cfg.nm.expansion > 1))
        throw ConfigError("[nm].expansion: must be > 1");
    if (cfg.nm.contraction &&
        !(*cfg.nm.contraction > 0 &&
          *cfg.nm.contraction < cfg.nm.reflection.value_or(1.0)))
        throw ConfigError("[nm].contraction: must be in (0, reflection)");
    if (cfg.nm.shrink && !(*cfg.nm.shrink > 0 && *cfg.nm.shrink < 1))
        throw ConfigError("[nm].shrink: must be in (0,1)");
    for (const auto& [name, v] :
         {std::pair{"coarse_margin", cfg.nm.coarse_margin},
          std::pair{"fine_margin", cfg.nm.fine_margin}})
        if (v && !(*v >= 1.0))
            throw ConfigError(std::string("[nm].") + name + ": must be >= 1");
    for (const auto& [name, v] :
         {std::pair{"coarse_limit", cfg.nm.coarse_limit},
          std::pair{"fine_limit", cfg.nm.fine_limit}})
        if (v && !(*v > 0.0 && *v <= 1.0))
            throw ConfigError(std::string("[nm].") + name + ": must be in (0,1]");
}

// ---------------------------------------------------------------------------
// serialization (diff-able experiment configs)
// ---------------------------------------------------------------------------

inline std::string serialize_config(const ProblemConfig& cfg) {
    std::ostringstream os;
    os.precision(17);

    const auto mech_name = [&] {
        switch (cfg.mechanism) {
            case MechKind::lambda: return "lambda";
            case MechKind::ups2: return "ups2";
            case MechKind::rpr3: return "rpr3";
        }
        return "?";
    }();
    const auto obj_name = [&] {
        switch (cfg.objective) {
            case ObjectiveKind::workspace: return "workspace";
            case ObjectiveKind::gci: return "gci";
            case ObjectiveKind::vaf: return "vaf";
        }
        return "?";
    }();
    const auto reward_name = [](RewardKind k) {
        switch (k) {
            case RewardKind::binary: return "binary";
            case RewardKind::quality: return "quality";
            case RewardKind::vaf: return "vaf";
            case RewardKind::center_biased: return "center_biased";
        }
        return "?";
    };

    os << "[problem]\n";
    os << "mechanism = " << mech_name << "\n";
    os << "objective = " << obj_name << "\n";
    os << "box = ";
    for (std::size_t i = 0; i < cfg.box.size(); ++i)
        os << (i ? ", " : "") << cfg.box[i].first << ":" << cfg.box[i].second;
    os << "\n";
    os << "workers = " << cfg.multistart.workers << "\n\n";

    os << "[rdw]\n";
    os << "shape = "
       << (cfg.rdw.shape == RdwShape::interval
               ? "interval"
               : cfg.rdw.shape == RdwShape::disk ? "disk" : "box-times-interval")
       << "\n";
    os << "center = ";
    for (std::size_t i = 0; i < cfg.rdw.center.size(); ++i)
        os << (i ? ", " : "") << cfg.rdw.center[i];
    os << "\nhalf_extents = ";
    for (std::size_t i = 0; i < cfg.rdw.half_extents.size(); ++i)
        os << (i ? ", " : "") << cfg.rdw.half_extents[i];
    os << "\nfine_points_per_axis = " << cfg.rdw.fine_points_per_axis << "\n";
    os << "coarse_points_per_axis = " << cfg.rdw.coarse_points_per_axis << "\n\n";

    os << "[constraints]\n";
    os << "passive_limits = ";
    for (std::size_t i = 0; i < cfg.constraints.passive_limits.size(); ++i)
        os << (i ? ", " : "") << cfg.constraints.passive_limits[i].first << ":"
           << cfg.constraints.passive_limits[i].second;
    os << "\ncollision_enabled = " << (cfg.constraints.collision_enabled ? "true" : "false") << "\n";
    os << "collision_threshold_len = " << cfg.constraints.collision_threshold << "\n";
    os << "singular_tol = " << cfg.constraints.singular_tol << "\n";
    os << "stroke = " << cfg.constraints.stroke << "\n";
    os << "bracket_steps = " << cfg.constraints.bracket_steps << "\n\n";

    os << "[reward]\n";
    os << "kind = " << reward_name(cfg.reward.kind) << "\n";
    if (cfg.reward.kind == RewardKind::center_biased)
        os << "inner = " << reward_name(cfg.reward.inner) << "\n";
    os << "vaf_range = " << cfg.reward.vaf_low << ":" << cfg.reward.vaf_high << "\n\n";

    os << "[nm]\n";
    if (cfg.nm.reflection) os << "reflection = " << *cfg.nm.reflection << "\n";
    if (cfg.nm.expansion) os << "expansion = " << *cfg.nm.expansion << "\n";
    if (cfg.nm.contraction) os << "contraction = " << *cfg.nm.contraction << "\n";
    if (cfg.nm.shrink) os << "shrink = " << *cfg.nm.shrink << "\n";
    if (cfg.nm.eps1) os << "eps1 = " << *cfg.nm.eps1 << "\n";
    if (cfg.nm.eps2) os << "eps2 = " << *cfg.nm.eps2 << "\n";
    if (cfg.nm.coarse_max_iter) os << "coarse_max_iter = " << *cfg.nm.coarse_max_iter << "\n";
    if (cfg.nm.fine_max_iter) os << "fine_max_iter = " << *cfg.nm.fine_max_iter << "\n";
    if (cfg.nm.coarse_margin) os << "coarse_margin = " << *cfg.nm.coarse_margin << "\n";
    if (cfg.nm.fine_margin) os << "fine_margin = " << *cfg.nm.fine_margin << "\n";
    if (cfg.nm.coarse_limit) os << "coarse_limit = " << *cfg.nm.coarse_limit << "\n";
    if (cfg.nm.fine_limit) os << "fine_limit = " << *cfg.nm.fine_limit << "\n";
    os << "\n[multistart]\n";
    os << "starts = " << cfg.multistart.starts << "\n";
    os << "fine_starts = " << cfg.multistart.fine_starts << "\n";
    os << "fine_simplex_scale = " << cfg.multistart.fine_simplex_scale << "\n\n";

    os << "[output]\n";
    os << "result_json = " << cfg.output.result_json << "\n";
    if (!cfg.output.result_table.empty())
        os << "result_table = " << cfg.output.result_table << "\n";
    os << "trace = " << (cfg.output.trace ? "true" : "false") << "\n";
    os << "timings = " << (cfg.output.timings ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace pkmopt
