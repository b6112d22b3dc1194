#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "pkmopt/config.hpp"
#include "pkmopt/report.hpp"

using namespace pkmopt;
using Catch::Matchers::ContainsSubstring;

namespace {

ProblemConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

constexpr const char* kLambdaGci = R"(
# lambda mechanism, conditioning objective
[problem]
mechanism = lambda
objective = gci
box = 1:4

[rdw]
shape = interval
center = 1.5707963267948966
half_extents = 0.7853981633974483
fine_points_per_axis = 100
coarse_points_per_axis = 10

[constraints]
stroke = 1.5
bracket_steps = 100

[multistart]
starts = 100
fine_starts = 10
)";

}  // namespace

TEST_CASE("parses a full lambda config") {
    const auto cfg = parse(kLambdaGci);
    CHECK(cfg.mechanism == MechKind::lambda);
    CHECK(cfg.objective == ObjectiveKind::gci);
    CHECK(cfg.reward.kind == RewardKind::quality);
    REQUIRE(cfg.box.size() == 1);
    CHECK(cfg.box[0].first == 1.0);
    CHECK(cfg.box[0].second == 4.0);
    CHECK(cfg.rdw.fine_points_per_axis == 100);
    CHECK(cfg.multistart.starts == 100);
    CHECK(cfg.multistart.fine_starts == 10);
}

TEST_CASE("objective selects the reward kind") {
    auto cfg = parse("[problem]\nmechanism = lambda\nobjective = workspace\n");
    CHECK(cfg.reward.kind == RewardKind::binary);
    cfg = parse("[problem]\nmechanism = lambda\nobjective = vaf\n");
    CHECK(cfg.reward.kind == RewardKind::vaf);
    // rpr3 keeps its center bias and swaps the inner reward
    cfg = parse("[problem]\nmechanism = rpr3\nobjective = workspace\n");
    CHECK(cfg.reward.kind == RewardKind::center_biased);
    CHECK(cfg.reward.inner == RewardKind::binary);
}

TEST_CASE("mechanism defaults reproduce the experiment tables") {
    const auto ups = default_config(MechKind::ups2);
    REQUIRE(ups.box.size() == 13);
    CHECK(ups.box[0] == std::pair{0.25, 1.5});       // a1
    CHECK(ups.box[12] == std::pair{1.0, 4.0});       // t
    CHECK(ups.rdw.shape == RdwShape::disk);
    CHECK(ups.rdw.half_extents[0] == 1.0);
    CHECK(ups.constraints.collision_enabled);
    REQUIRE(ups.constraints.passive_limits.size() == 2);
    CHECK(ups.constraints.passive_limits[0].second == Catch::Approx(0.5235987755982988));
    CHECK(ups.multistart.starts == 200);
    CHECK(ups.constraints.stroke == 1.5);

    const auto rpr = default_config(MechKind::rpr3);
    REQUIRE(rpr.box.size() == 4);
    CHECK(rpr.box[0] == std::pair{1.0, 10.0});
    CHECK(rpr.rdw.shape == RdwShape::box);
    CHECK(rpr.rdw.half_extents[0] == 0.3);         // square of side 0.6
    CHECK(rpr.rdw.half_extents[2] == 0.261);
    CHECK(rpr.reward.kind == RewardKind::center_biased);
    CHECK_FALSE(rpr.constraints.collision_enabled);
    CHECK(rpr.multistart.starts == 30);
}

TEST_CASE("diagnostics carry the failing field path") {
    const auto expect_error = [](const std::string& text, const std::string& needle) {
        try {
            parse(text);
            FAIL("expected ConfigError for: " << needle);
        } catch (const ConfigError& e) {
            CHECK_THAT(e.what(), ContainsSubstring(needle));
        }
    };
    expect_error("[problem]\nmechanism = hexapod\n", "[problem].mechanism");
    expect_error("[problem]\nmechanism = lambda\nbox = 4:1\n", "[problem].box");
    expect_error("[problem]\nmechanism = lambda\nbox = 1:4, 0:1\n", "[problem].box");
    expect_error("[problem]\nmechanism = lambda\n[constraints]\nstroke = 2.5\n",
                 "stroke");
    expect_error("[problem]\nmechanism = lambda\n[constraints]\nstroke = abc\n",
                 "[constraints].stroke");
    expect_error("[problem]\nmechanism = lambda\n[rdw]\nshape = disk\n", "[rdw]");
    expect_error("[problem]\nmechanism = lambda\n[multistart]\nstarts = 0\n",
                 "[multistart].starts");
    expect_error("[problem]\nmechanism = lambda\n[reward]\nvaf_range = 3:0.3\n",
                 "[reward].vaf_range");
    expect_error("[problem]\nmechanism = lambda\n[nm]\nexpansion = 0.5\n",
                 "[nm].expansion");
}

TEST_CASE("missing mechanism is rejected") {
    CHECK_THROWS_AS(parse("[problem]\nobjective = gci\n"), ConfigError);
}

TEST_CASE("config round-trips through serialization") {
    const auto cfg = parse(kLambdaGci);
    const std::string text = serialize_config(cfg);
    const auto cfg2 = parse(text);
    const std::string text2 = serialize_config(cfg2);
    CHECK(text == text2);

    CHECK(cfg2.mechanism == cfg.mechanism);
    CHECK(cfg2.objective == cfg.objective);
    CHECK(cfg2.box == cfg.box);
    CHECK(cfg2.rdw.center == cfg.rdw.center);
    CHECK(cfg2.rdw.half_extents == cfg.rdw.half_extents);
    CHECK(cfg2.rdw.fine_points_per_axis == cfg.rdw.fine_points_per_axis);
    CHECK(cfg2.constraints.stroke == cfg.constraints.stroke);
    CHECK(cfg2.constraints.bracket_steps == cfg.constraints.bracket_steps);
    CHECK(cfg2.reward.kind == cfg.reward.kind);
    CHECK(cfg2.multistart.starts == cfg.multistart.starts);
    CHECK(cfg2.multistart.fine_starts == cfg.multistart.fine_starts);
}

TEST_CASE("nm overrides apply per stage") {
    const auto cfg = parse(
        "[problem]\nmechanism = lambda\n"
        "[nm]\ncoarse_max_iter = 5\nfine_max_iter = 33\ncoarse_limit = 0.7\n");
    const auto coarse = cfg.nm.apply_coarse(NmConfig::coarse(1, 100.0));
    const auto fine = cfg.nm.apply_fine(NmConfig::fine(1, 100.0));
    CHECK(coarse.max_iter == 5);
    CHECK(coarse.limit == 0.7);
    CHECK(coarse.margin == 1.05);
    CHECK(fine.max_iter == 33);
    CHECK(fine.limit == 1.0);
    CHECK(fine.margin == 1.01);
}

TEST_CASE("grid csv header names the pose axes") {
    auto cfg = default_config(MechKind::ups2);
    Eigen::VectorXd v(13);
    v << 1.13, -1.02, -0.06, 1.47, -1.01, -0.05, 0.72, 0.44, -0.02, 1.52, 0.54, 0.02, 3.04;
    auto rdw = cfg.rdw;
    rdw.coarse_points_per_axis = 3;
    const auto rows = evaluate_grid(v, cfg.problem().mech, rdw, cfg.constraints,
                                    cfg.reward, GridLevel::coarse);
    std::ostringstream os;
    write_grid_csv(os, rows, MechKind::ups2, 2);
    const std::string out = os.str();
    CHECK(out.rfind("alpha,beta,detJ,quality,rho1,rho2,clearance,reward,feasible\n", 0) == 0);
    // one line per row plus header
    CHECK(static_cast<long>(std::count(out.begin(), out.end(), '\n')) ==
          static_cast<long>(rows.size()) + 1);

    // re-running produces identical bytes
    std::ostringstream os2;
    write_grid_csv(os2, rows, MechKind::ups2, 2);
    CHECK(out == os2.str());
}

TEST_CASE("feasible flag in the dump is binary") {
    auto cfg = default_config(MechKind::lambda);
    Eigen::VectorXd v(1);
    v << 2.0;
    const auto rows = evaluate_grid(v, cfg.problem().mech, cfg.rdw, cfg.constraints,
                                    cfg.reward, GridLevel::coarse);
    std::ostringstream os;
    write_grid_csv(os, rows, MechKind::lambda, 1);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        const auto last = line.substr(line.rfind(',') + 1);
        CHECK((last == "0" || last == "1"));
    }
}
