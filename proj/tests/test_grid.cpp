#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "pkmopt/grid.hpp"

using namespace pkmopt;
using Catch::Matchers::WithinAbs;
constexpr double pi = std::numbers::pi;

namespace {

RdwSpec interval_45_135(int coarse = 5, int fine = 50) {
    RdwSpec r;
    r.shape = RdwShape::interval;
    r.center = {pi / 2};
    r.half_extents = {pi / 4};
    r.coarse_points_per_axis = coarse;
    r.fine_points_per_axis = fine;
    return r;
}

}  // namespace

TEST_CASE("interval grid hits the endpoints") {
    const auto pts = grid_points(interval_45_135(), GridLevel::coarse);
    REQUIRE(pts.size() == 5);
    const double deg = pi / 180.0;
    const double expect[] = {45 * deg, 67.5 * deg, 90 * deg, 112.5 * deg, 135 * deg};
    for (int i = 0; i < 5; ++i) CHECK_THAT(pts[i](0), WithinAbs(expect[i], 1e-15));
}

TEST_CASE("disk grid drops out-of-radius lattice points") {
    RdwSpec r;
    r.shape = RdwShape::disk;
    r.center = {0.0, 0.0};
    r.half_extents = {1.0};
    r.coarse_points_per_axis = 3;
    r.fine_points_per_axis = 30;
    const auto pts = grid_points(r, GridLevel::coarse);
    // 3x3 lattice on [-1,1]^2: the four corners exceed the radius
    REQUIRE(pts.size() == 5);
    for (const auto& p : pts) CHECK(p.squaredNorm() <= 1.0 + 1e-15);
}

TEST_CASE("box grid count is the product of per-axis counts") {
    RdwSpec r;
    r.shape = RdwShape::box;
    r.center = {0.0, 0.0, 0.0};
    r.half_extents = {0.3, 0.3, 0.261};
    r.coarse_points_per_axis = 3;
    r.fine_points_per_axis = 30;
    const auto pts = grid_points(r, GridLevel::coarse);
    REQUIRE(pts.size() == 27);
    // lexicographic order: axis 0 varies slowest
    CHECK_THAT(pts[0](0), WithinAbs(-0.3, 1e-15));
    CHECK_THAT(pts[0](2), WithinAbs(-0.261, 1e-15));
    CHECK_THAT(pts[1](2), WithinAbs(0.0, 1e-15));
    CHECK_THAT(pts[26](0), WithinAbs(0.3, 1e-15));
}

TEST_CASE("grid is deterministic across calls") {
    const auto a = grid_points(interval_45_135(), GridLevel::fine);
    const auto b = grid_points(interval_45_135(), GridLevel::fine);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("rdw validation rejects bad specs") {
    auto r = interval_45_135();
    r.coarse_points_per_axis = 60;  // not below fine
    CHECK_THROWS_AS(grid_points(r, GridLevel::fine), std::invalid_argument);

    r = interval_45_135();
    r.half_extents = {0.0};
    CHECK_THROWS_AS(grid_points(r, GridLevel::fine), std::invalid_argument);

    r = interval_45_135();
    r.center = {0.0, 0.0};  // wrong arity for an interval
    CHECK_THROWS_AS(grid_points(r, GridLevel::fine), std::invalid_argument);
}
