#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pkmopt/sobol.hpp"

using namespace pkmopt;

namespace {

// Independent reference: direct binary-expansion Sobol (x_n = XOR of the
// direction integers selected by the bits of n), no Gray code. Shares only
// the published direction-number table with the implementation.
std::vector<std::vector<double>> reference_sobol(int dim, int count) {
    const auto dirs = sobol_detail::directions(dim);
    const double scale = 1.0 / static_cast<double>(1u << sobol_detail::kBits);
    std::vector<std::vector<double>> out;
    for (int n = 1; n <= count; ++n) {
        // Gray-code ordering maps point n to integer n^(n>>1)
        const unsigned g = static_cast<unsigned>(n) ^ (static_cast<unsigned>(n) >> 1);
        std::vector<double> p(dim);
        for (int d = 0; d < dim; ++d) {
            std::uint32_t x = 0;
            for (int b = 0; b < 31; ++b)
                if ((g >> b) & 1u) x ^= dirs[d][b];
            p[d] = x * scale;
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

TEST_CASE("first points in dimension 1") {
    const auto pts = sobol_points(1, 3);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0](0) == 0.5);
    CHECK(pts[1](0) == 0.75);
    CHECK(pts[2](0) == 0.25);
}

TEST_CASE("dimension 1..3 prefixes match frozen reference values exactly") {
    // computed with an independent Joe-Kuo Gray-code generator
    const double d2[8][2] = {{0.5, 0.5},     {0.75, 0.25},    {0.25, 0.75},
                             {0.375, 0.375}, {0.875, 0.875},  {0.625, 0.125},
                             {0.125, 0.625}, {0.1875, 0.3125}};
    const double d3[8][3] = {{0.5, 0.5, 0.5},       {0.75, 0.25, 0.25},
                             {0.25, 0.75, 0.75},    {0.375, 0.375, 0.625},
                             {0.875, 0.875, 0.125}, {0.625, 0.125, 0.875},
                             {0.125, 0.625, 0.375}, {0.1875, 0.3125, 0.9375}};
    const auto p2 = sobol_points(2, 8);
    const auto p3 = sobol_points(3, 8);
    for (int i = 0; i < 8; ++i) {
        for (int k = 0; k < 2; ++k) CHECK(p2[i](k) == d2[i][k]);
        for (int k = 0; k < 3; ++k) CHECK(p3[i](k) == d3[i][k]);
    }
}

TEST_CASE("gray-code generator equals the direct-expansion reference") {
    for (int dim : {1, 2, 5, 13, 16}) {
        const auto mine = sobol_points(dim, 200);
        const auto ref = reference_sobol(dim, 200);
        for (int i = 0; i < 200; ++i)
            for (int d = 0; d < dim; ++d) REQUIRE(mine[i](d) == ref[i][d]);
    }
}

TEST_CASE("edge cases") {
    CHECK(sobol_points(3, 0).empty());
    CHECK_THROWS_AS(sobol_points(17, 1), std::invalid_argument);
    CHECK_THROWS_AS(sobol_points(0, 1), std::invalid_argument);

    Eigen::VectorXd half(1);
    half << 0.5;
    CHECK(scale_to_box(half, {{1.0, 4.0}})(0) == 2.5);
}

namespace {

// Star discrepancy by scanning boxes anchored at the origin with corners on
// the sample coordinates (sup over both open and closed boxes).
double star_discrepancy_2d(const std::vector<Eigen::VectorXd>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<double> xs, ys;
    for (const auto& p : pts) {
        xs.push_back(p(0));
        ys.push_back(p(1));
    }
    xs.push_back(1.0);
    ys.push_back(1.0);
    double worst = 0.0;
    for (double x : xs)
        for (double y : ys) {
            int closed = 0, open = 0;
            for (const auto& p : pts) {
                if (p(0) <= x && p(1) <= y) ++closed;
                if (p(0) < x && p(1) < y) ++open;
            }
            const double area = x * y;
            worst = std::max(worst, std::abs(double(closed) / n - area));
            worst = std::max(worst, std::abs(double(open) / n - area));
        }
    return worst;
}

}  // namespace

TEST_CASE("sobol beats uniform sampling on star discrepancy") {
    const auto sob = sobol_points(2, 256);
    const double d_sobol = star_discrepancy_2d(sob);

    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double sum = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Eigen::VectorXd> pts;
        for (int i = 0; i < 256; ++i) {
            Eigen::VectorXd p(2);
            p << u(rng), u(rng);
            pts.push_back(p);
        }
        sum += star_discrepancy_2d(pts);
    }
    CHECK(d_sobol < sum / 20.0);
}
