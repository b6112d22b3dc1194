#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "pkmopt/geometry.hpp"

using namespace pkmopt;
using Catch::Matchers::WithinAbs;

TEST_CASE("inverse condition index on reference matrices") {
    QualityMatrix id = Eigen::Matrix2d::Identity();
    CHECK_THAT(inverse_condition_index(id), WithinAbs(1.0, 1e-15));

    QualityMatrix diag = Eigen::Vector2d(2.0, 1.0).asDiagonal();
    CHECK_THAT(inverse_condition_index(diag), WithinAbs(0.5, 1e-15));

    QualityMatrix rank1(2, 2);
    rank1 << 1, 1, 1, 1;
    CHECK_THAT(inverse_condition_index(rank1), WithinAbs(0.0, 1e-15));

    QualityMatrix zero = Eigen::Matrix3d::Zero();
    CHECK(inverse_condition_index(zero) == 0.0);
}

TEST_CASE("inverse condition index treats 1x1 input as a clamped scalar") {
    QualityMatrix s(1, 1);
    s(0, 0) = 0.4;
    CHECK_THAT(inverse_condition_index(s), WithinAbs(0.4, 1e-15));
    s(0, 0) = -3.0;
    CHECK_THAT(inverse_condition_index(s), WithinAbs(1.0, 1e-15));
    s(0, 0) = 0.0;
    CHECK(inverse_condition_index(s) == 0.0);
}

TEST_CASE("inverse condition index is scale invariant and bounded") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> scale(0.001, 1000.0);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + trial % 2;
        QualityMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) m(i, k) = u(rng);
        const double kappa = inverse_condition_index(m);
        REQUIRE(kappa >= 0.0);
        REQUIRE(kappa <= 1.0);
        const double c = scale(rng);
        CHECK_THAT(inverse_condition_index(QualityMatrix(c * m)), WithinAbs(kappa, 1e-12));
    }
}

TEST_CASE("orthogonal matrices are isotropic") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        Eigen::Matrix3d m;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) m(i, k) = u(rng);
        const Eigen::Matrix3d q = Eigen::HouseholderQR<Eigen::Matrix3d>(m).householderQ();
        CHECK_THAT(inverse_condition_index(QualityMatrix(q)), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("segment distance reference cases") {
    // crossing segments
    CHECK_THAT(segment_distance({{-1, 0, 0}, {1, 0, 0}}, {{0, -1, 0}, {0, 1, 0}}),
               WithinAbs(0.0, 1e-15));
    // parallel unit segments offset by 1 along z
    CHECK_THAT(segment_distance({{0, 0, 0}, {1, 0, 0}}, {{0, 0, 1}, {1, 0, 1}}),
               WithinAbs(1.0, 1e-15));
    // skew pair: common normal meets both interiors at distance 1
    const Segment3 s1{{0, 0, 0}, {1, 0, 0}};
    const Segment3 s2{{0.5, -1, 1}, {0.5, 1, 1}};
    CHECK_THAT(segment_distance(s1, s2), WithinAbs(1.0, 1e-12));
}

TEST_CASE("segment distance agrees with a brute-force parameter scan") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        Segment3 a{{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}};
        Segment3 b{{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}};
        if (a.length() < 1e-6 || b.length() < 1e-6) continue;
        const double d = segment_distance(a, b);

        double brute = std::numeric_limits<double>::infinity();
        constexpr int kSteps = 400;
        for (int i = 0; i <= kSteps; ++i)
            for (int k = 0; k <= kSteps; ++k) {
                const Vec3 p = a.p0 + (a.p1 - a.p0) * (double(i) / kSteps);
                const Vec3 q = b.p0 + (b.p1 - b.p0) * (double(k) / kSteps);
                brute = std::min(brute, (p - q).norm());
            }
        REQUIRE(d <= brute + 1e-12);      // brute force can only overestimate
        REQUIRE(brute - d <= 2e-2);       // lattice resolution bound
    }
}

TEST_CASE("segment distance symmetry and translation invariance") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        Segment3 a{{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}};
        Segment3 b{{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}};
        if (a.length() < 1e-9 || b.length() < 1e-9) continue;
        const double d = segment_distance(a, b);
        CHECK_THAT(segment_distance(b, a), WithinAbs(d, 1e-12));
        const Vec3 t(u(rng), u(rng), u(rng));
        const Segment3 at{a.p0 + t, a.p1 + t};
        const Segment3 bt{b.p0 + t, b.p1 + t};
        CHECK_THAT(segment_distance(at, bt), WithinAbs(d, 1e-12));
    }
}

TEST_CASE("rotation_uv basics") {
    constexpr double pi = std::numbers::pi;
    CHECK((rotation_uv(0, 0) - Mat3::Identity()).norm() < 1e-15);

    const Mat3 half_turn = rotation_uv(pi, 0);
    Mat3 expect;
    expect << 1, 0, 0, 0, -1, 0, 0, 0, -1;
    CHECK((half_turn - expect).norm() < 1e-12);
}

TEST_CASE("rotation_uv is orthonormal and norm preserving") {
    std::mt19937 rng(57);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        const Mat3 r = rotation_uv(u(rng), u(rng));
        CHECK((r.transpose() * r - Mat3::Identity()).norm() < 1e-12);
        CHECK_THAT(r.determinant(), WithinAbs(1.0, 1e-12));
        const Vec3 v(u(rng), u(rng), u(rng));
        CHECK_THAT((r * v).norm(), WithinAbs(v.norm(), 1e-12));
    }
}
