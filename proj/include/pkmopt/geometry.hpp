#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace pkmopt {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// A closed segment in 3-space. Endpoints must not coincide.
struct Segment3 {
    Vec3 p0;
    Vec3 p1;

    Vec3 direction() const { return p1 - p0; }
    double length() const { return (p1 - p0).norm(); }
};

/// Minimum distance between two closed segments (common normal clamped to
/// the endpoints). Symmetric in its arguments; 0 iff the segments intersect.
inline double segment_distance(const Segment3& s1, const Segment3& s2) {
    constexpr double kParallelTol = 1e-12;
    const Vec3 d1 = s1.direction();
    const Vec3 d2 = s2.direction();
    const Vec3 r = s1.p0 - s2.p0;
    const double a = d1.dot(d1);
    const double e = d2.dot(d2);
    const double f = d2.dot(r);
    const double c = d1.dot(r);
    const double b = d1.dot(d2);
    const double denom = a * e - b * b;

    // s parametrizes s1, t parametrizes s2, both in [0,1]
    double s = 0.0;
    if (denom > kParallelTol * a * e) {
        s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
    }
    double t = (b * s + f) / e;
    if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
    } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
    }
    const Vec3 c1 = s1.p0 + d1 * s;
    const Vec3 c2 = s2.p0 + d2 * t;
    return (c1 - c2).norm();
}

/// Two-axis universal-joint rotation, first about x then about y:
/// R = Rx(alpha) * Ry(beta).
inline Mat3 rotation_uv(double alpha, double beta) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);
    Mat3 rx, ry;
    rx << 1, 0, 0,
          0, ca, -sa,
          0, sa, ca;
    ry << cb, 0, sb,
          0, 1, 0,
          -sb, 0, cb;
    return rx * ry;
}

using QualityMatrix = Eigen::MatrixXd;

/// Inverse condition number sigma_min / sigma_max, in [0,1].
/// A 1x1 input is treated as a scalar gain: |x| clamped to [0,1].
/// An all-zero matrix maps to 0.
inline double inverse_condition_index(const QualityMatrix& j) {
    if (j.rows() == 1 && j.cols() == 1) {
        return std::min(std::abs(j(0, 0)), 1.0);
    }
    Eigen::JacobiSVD<QualityMatrix> svd(j);
    const auto& sigma = svd.singularValues();
    const double smax = sigma(0);
    if (smax <= 0.0) return 0.0;
    return sigma(sigma.size() - 1) / smax;
}

}  // namespace pkmopt
