#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pkmopt/geometry.hpp"
#include "pkmopt/grid.hpp"

namespace pkmopt {

/// Per-pose solver bundle consumed by the evaluation loop.
/// A disconnected/degenerate pose is reported as std::nullopt by the
/// solvers; the evaluation engine treats it as singular.
struct MechEval {
    double detJ = 0.0;                  // Jacobian determinant (scalar j for 1-dof)
    std::vector<double> passive;        // passive joint angles q_p, radians
    std::vector<double> rho;            // actuator lengths
    double quality = 0.0;               // kappa^-1, or the scalar j itself
    std::optional<double> clearance;    // actuator-actuator distance d_c
};

// ---------------------------------------------------------------------------
// lambda mechanism (1-RRPR single loop)
// ---------------------------------------------------------------------------

/// Link lengths of the lambda mechanism. One length is the optimization
/// variable; the other stays fixed at 1.
struct LambdaParams {
    double l1 = 1.0;  // OA
    double l2 = 1.0;  // OB
};

/// Closed-form solution of the lambda loop at joint angle theta.
/// rho is the actuator length AB; the scalar Jacobian j = dj rho/d theta
/// doubles as the quality value (the 1-dof conditioning measure).
inline std::optional<MechEval> lambda_solve(const LambdaParams& p, double theta) {
    const double rho2 = p.l1 * p.l1 + p.l2 * p.l2 - 2.0 * p.l1 * p.l2 * std::cos(theta);
    if (rho2 <= 1e-24) return std::nullopt;  // A and B coincide
    const double rho = std::sqrt(rho2);
    const double j = p.l1 * p.l2 * std::sin(theta) / rho;
    MechEval ev;
    ev.detJ = j;
    ev.quality = j;
    ev.rho = {rho};
    ev.passive = {theta};
    return ev;
}

/// Modified velocity-amplification quality: peaked at j = 1, zero outside
/// the admissible amplification band.
inline double lambda_vaf(double j, double low, double high) {
    if (!(j > low && j < high)) return 0.0;
    return 1.0 / (1.0 + std::numbers::sqrt2 * (j - 1.0) * (j - 1.0));
}

// ---------------------------------------------------------------------------
// 2UPS-1U orientation mechanism
// ---------------------------------------------------------------------------

/// The 13 geometry parameters, in optimization-vector order:
/// [a1, phi1, h1, b1, psi1, h2, a2, phi2, h3, b2, psi2, h4, t].
/// a_i/phi_i/h_i place the base universal joints, b_i/psi_i/h_{3,4} place the
/// platform spherical joints about the constraint-leg U joint at [0,0,t].
/// All angles are measured from the base x-axis.
struct UpsParams {
    double a1, phi1, h1;
    double b1, psi1, h2;
    double a2, phi2, h3;
    double b2, psi2, h4;
    double t;

    static UpsParams from_vector(const Eigen::VectorXd& v) {
        if (v.size() != 13) throw std::invalid_argument("ups: expected 13 parameters");
        return {v(0), v(1), v(2), v(3), v(4), v(5), v(6),
                v(7), v(8), v(9), v(10), v(11), v(12)};
    }

    Vec3 base_anchor_1() const { return {a1 * std::cos(phi1), a1 * std::sin(phi1), h1}; }
    Vec3 base_anchor_2() const { return {a2 * std::cos(phi2), a2 * std::sin(phi2), h2}; }
    // platform anchors expressed about U = [0,0,t]
    Vec3 platform_anchor_1() const { return {b1 * std::cos(psi1), b1 * std::sin(psi1), h3}; }
    Vec3 platform_anchor_2() const { return {b2 * std::cos(psi2), b2 * std::sin(psi2), h4}; }
};

namespace detail {

/// Leg lengths of the 2UPS-1U at orientation (alpha, beta).
inline std::optional<Eigen::Vector2d> ups_leg_lengths(const UpsParams& p,
                                                      double alpha, double beta) {
    const Mat3 r = rotation_uv(alpha, beta);
    const Vec3 u(0.0, 0.0, p.t);
    const Vec3 w1 = u + r * p.platform_anchor_1();
    const Vec3 w2 = u + r * p.platform_anchor_2();
    Eigen::Vector2d rho((w1 - p.base_anchor_1()).norm(), (w2 - p.base_anchor_2()).norm());
    if (rho(0) <= 1e-12 || rho(1) <= 1e-12) return std::nullopt;
    return rho;
}

}  // namespace detail

/// Solves the 2UPS-1U at platform orientation (alpha, beta).
/// detJ and quality come from the 2x2 central-difference Jacobian
/// d(rho1,rho2)/d(alpha,beta); passive angles are the two spherical-joint
/// cone angles (about each anchor's home leg direction) followed by the
/// U-joint angles; clearance is the actuator-actuator segment distance.
inline std::optional<MechEval> ups_solve(const UpsParams& p, double alpha, double beta,
                                         double fd_step = 1e-6) {
    const auto rho0 = detail::ups_leg_lengths(p, alpha, beta);
    if (!rho0) return std::nullopt;

    Eigen::Matrix2d jac;
    {
        const auto ap = detail::ups_leg_lengths(p, alpha + fd_step, beta);
        const auto am = detail::ups_leg_lengths(p, alpha - fd_step, beta);
        const auto bp = detail::ups_leg_lengths(p, alpha, beta + fd_step);
        const auto bm = detail::ups_leg_lengths(p, alpha, beta - fd_step);
        if (!ap || !am || !bp || !bm) return std::nullopt;
        jac.col(0) = (*ap - *am) / (2.0 * fd_step);
        jac.col(1) = (*bp - *bm) / (2.0 * fd_step);
    }

    const Mat3 r = rotation_uv(alpha, beta);
    const Vec3 u(0.0, 0.0, p.t);
    const Vec3 a1 = p.base_anchor_1(), a2 = p.base_anchor_2();
    const Vec3 w1 = u + r * p.platform_anchor_1();
    const Vec3 w2 = u + r * p.platform_anchor_2();

    // home leg directions, carried along with the platform
    const Vec3 home1 = u + p.platform_anchor_1();
    const Vec3 home2 = u + p.platform_anchor_2();
    const Vec3 n1 = (a1 - home1).normalized();
    const Vec3 n2 = (a2 - home2).normalized();
    const auto cone = [](const Vec3& leg, const Vec3& axis) {
        return std::acos(std::clamp(leg.normalized().dot(axis), -1.0, 1.0));
    };

    MechEval ev;
    ev.detJ = jac.determinant();
    ev.quality = inverse_condition_index(jac);
    ev.rho = {(*rho0)(0), (*rho0)(1)};
    ev.passive = {cone(a1 - w1, r * n1), cone(a2 - w2, r * n2), alpha, beta};
    ev.clearance = segment_distance({a1, w1}, {a2, w2});
    return ev;
}

// ---------------------------------------------------------------------------
// planar 3-RPR
// ---------------------------------------------------------------------------

/// Base geometry of the 3-RPR: three base points equidistant from the center
/// at polar angles theta_i. The platform is a fixed equilateral triangle of
/// circumradius 1 with anchors at 90, 210 and 330 degrees.
struct RprParams {
    double r1 = 1.0;
    double theta1 = 0.0, theta2 = 0.0, theta3 = 0.0;

    static RprParams from_vector(const Eigen::VectorXd& v) {
        if (v.size() != 4) throw std::invalid_argument("rpr: expected 4 parameters");
        return {v(0), v(1), v(2), v(3)};
    }
};

namespace detail {

inline std::array<Eigen::Vector2d, 3> rpr_platform_local() {
    constexpr double deg = std::numbers::pi / 180.0;
    return {Eigen::Vector2d{std::cos(90 * deg), std::sin(90 * deg)},
            Eigen::Vector2d{std::cos(210 * deg), std::sin(210 * deg)},
            Eigen::Vector2d{std::cos(330 * deg), std::sin(330 * deg)}};
}

/// Leg lengths for explicit base points; shared by the solver and by tests
/// exercising rigid-translation invariance.
inline Eigen::Vector3d rpr_leg_lengths(const std::array<Eigen::Vector2d, 3>& base,
                                       double x, double y, double phi) {
    const auto q = rpr_platform_local();
    const Eigen::Rotation2Dd rot(phi);
    Eigen::Vector3d rho;
    for (int i = 0; i < 3; ++i)
        rho(i) = (Eigen::Vector2d(x, y) + rot * q[i] - base[i]).norm();
    return rho;
}

}  // namespace detail

/// Solves the 3-RPR at pose (x, y, phi).
/// detJ is det(A) of the velocity loop A*xdot = diag(rho)*rhodot; quality is
/// the inverse condition number of A^-1 diag(rho) with the rotational
/// column normalized by the platform circumradius (1). Poses where A is
/// singular report quality 0 rather than an error.
inline std::optional<MechEval> rpr_solve(const RprParams& p, double x, double y,
                                         double phi) {
    const std::array<Eigen::Vector2d, 3> base = {
        Eigen::Vector2d{p.r1 * std::cos(p.theta1), p.r1 * std::sin(p.theta1)},
        Eigen::Vector2d{p.r1 * std::cos(p.theta2), p.r1 * std::sin(p.theta2)},
        Eigen::Vector2d{p.r1 * std::cos(p.theta3), p.r1 * std::sin(p.theta3)}};
    const auto q = detail::rpr_platform_local();
    const Eigen::Rotation2Dd rot(phi);
    const Eigen::Matrix2d e90 = (Eigen::Matrix2d() << 0, -1, 1, 0).finished();

    Eigen::Matrix3d a;
    Eigen::Vector3d rho;
    MechEval ev;
    for (int i = 0; i < 3; ++i) {
        const Eigen::Vector2d qi = rot * q[i];
        const Eigen::Vector2d d = Eigen::Vector2d(x, y) + qi - base[i];
        rho(i) = d.norm();
        a(i, 0) = d(0);
        a(i, 1) = d(1);
        a(i, 2) = d.dot(e90 * qi);
        ev.passive.push_back(std::atan2(d(1), d(0)));          // leg angle at base
    }
    for (int i = 0; i < 3; ++i) {
        const Eigen::Vector2d d = Eigen::Vector2d(x, y) + rot * q[i] - base[i];
        const Eigen::Vector2d dp = rot.inverse() * (-d);       // leg seen from platform
        ev.passive.push_back(std::atan2(dp(1), dp(0)));
    }

    ev.detJ = a.determinant();
    ev.rho = {rho(0), rho(1), rho(2)};
    Eigen::FullPivLU<Eigen::Matrix3d> lu(a);
    if (lu.isInvertible()) {
        const Eigen::Matrix3d j = lu.inverse() * rho.asDiagonal().toDenseMatrix();
        ev.quality = inverse_condition_index(j);
    } else {
        ev.quality = 0.0;  // parallel singularity (or a zero-length leg)
    }
    return ev;
}

// ---------------------------------------------------------------------------
// numeric differentiation
// ---------------------------------------------------------------------------

/// Central-difference Jacobian d(rho)/d(pose) of a leg-length map.
/// Returns nullopt if the map is degenerate anywhere on the stencil.
template <typename RhoFn>
std::optional<QualityMatrix> numeric_jacobian(RhoFn&& rho_fn, const Pose& pose,
                                              double step = 1e-6) {
    const auto center = rho_fn(pose);
    if (!center) return std::nullopt;
    const int rows = static_cast<int>(center->size());
    const int cols = static_cast<int>(pose.size());
    QualityMatrix jac(rows, cols);
    for (int c = 0; c < cols; ++c) {
        Pose pp = pose, pm = pose;
        pp(c) += step;
        pm(c) -= step;
        const auto fp = rho_fn(pp);
        const auto fm = rho_fn(pm);
        if (!fp || !fm) return std::nullopt;
        for (int r = 0; r < rows; ++r)
            jac(r, c) = ((*fp)[r] - (*fm)[r]) / (2.0 * step);
    }
    return jac;
}

// ---------------------------------------------------------------------------
// uniform mechanism handle for the evaluation engine
// ---------------------------------------------------------------------------

enum class MechKind { lambda, ups2, rpr3 };

/// Type-erased mechanism: design parameters + workspace pose -> MechEval.
struct MechModel {
    MechKind kind = MechKind::lambda;
    int param_dim = 1;
    int pose_dim = 1;
    int legs = 1;
    bool prismatic = true;  // actuator-bracket selection applies
    std::function<std::optional<MechEval>(const Eigen::VectorXd&, const Pose&)> solve;
};

inline MechModel lambda_model() {
    MechModel m;
    m.kind = MechKind::lambda;
    m.param_dim = 1;
    m.pose_dim = 1;
    m.legs = 1;
    m.solve = [](const Eigen::VectorXd& v, const Pose& pose) {
        return lambda_solve({v(0), 1.0}, pose(0));
    };
    return m;
}

inline MechModel ups2_model() {
    MechModel m;
    m.kind = MechKind::ups2;
    m.param_dim = 13;
    m.pose_dim = 2;
    m.legs = 2;
    m.solve = [](const Eigen::VectorXd& v, const Pose& pose) {
        return ups_solve(UpsParams::from_vector(v), pose(0), pose(1));
    };
    return m;
}

inline MechModel rpr3_model() {
    MechModel m;
    m.kind = MechKind::rpr3;
    m.param_dim = 4;
    m.pose_dim = 3;
    m.legs = 3;
    m.solve = [](const Eigen::VectorXd& v, const Pose& pose) {
        return rpr_solve(RprParams::from_vector(v), pose(0), pose(1), pose(2));
    };
    return m;
}

inline MechModel make_model(MechKind kind) {
    switch (kind) {
        case MechKind::lambda: return lambda_model();
        case MechKind::ups2: return ups2_model();
        case MechKind::rpr3: return rpr3_model();
    }
    throw std::logic_error("unknown mechanism");
}

}  // namespace pkmopt
