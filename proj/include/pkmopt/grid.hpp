#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace pkmopt {

using Pose = Eigen::VectorXd;

enum class GridLevel { coarse, fine };

enum class RdwShape { interval, disk, box };

/// Discretization spec for the desired regular dextrous workspace.
/// Shapes: interval (1 output axis), disk (2 axes, half_extents[0] is the
/// radius), box (axis-aligned, any number of axes, e.g. square x rotation).
struct RdwSpec {
    RdwShape shape = RdwShape::interval;
    std::vector<double> center;        // radians for rotational axes
    std::vector<double> half_extents;  // per axis; disk: radius in [0]
    int fine_points_per_axis = 100;
    int coarse_points_per_axis = 10;

    int axes() const {
        switch (shape) {
            case RdwShape::interval: return 1;
            case RdwShape::disk: return 2;
            case RdwShape::box: return static_cast<int>(half_extents.size());
        }
        return 0;
    }

    int points_per_axis(GridLevel level) const {
        return level == GridLevel::fine ? fine_points_per_axis : coarse_points_per_axis;
    }

    void validate() const {
        if (coarse_points_per_axis < 1 || fine_points_per_axis < 1)
            throw std::invalid_argument("rdw: points_per_axis must be positive");
        if (coarse_points_per_axis >= fine_points_per_axis)
            throw std::invalid_argument("rdw: coarse_points_per_axis must be < fine_points_per_axis");
        const int n = axes();
        if (static_cast<int>(center.size()) != n)
            throw std::invalid_argument("rdw: center size does not match shape");
        if (shape == RdwShape::disk && half_extents.size() != 1 &&
            half_extents.size() != 2)
            throw std::invalid_argument("rdw: disk takes a single radius");
        for (double h : half_extents)
            if (!(h > 0.0)) throw std::invalid_argument("rdw: extents must be > 0");
    }

    double extent(int axis) const {
        if (shape == RdwShape::disk) return half_extents[0];
        return half_extents[axis];
    }
};

/// Axis-aligned lattice over the RDW, endpoints included, lexicographic in
/// axis index (axis 0 varies slowest). Disk lattices drop points farther
/// than the radius from the center (boundary included).
inline std::vector<Pose> grid_points(const RdwSpec& rdw, GridLevel level) {
    rdw.validate();
    const int n = rdw.axes();
    const int pts = rdw.points_per_axis(level);

    std::vector<std::vector<double>> axis_vals(n);
    for (int a = 0; a < n; ++a) {
        const double lo = rdw.center[a] - rdw.extent(a);
        const double hi = rdw.center[a] + rdw.extent(a);
        axis_vals[a].resize(pts);
        if (pts == 1) {
            axis_vals[a][0] = rdw.center[a];
        } else {
            for (int i = 0; i < pts; ++i)
                axis_vals[a][i] = lo + (hi - lo) * i / (pts - 1);
        }
    }

    std::vector<Pose> out;
    std::vector<int> idx(n, 0);
    while (true) {
        Pose p(n);
        for (int a = 0; a < n; ++a) p(a) = axis_vals[a][idx[a]];
        if (rdw.shape != RdwShape::disk) {
            out.push_back(p);
        } else {
            const double dx = p(0) - rdw.center[0];
            const double dy = p(1) - rdw.center[1];
            if (dx * dx + dy * dy <= rdw.half_extents[0] * rdw.half_extents[0])
                out.push_back(p);
        }
        int a = n - 1;
        while (a >= 0 && ++idx[a] == pts) idx[a--] = 0;
        if (a < 0) break;
    }
    return out;
}

}  // namespace pkmopt
