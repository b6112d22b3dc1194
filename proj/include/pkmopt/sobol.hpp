#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pkmopt {

namespace sobol_detail {

constexpr int kMaxDim = 16;
constexpr int kBits = 31;

// Joe-Kuo direction-number parameters (new-joe-kuo-6) for dimensions 2..16.
// Dimension 1 uses m_i = 1 for all i.
struct DirRow {
    int s;                     // polynomial degree
    unsigned a;                // polynomial coefficients
    std::array<unsigned, 6> m; // initial direction integers
};

inline constexpr std::array<DirRow, 15> kJoeKuo{{
    {1, 0, {1, 0, 0, 0, 0, 0}},          // d = 2
    {2, 1, {1, 3, 0, 0, 0, 0}},          // d = 3
    {3, 1, {1, 3, 1, 0, 0, 0}},          // d = 4
    {3, 2, {1, 1, 1, 0, 0, 0}},          // d = 5
    {4, 1, {1, 1, 3, 3, 0, 0}},          // d = 6
    {4, 4, {1, 3, 5, 13, 0, 0}},         // d = 7
    {5, 2, {1, 1, 5, 5, 17, 0}},         // d = 8
    {5, 4, {1, 1, 5, 5, 5, 0}},          // d = 9
    {5, 7, {1, 1, 7, 11, 19, 0}},        // d = 10
    {5, 11, {1, 1, 5, 1, 1, 0}},         // d = 11
    {5, 13, {1, 1, 1, 3, 11, 0}},        // d = 12
    {5, 14, {1, 3, 5, 5, 31, 0}},        // d = 13
    {6, 1, {1, 3, 3, 9, 7, 49}},         // d = 14
    {6, 13, {1, 1, 1, 15, 21, 21}},      // d = 15
    {6, 16, {1, 3, 1, 13, 27, 49}},      // d = 16
}};

inline std::vector<std::array<std::uint32_t, kBits>> directions(int dim) {
    std::vector<std::array<std::uint32_t, kBits>> v(dim);
    for (int i = 0; i < kBits; ++i) v[0][i] = 1u << (kBits - 1 - i);
    for (int d = 2; d <= dim; ++d) {
        const DirRow& row = kJoeKuo[d - 2];
        auto& vd = v[d - 1];
        for (int i = 0; i < row.s; ++i)
            vd[i] = row.m[i] << (kBits - 1 - i);
        for (int i = row.s; i < kBits; ++i) {
            std::uint32_t x = vd[i - row.s] ^ (vd[i - row.s] >> row.s);
            for (int k = 1; k < row.s; ++k)
                if ((row.a >> (row.s - 1 - k)) & 1u) x ^= vd[i - k];
            vd[i] = x;
        }
    }
    return v;
}

}  // namespace sobol_detail

/// First `count` points of the Sobol sequence in the unit cube, skipping the
/// initial all-zeros point. Gray-code order; deterministic.
inline std::vector<Eigen::VectorXd> sobol_points(int dim, int count) {
    if (dim < 1 || dim > sobol_detail::kMaxDim)
        throw std::invalid_argument("sobol: dimension must be in [1, 16]");
    if (count < 0) throw std::invalid_argument("sobol: count must be >= 0");

    const auto dirs = sobol_detail::directions(dim);
    const double scale = 1.0 / static_cast<double>(1u << sobol_detail::kBits);
    std::vector<Eigen::VectorXd> out;
    out.reserve(count);
    std::vector<std::uint32_t> x(dim, 0);
    for (int n = 1; n <= count; ++n) {
        // index of the lowest zero bit of n-1
        unsigned c = 0, nn = static_cast<unsigned>(n - 1);
        while (nn & 1u) {
            nn >>= 1;
            ++c;
        }
        Eigen::VectorXd p(dim);
        for (int d = 0; d < dim; ++d) {
            x[d] ^= dirs[d][c];
            p(d) = x[d] * scale;
        }
        out.push_back(std::move(p));
    }
    return out;
}

/// Affine map of a unit-cube point into a per-axis box.
inline Eigen::VectorXd scale_to_box(
    const Eigen::VectorXd& unit,
    const std::vector<std::pair<double, double>>& box) {
    Eigen::VectorXd out(unit.size());
    for (int i = 0; i < unit.size(); ++i)
        out(i) = box[i].first + (box[i].second - box[i].first) * unit(i);
    return out;
}

}  // namespace pkmopt
