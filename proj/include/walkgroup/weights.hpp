#pragma once

// Weight matrices for homogeneous nearest-neighbour walks in the quarter
// plane. The grid mirrors the matrix layout used for the kernel: rows are
// the x-step i = 1, 0, -1 (top to bottom), columns the y-step j = 1, 0, -1
// (left to right). The centre stores the raw stay-probability p_{0,0}; the
// -1 shift that turns it into the kernel coefficient is applied when the
// matrix P is formed.

#include <array>
#include <string>

#include "walkgroup/errors.hpp"
#include "walkgroup/rational.hpp"

namespace walkgroup {

using Mat3 = std::array<std::array<Rational, 3>, 3>;
using RawGrid = std::array<std::array<std::string, 3>, 3>;

struct WeightMatrix {
    Mat3 grid{};  // grid[1-i][1-j] = p_{i,j}

    const Rational& p(int i, int j) const { return grid[static_cast<std::size_t>(1 - i)][static_cast<std::size_t>(1 - j)]; }
    Rational& p(int i, int j) { return grid[static_cast<std::size_t>(1 - i)][static_cast<std::size_t>(1 - j)]; }

    Rational sum() const {
        Rational s = 0;
        for (const auto& row : grid)
            for (const auto& v : row) s += v;
        return s;
    }
};

// All eight step directions in grid reading order (centre excluded). This is
// also the convention for scan support masks.
inline constexpr std::array<std::pair<int, int>, 8> step_directions{{
    {1, 1}, {1, 0}, {1, -1}, {0, 1}, {0, -1}, {-1, 1}, {-1, 0}, {-1, -1},
}};

// Validates (and optionally normalizes) a grid that is already rational.
inline WeightMatrix validate_weights(Mat3 grid, bool normalize) {
    WeightMatrix w{std::move(grid)};
    for (const auto& row : w.grid)
        for (const auto& v : row)
            if (v < 0)
                throw walk_error(errc::negative_weight,
                                 "weight " + to_string(v) + " is negative");
    Rational s = w.sum();
    if (normalize) {
        if (s == 0)
            throw walk_error(errc::sum_not_one, "weights sum to zero; cannot normalize");
        for (auto& row : w.grid)
            for (auto& v : row) v /= s;
    } else if (s != 1) {
        throw walk_error(errc::sum_not_one,
                         "weights sum to " + to_string(s) + ", expected 1");
    }
    if (w.p(0, 0) == 1)
        throw walk_error(errc::all_mass_at_origin, "p_{0,0} = 1: the walk never moves");
    return w;
}

inline WeightMatrix parse_weights(const RawGrid& raw, bool normalize) {
    Mat3 grid;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) grid[r][c] = parse_rational(raw[r][c]);
    return validate_weights(std::move(grid), normalize);
}

// The kernel coefficient matrix P: the weight grid with centre p_{0,0} - 1.
inline Mat3 matrix_p(const WeightMatrix& w) {
    Mat3 m = w.grid;
    m[1][1] -= 1;
    return m;
}

inline Rational det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline Rational det_p(const WeightMatrix& w) { return det3(matrix_p(w)); }

// Cofactor matrix of P; entry [i-1][j-1] is the cofactor of P_{ij}.
inline Mat3 cofactor_matrix(const Mat3& m) {
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t r0 = (i == 0) ? 1 : 0, r1 = (i == 2) ? 1 : 2;
            const std::size_t c0 = (j == 0) ? 1 : 0, c1 = (j == 2) ? 1 : 2;
            Rational minor = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
            out[i][j] = ((i + j) % 2 == 0) ? minor : -minor;
        }
    }
    return out;
}

}  // namespace walkgroup
