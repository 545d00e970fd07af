#pragma once

// Pseudo-random valid weight matrices for property tests and sampled scans.
// Raw entries are p/q with q <= denominator_max; the grid is normalized to
// sum 1 and redrawn until the kernel is biquadratic.

#include <cstdint>
#include <random>

#include "walkgroup/kernel.hpp"
#include "walkgroup/weights.hpp"

namespace walkgroup {

inline WeightMatrix random_weight_matrix(std::mt19937_64& rng, int denominator_max = 12) {
    for (;;) {
        Mat3 grid;
        for (auto& row : grid) {
            for (auto& v : row) {
                const auto q = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(denominator_max)) + 1;
                const auto p = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q + 1));  // 0..q
                v = Rational(p, q);
            }
        }
        WeightMatrix w{grid};
        const Rational s = w.sum();
        if (s == 0 || w.p(0, 0) == s) continue;  // nothing moves
        for (auto& row : w.grid)
            for (auto& v : row) v /= s;
        // column j = 1 / j = -1 and row i = 1 / i = -1 must each carry mass
        if (all_zero({w.p(1, 1), w.p(0, 1), w.p(-1, 1)})) continue;
        if (all_zero({w.p(1, -1), w.p(0, -1), w.p(-1, -1)})) continue;
        if (all_zero({w.p(1, 1), w.p(1, 0), w.p(1, -1)})) continue;
        if (all_zero({w.p(-1, 1), w.p(-1, 0), w.p(-1, -1)})) continue;
        return w;
    }
}

}  // namespace walkgroup
