#pragma once

// Floating-point cross-check of the exact classifier. The QRT map
// delta = eta . xi acts on the biquadratic curve Q(x, y) = 0 as translation
// by omega_3, so the orbit of any point closes after exactly ord(Omega_3)
// steps. We iterate delta in complex doubles from several random seeds and
// majority-vote the first-return step. This module is advisory: float
// iteration near branch points is legitimately unstable, so disagreement
// with the exact classifier is a warning, never an error.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "walkgroup/errors.hpp"
#include "walkgroup/kernel.hpp"
#include "walkgroup/weights.hpp"

namespace walkgroup {

struct QrtState {
    std::complex<double> x, y;
};

struct OrbitEstimate {
    std::optional<int> closure_order;  // nullopt = no closure within max_n
    int seeds_agreeing = 0;
    int seeds_total = 0;
    int seeds_usable = 0;
    double residual = 0.0;  // max return distance among agreeing seeds
};

namespace detail {

struct QrtKernel {
    std::array<double, 3> a, b, c;           // quadratics in x
    std::array<double, 3> at, bt, ct;        // quadratics in y
    std::array<double, 5> delta2;

    static QrtKernel from(const KernelData& k, const Quartic& delta2) {
        QrtKernel q;
        auto conv3 = [](const std::array<Rational, 3>& v) {
            return std::array<double, 3>{to_double(v[0]), to_double(v[1]), to_double(v[2])};
        };
        q.a = conv3(k.a); q.b = conv3(k.b); q.c = conv3(k.c);
        q.at = conv3(k.a_tilde); q.bt = conv3(k.b_tilde); q.ct = conv3(k.c_tilde);
        for (std::size_t i = 0; i < 5; ++i) q.delta2[i] = to_double(delta2[i]);
        return q;
    }
};

template <std::size_t N>
std::complex<double> horner(const std::array<double, N>& p, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (double c : p) acc = acc * x + c;
    return acc;
}

inline constexpr double pole_tolerance = 1e-12;

// Both roots of A t^2 + B t + C = 0, stable branch selection.
inline std::pair<std::complex<double>, std::complex<double>> quadratic_roots(
    std::complex<double> A, std::complex<double> B, std::complex<double> C) {
    if (std::abs(A) < pole_tolerance)
        throw walk_error(errc::near_pole, "quadratic degenerates: |A| below tolerance");
    const std::complex<double> sq = std::sqrt(B * B - 4.0 * A * C);
    const std::complex<double> q =
        (std::real(std::conj(B) * sq) >= 0.0) ? -(B + sq) / 2.0 : -(B - sq) / 2.0;
    if (std::abs(q) < pole_tolerance) return {std::complex<double>(0.0), -B / A};
    return {q / A, C / q};
}

// Swap to the other root of the fibre quadratic; `current` should already be
// (close to) one of the roots.
inline std::complex<double> other_root(std::complex<double> A, std::complex<double> B,
                                       std::complex<double> C, std::complex<double> current) {
    const auto [r1, r2] = quadratic_roots(A, B, C);
    return (std::abs(current - r1) <= std::abs(current - r2)) ? r2 : r1;
}

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

// One application of delta = eta . xi. The vertical switch replaces y by the
// other root of a(x) y^2 + b(x) y + c(x), the horizontal switch then
// replaces x by the other root of ~a(y) x^2 + ~b(y) x + ~c(y); re-solving
// the quadratics keeps the state on the curve.
inline QrtState qrt_step(const QrtState& s, const detail::QrtKernel& k) {
    const std::complex<double> y2 =
        detail::other_root(detail::horner(k.a, s.x), detail::horner(k.b, s.x),
                           detail::horner(k.c, s.x), s.y);
    const std::complex<double> x2 =
        detail::other_root(detail::horner(k.at, y2), detail::horner(k.bt, y2),
                           detail::horner(k.ct, y2), s.x);
    return QrtState{x2, y2};
}

inline QrtState qrt_step(const QrtState& s, const KernelData& k) {
    auto [d1, d2] = partial_discriminants(k);
    return qrt_step(s, detail::QrtKernel::from(k, d2));
}

// Residual |Q(x, y)| relative to the coefficient scale.
inline double kernel_residual(const QrtState& s, const detail::QrtKernel& k) {
    const std::complex<double> q = detail::horner(k.a, s.x) * s.y * s.y +
                                   detail::horner(k.b, s.x) * s.y +
                                   detail::horner(k.c, s.x);
    const double scale = 1.0 + std::abs(s.x) * std::abs(s.x) + std::abs(s.y) * std::abs(s.y);
    return std::abs(q) / scale;
}

inline constexpr double return_tolerance = 1e-6;

inline OrbitEstimate estimate_orbit_order(const WeightMatrix& w, int seeds = 16,
                                          int max_n = 12, std::uint64_t seed = 0) {
    KernelData kernel = kernel_coefficients(w);
    auto [d1, d2] = partial_discriminants(kernel);
    const detail::QrtKernel k = detail::QrtKernel::from(kernel, d2);

    std::mt19937_64 rng(seed);
    OrbitEstimate est;
    est.seeds_total = seeds;
    std::vector<std::pair<std::optional<int>, double>> votes;

    for (int s = 0; s < seeds; ++s) {
        // Real x0 in [-2, 2], away from branch points and poles of xi.
        std::complex<double> x0;
        bool found = false;
        for (int attempt = 0; attempt < 64 && !found; ++attempt) {
            const double cand = -2.0 + 4.0 * detail::uniform01(rng);
            if (std::abs(detail::horner(k.delta2, {cand, 0.0})) > 1e-7 &&
                std::abs(detail::horner(k.a, {cand, 0.0})) > 1e-9) {
                x0 = {cand, 0.0};
                found = true;
            }
        }
        if (!found) continue;
        try {
            const auto [r1, r2] = detail::quadratic_roots(
                detail::horner(k.a, x0), detail::horner(k.b, x0), detail::horner(k.c, x0));
            QrtState state{x0, r1};
            const QrtState start = state;
            const double scale = 1.0 + std::abs(start.x) + std::abs(start.y);
            std::optional<int> first_return;
            double return_dist = 0.0;
            for (int n = 1; n <= max_n; ++n) {
                state = qrt_step(state, k);
                if (kernel_residual(state, k) > 1e-9) break;  // drifted off the curve
                const double dist =
                    (std::abs(state.x - start.x) + std::abs(state.y - start.y)) / scale;
                if (dist < return_tolerance) {
                    first_return = n;
                    return_dist = dist;
                    break;
                }
            }
            votes.emplace_back(first_return, return_dist);
        } catch (const walk_error& err) {
            if (err.code() != errc::near_pole) throw;
            // seed discarded
        }
    }

    est.seeds_usable = static_cast<int>(votes.size());
    if (votes.empty())
        throw walk_error(errc::all_seeds_degenerate, "no usable orbit seeds");

    // Majority vote: a closure order is reported only when at least 2/3 of
    // the usable seeds saw the same first return.
    for (int n = 1; n <= max_n; ++n) {
        int count = 0;
        double worst = 0.0;
        for (const auto& [vote, dist] : votes) {
            if (vote && *vote == n) {
                ++count;
                worst = std::max(worst, dist);
            }
        }
        if (3 * count >= 2 * est.seeds_usable) {
            est.closure_order = n;
            est.seeds_agreeing = count;
            est.residual = worst;
            return est;
        }
    }
    int none_count = 0;
    for (const auto& [vote, dist] : votes)
        if (!vote) ++none_count;
    est.seeds_agreeing = none_count;
    return est;
}

}  // namespace walkgroup
