#pragma once

// From a weight matrix to the kernel Q(x,y) = a(x)y^2 + b(x)y + c(x)
//                                           = ~a(y)x^2 + ~b(y)x + ~c(y),
// its partial discriminants, the Eisenstein invariants, the Weierstrass
// curve and the rational base point, with the genus-1 gate.

#include <array>
#include <utility>

#include "walkgroup/curve.hpp"
#include "walkgroup/errors.hpp"
#include "walkgroup/polynomial.hpp"
#include "walkgroup/weights.hpp"

namespace walkgroup {

struct KernelData {
    // Coefficients in descending powers; b carries the p_{0,0} - 1 shift.
    std::array<Rational, 3> a, b, c;                    // quadratics in x
    std::array<Rational, 3> a_tilde, b_tilde, c_tilde;  // quadratics in y
    Quartic delta1{}, delta2{};                         // ~b^2 - 4~a~c, b^2 - 4ac
    Rational eisenstein_d, eisenstein_e;                // shared D and E
};

inline bool all_zero(const std::array<Rational, 3>& v) {
    return v[0] == 0 && v[1] == 0 && v[2] == 0;
}

inline KernelData kernel_coefficients(const WeightMatrix& w) {
    KernelData k;
    k.a = {w.p(1, 1), w.p(0, 1), w.p(-1, 1)};
    k.b = {w.p(1, 0), w.p(0, 0) - 1, w.p(-1, 0)};
    k.c = {w.p(1, -1), w.p(0, -1), w.p(-1, -1)};
    k.a_tilde = {w.p(1, 1), w.p(1, 0), w.p(1, -1)};
    k.b_tilde = {w.p(0, 1), w.p(0, 0) - 1, w.p(0, -1)};
    k.c_tilde = {w.p(-1, 1), w.p(-1, 0), w.p(-1, -1)};
    if (all_zero(k.a) || all_zero(k.c) || all_zero(k.a_tilde) || all_zero(k.c_tilde))
        throw walk_error(errc::not_biquadratic,
                         "kernel is not quadratic in both variables");
    return k;
}

namespace detail {

// q^2 - 4 p r for quadratics given as length-3 descending vectors.
inline Quartic quadratic_discriminant(const std::array<Rational, 3>& p,
                                      const std::array<Rational, 3>& q,
                                      const std::array<Rational, 3>& r) {
    Quartic out{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            out[i + j] += q[i] * q[j] - 4 * p[i] * r[j];
    return out;
}

}  // namespace detail

inline std::pair<Quartic, Quartic> partial_discriminants(const KernelData& k) {
    return {detail::quadratic_discriminant(k.a_tilde, k.b_tilde, k.c_tilde),
            detail::quadratic_discriminant(k.a, k.b, k.c)};
}

// Eisenstein invariants of a quartic written a x^4 + 4b x^3 + 6c x^2 + 4d x + e.
// The input is the plain descending coefficient vector; the binomial factors
// are divided out here, exactly, so degenerate (degree < 4) quartics go
// through the same formulas.
inline std::pair<Rational, Rational> eisenstein_invariants(const Quartic& f) {
    const Rational& a = f[0];
    const Rational b = f[1] / 4;
    const Rational c = f[2] / 6;
    const Rational d = f[3] / 4;
    const Rational& e = f[4];
    Rational D = a * e + 3 * c * c - 4 * b * d;
    Rational E = a * d * d + b * b * e - a * c * e - 2 * b * c * d + rational_pow(c, 3);
    return {std::move(D), std::move(E)};
}

// Fills delta1/delta2 and D/E, checks that both discriminants give the same
// invariants, and returns the curve y^2 = 4x^3 - g2 x - g3 with g2 = D,
// g3 = -E. A mismatch would be a bug in this library, not bad input.
inline WeierstrassCurve curve_from_kernel(KernelData& k) {
    auto [d1, d2] = partial_discriminants(k);
    k.delta1 = d1;
    k.delta2 = d2;
    auto [D1, E1] = eisenstein_invariants(k.delta1);
    auto [D2, E2] = eisenstein_invariants(k.delta2);
    if (D1 != D2 || E1 != E2)
        throw walk_error(errc::invariant_mismatch,
                         "Eisenstein invariants of the partial discriminants disagree");
    k.eisenstein_d = D2;
    k.eisenstein_e = E2;
    return WeierstrassCurve(D2, -E2);
}

// The rational point the QRT map translates by. The quadratic term uses the
// centre entry of P (that is, p_{0,0} - 1); with the raw p_{0,0} the point
// misses the curve.
inline CurvePoint base_point(const WeightMatrix& w) {
    const Rational centre = w.p(0, 0) - 1;
    Rational X = (centre * centre
                  - 4 * w.p(0, -1) * w.p(0, 1) - 4 * w.p(-1, 0) * w.p(1, 0)
                  + 8 * w.p(-1, 1) * w.p(1, -1) + 8 * w.p(-1, -1) * w.p(1, 1)) / 12;
    Rational Y = -det_p(w);
    return CurvePoint::affine(std::move(X), std::move(Y));
}

struct GenusResult {
    bool one = false;
    bool disc_zero = false;
    bool delta1_repeated = false;
    bool delta2_repeated = false;
};

// Genus 1 needs a nonsingular curve and squarefree partial discriminants;
// the three conditions are checked independently and all failures reported.
inline GenusResult genus_gate(const WeierstrassCurve& c, const Quartic& delta1,
                              const Quartic& delta2) {
    GenusResult g;
    g.disc_zero = (c.disc == 0);
    g.delta1_repeated = !poly_squarefree(delta1);
    g.delta2_repeated = !poly_squarefree(delta2);
    g.one = !g.disc_zero && !g.delta1_repeated && !g.delta2_repeated;
    return g;
}

}  // namespace walkgroup
