#pragma once

// The full pipeline: weights -> kernel -> curve -> base point -> order of
// the Galois group H = <xi, eta>. H decomposes as <delta> x| Z_2, so
// |H| = 2 * ord(Omega_3) when finite, and ord(Omega_3) <= 12 by Mazur's
// theorem, giving |H| <= 24.
//
// Ground truth for every order criterion is the division-polynomial /
// repeated-addition pair. The closed-form determinants and sextics carry
// known sign and transcription hazards, so they are evaluated and logged
// for comparison but never decide a verdict. Both sign variants are kept:
// the D,E forms as printed, and the variants obtained by substituting
// g2 = D, g3 = -E into the underlying Weierstrass identities (these are the
// ones that actually vanish at the advertised orders).

#include <optional>
#include <utility>

#include "walkgroup/curve.hpp"
#include "walkgroup/division.hpp"
#include "walkgroup/errors.hpp"
#include "walkgroup/kernel.hpp"
#include "walkgroup/torsion.hpp"
#include "walkgroup/weights.hpp"

namespace walkgroup {

inline constexpr int max_group_order = 2 * mazur_max_order;  // 24

// --- order criteria (genus-1 instances, Omega_3 on the curve) ---------------

// |H| = 4  <=>  ord(Omega_3) = 2  <=>  Y = 0  <=>  det P = 0.
inline bool criterion_order4(const WeightMatrix& w) { return det_p(w) == 0; }

// |H| = 6  <=>  ord(Omega_3) = 3, decided by Psi_3.
inline bool criterion_order6(const WeierstrassCurve& c, const CurvePoint& p) {
    return !p.at_infinity && division_poly_Psi(3, c, p) == 0;
}

// |H| = 8  <=>  ord(Omega_3) = 4: Psi_2 != 0 and Psi_4 = 0.
inline bool criterion_order8(const WeierstrassCurve& c, const CurvePoint& p) {
    return !p.at_infinity && p.y != 0 && division_poly_Psi(4, c, p) == 0;
}

namespace detail {

// Psi_n(P) != 0 for every proper divisor n of `order`, Psi_order(P) = 0.
// Pre: p affine with p.y != 0 (the order-2 case is decided by the callers).
inline bool divisor_criterion(int order, const WeierstrassCurve& c, const CurvePoint& p) {
    for (int n = 2; n < order; ++n)
        if (order % n == 0 && division_poly_Psi(n, c, p) == 0) return false;
    return division_poly_Psi(order, c, p) == 0;
}

}  // namespace detail

// |H| = 4m  <=>  ord(Omega_3) = 2m.
inline bool criterion_order_4m(int m, const WeierstrassCurve& c, const CurvePoint& p) {
    if (m < 1 || 2 * m > mazur_max_order)
        throw walk_error(errc::out_of_mazur_range,
                         "order " + std::to_string(4 * m) + " exceeds the bound 24");
    if (p.at_infinity) return false;
    if (m == 1) return p.y == 0;        // Psi_2 = y
    if (p.y == 0) return false;         // order is exactly 2
    return detail::divisor_criterion(2 * m, c, p);
}

// |H| = 4m + 2  <=>  ord(Omega_3) = 2m + 1.
inline bool criterion_order_4m_plus_2(int m, const WeierstrassCurve& c,
                                      const CurvePoint& p) {
    if (m < 1 || 2 * m + 1 > mazur_max_order)
        throw walk_error(errc::out_of_mazur_range,
                         "order " + std::to_string(4 * m + 2) + " exceeds the bound 24");
    if (p.at_infinity || p.y == 0) return false;
    return detail::divisor_criterion(2 * m + 1, c, p);
}

// --- logged closed forms -----------------------------------------------------

// 3x3 determinant | -12X 0 D ; 0 1 Y ; D Y M | with M = DX + 3E as printed.
inline Rational order6_determinant_paper(const Rational& D, const Rational& E,
                                         const Rational& X, const Rational& Y) {
    const Rational M = D * X + 3 * E;
    return -12 * X * (M - Y * Y) - D * D;
}

// The Hessian flex condition for y^2 z = 4x^3 - g2 x z^2 - g3 z^3 gives the
// same determinant with M = g2 X + 3 g3; this variant vanishes exactly at
// order 3.
inline Rational order6_determinant_hessian(const Rational& g2, const Rational& g3,
                                           const Rational& X, const Rational& Y) {
    const Rational M = g2 * X + 3 * g3;
    return -12 * X * (M - Y * Y) - g2 * g2;
}

// Order-8 sextic with the D,E signs as printed.
inline Rational order8_sextic_paper(const Rational& D, const Rational& E,
                                    const Rational& X) {
    return 64 * rational_pow(X, 6) - 80 * D * rational_pow(X, 4) -
           320 * E * rational_pow(X, 3) - 20 * D * D * X * X - 16 * D * E * X +
           rational_pow(D, 3) - 32 * E * E;
}

// Same sextic written in g2, g3 (the Psi_4 cofactor); vanishes exactly at
// order 4.
inline Rational order8_sextic_weierstrass(const Rational& g2, const Rational& g3,
                                          const Rational& X) {
    return 64 * rational_pow(X, 6) - 80 * g2 * rational_pow(X, 4) -
           320 * g3 * rational_pow(X, 3) - 20 * g2 * g2 * X * X - 16 * g2 * g3 * X +
           rational_pow(g2, 3) - 32 * g3 * g3;
}

// --- cofactor determinants ---------------------------------------------------

namespace detail {

inline Rational det4(const std::array<std::array<Rational, 4>, 4>& m) {
    Rational out = 0;
    for (std::size_t c = 0; c < 4; ++c) {
        Mat3 minor;
        for (std::size_t i = 1; i < 4; ++i) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < 4; ++j) {
                if (j == c) continue;
                minor[i - 1][cc++] = m[i][j];
            }
        }
        const Rational term = m[0][c] * det3(minor);
        out += (c % 2 == 0) ? term : -term;
    }
    return out;
}

}  // namespace detail

// 4x4 determinant in the cofactors of P whose vanishing also characterizes
// |H| = 6; kept as an independent cross-check of criterion_order6.
inline Rational yellowbook_order6_determinant(const WeightMatrix& w) {
    const Mat3 cof = cofactor_matrix(matrix_p(w));
    auto d = [&](std::size_t i, std::size_t j) { return cof[i - 1][j - 1]; };
    const std::array<std::array<Rational, 4>, 4> m{{
        {d(1, 1), d(2, 1), d(1, 2), d(2, 2)},
        {d(1, 2), d(2, 2), d(1, 3), d(2, 3)},
        {d(2, 1), d(3, 1), d(2, 2), d(3, 2)},
        {d(2, 2), d(3, 2), d(2, 3), d(3, 3)},
    }};
    return detail::det4(m);
}

inline bool yellowbook_order6_check(const WeightMatrix& w) {
    return yellowbook_order6_determinant(w) == 0;
}

// 3x3 cofactor determinant for |H| = 8, transcribed verbatim. The third
// entry of the first row reads 2*D12*D22 - (D11*D23 + D21) and is suspected
// to miss a factor on the lone D21; the form has known false positives on
// order-4 walks and is excluded from the agreement invariants.
inline Rational yellowbook_order8_determinant(const WeightMatrix& w) {
    const Mat3 cof = cofactor_matrix(matrix_p(w));
    auto d = [&](std::size_t i, std::size_t j) { return cof[i - 1][j - 1]; };
    Mat3 m;
    m[0][0] = 2 * d(2, 2) * d(3, 2) - (d(2, 1) * d(3, 3) + d(3, 1) * d(2, 3));
    m[0][1] = 2 * (d(2, 2) * d(2, 2) - d(1, 2) * d(3, 1) + d(2, 1) * d(2, 3)) +
              d(1, 1) * d(3, 3) + d(3, 1) * d(1, 3);
    m[0][2] = 2 * d(1, 2) * d(2, 2) - (d(1, 1) * d(2, 3) + d(2, 1));
    m[1][0] = d(3, 2) * d(3, 2) - d(3, 1) * d(3, 3);
    m[1][1] = -2 * d(3, 2) * d(2, 2) + d(3, 1) * d(2, 3) + d(2, 1) * d(3, 3);
    m[1][2] = d(2, 2) * d(2, 2) - d(2, 1) * d(2, 3);
    m[2][0] = d(2, 2) * d(2, 2) - d(2, 1) * d(2, 3);
    m[2][1] = -2 * d(2, 2) * d(1, 2) + d(1, 1) * d(2, 3) + d(1, 3) * d(2, 1);
    m[2][2] = d(1, 2) * d(1, 2) - d(1, 1) * d(1, 3);
    return det3(m);
}

inline bool yellowbook_order8_check(const WeightMatrix& w) {
    return yellowbook_order8_determinant(w) == 0;
}

// --- classification ----------------------------------------------------------

enum class Verdict { finite, infinite, degenerate };
enum class DegenerateReason { not_biquadratic, genus_zero, point_not_on_curve };

inline const char* degenerate_reason_name(DegenerateReason r) {
    switch (r) {
        case DegenerateReason::not_biquadratic: return "not-biquadratic";
        case DegenerateReason::genus_zero: return "genus-zero";
        case DegenerateReason::point_not_on_curve: return "point-not-on-curve";
    }
    return "unknown";
}

struct CriteriaRecord {
    bool order4_det_p = false;
    bool order6_psi3 = false;
    bool order8_psi4 = false;
    bool yellowbook_order6 = false;
    Rational order6_det_paper, order6_det_hessian;
    Rational order8_sextic_paper_value, order8_sextic_weierstrass_value;
    Rational yellowbook_order6_det;
    std::optional<Rational> yellowbook_order8_det;  // opt-in
};

struct ClassifyOptions {
    bool yellowbook_order8 = false;
};

struct GroupOrderResult {
    WeightMatrix weights;
    Rational det_p_value;
    std::optional<KernelData> kernel;
    std::optional<WeierstrassCurve> curve;
    std::optional<GenusResult> genus;
    std::optional<CurvePoint> omega3;
    bool omega3_on_curve = false;
    std::optional<TorsionVerdict> torsion;
    std::optional<CriteriaRecord> criteria;

    Verdict verdict = Verdict::degenerate;
    std::optional<DegenerateReason> reason;
    std::optional<int> omega3_order;  // set when finite
    std::optional<int> group_order;   // 2 * omega3_order when finite
};

inline GroupOrderResult classify(const WeightMatrix& w, const ClassifyOptions& options = {}) {
    GroupOrderResult r;
    r.weights = w;
    r.det_p_value = det_p(w);

    KernelData kernel;
    try {
        kernel = kernel_coefficients(w);
    } catch (const walk_error& err) {
        if (err.code() != errc::not_biquadratic) throw;
        r.verdict = Verdict::degenerate;
        r.reason = DegenerateReason::not_biquadratic;
        return r;
    }
    const WeierstrassCurve curve = curve_from_kernel(kernel);
    r.kernel = kernel;
    r.curve = curve;
    r.genus = genus_gate(curve, kernel.delta1, kernel.delta2);
    r.omega3 = base_point(w);

    if (!r.genus->one) {
        r.verdict = Verdict::degenerate;
        r.reason = DegenerateReason::genus_zero;
        return r;
    }
    r.omega3_on_curve = on_curve(*r.omega3, curve);
    if (!r.omega3_on_curve) {
        r.verdict = Verdict::degenerate;
        r.reason = DegenerateReason::point_not_on_curve;
        return r;
    }

    const CurvePoint& p = *r.omega3;
    CriteriaRecord crit;
    crit.order4_det_p = criterion_order4(w);
    crit.order6_psi3 = criterion_order6(curve, p);
    crit.order8_psi4 = criterion_order8(curve, p);
    const Rational D = curve.g2, E = -curve.g3;
    crit.order6_det_paper = order6_determinant_paper(D, E, p.x, p.y);
    crit.order6_det_hessian = order6_determinant_hessian(curve.g2, curve.g3, p.x, p.y);
    crit.order8_sextic_paper_value = order8_sextic_paper(D, E, p.x);
    crit.order8_sextic_weierstrass_value = order8_sextic_weierstrass(curve.g2, curve.g3, p.x);
    crit.yellowbook_order6_det = yellowbook_order6_determinant(w);
    crit.yellowbook_order6 = (crit.yellowbook_order6_det == 0);
    if (options.yellowbook_order8)
        crit.yellowbook_order8_det = yellowbook_order8_determinant(w);
    r.criteria = std::move(crit);

    r.torsion = torsion_order(p, curve);
    if (r.torsion->infinite()) {
        r.verdict = Verdict::infinite;
        return r;
    }
    r.verdict = Verdict::finite;
    r.omega3_order = r.torsion->order;
    r.group_order = 2 * *r.torsion->order;
    return r;
}

}  // namespace walkgroup
