#pragma once

// Division polynomials, evaluated at a point rather than manipulated as ring
// elements: classification only ever needs values. Two normalizations are
// provided and kept as independent evaluation routes.
//
//   psi_n: the textbook family on y^2 = x^3 + a x + b
//     psi_1 = 1, psi_2 = 2y,
//     psi_3 = 3x^4 + 6a x^2 + 12b x - a^2,
//     psi_4 = 4y (x^6 + 5a x^4 + 20b x^3 - 5a^2 x^2 - 4ab x - 8b^2 - a^3),
//     psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3         (m >= 2)
//     psi_{2m}   = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / (2y)  (m >= 3)
//
//   Psi_n: the same family transported to y^2 = 4x^3 - g2 x - g3 through
//   (x, y) -> (x, y/2), a = -g2/4, b = -g3/4. Written out in g2, g3:
//     Psi_2 = y,
//     Psi_3 = 3x^4 - (3/2) g2 x^2 - 3 g3 x - g2^2/16,
//     Psi_4 = y (2x^6 - (5/2) g2 x^4 - 10 g3 x^3 - (5/8) g2^2 x^2
//                - (1/2) g2 g3 x + g2^3/32 - g3^2),
//   with the identical recursions except that the even divisor is y.
//   This normalization is the one under which the recursions are exact;
//   the cleared-denominator quartic 48x^4 - 24 g2 x^2 - 48 g3 x - g2^2 and
//   sextic-times-y variants in circulation equal 16*Psi_3 and 32*Psi_4 and
//   are evaluated in the classifier as logged cross-checks only.
//
// Zero sets: for affine P on a nonsingular curve, Psi_n(P) = 0 iff the
// order of P divides n. Even indices >= 6 divide by y, so callers resolve
// the y = 0 (order 2) case before asking for them.

#include <vector>

#include "walkgroup/curve.hpp"
#include "walkgroup/errors.hpp"
#include "walkgroup/rational.hpp"

namespace walkgroup {

inline constexpr int mazur_max_order = 12;  // largest rational torsion order

namespace detail {

inline void check_division_index(int n) {
    if (n < 1 || n > mazur_max_order)
        throw walk_error(errc::out_of_mazur_range,
                         "division polynomial index " + std::to_string(n) +
                             " outside 1.." + std::to_string(mazur_max_order));
}

// Iteratively fills values[0..n] given the five base cases; `even_divisor`
// is 2y for the short family and y for the transported one.
inline void fill_recursion(std::vector<Rational>& v, int n, const Rational& even_divisor) {
    for (int k = 5; k <= n; ++k) {
        const int m = k / 2;
        if (k % 2 == 1) {
            v[static_cast<std::size_t>(k)] =
                v[static_cast<std::size_t>(m + 2)] * rational_pow(v[static_cast<std::size_t>(m)], 3) -
                v[static_cast<std::size_t>(m - 1)] * rational_pow(v[static_cast<std::size_t>(m + 1)], 3);
        } else {
            if (even_divisor == 0)
                throw walk_error(errc::division_by_zero_y,
                                 "even-index recursion requested at y = 0");
            v[static_cast<std::size_t>(k)] =
                v[static_cast<std::size_t>(m)] *
                (v[static_cast<std::size_t>(m + 2)] * v[static_cast<std::size_t>(m - 1)] * v[static_cast<std::size_t>(m - 1)] -
                 v[static_cast<std::size_t>(m - 2)] * v[static_cast<std::size_t>(m + 1)] * v[static_cast<std::size_t>(m + 1)]) /
                even_divisor;
        }
    }
}

}  // namespace detail

inline Rational division_poly_psi(int n, const ShortCurve& s, const Rational& x,
                                  const Rational& y) {
    detail::check_division_index(n);
    const Rational x2 = x * x;
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    v[0] = 0;
    v[1] = 1;
    if (n >= 2) v[2] = 2 * y;
    if (n >= 3) v[3] = 3 * x2 * x2 + 6 * s.a * x2 + 12 * s.b * x - s.a * s.a;
    if (n >= 4)
        v[4] = 4 * y * (rational_pow(x, 6) + 5 * s.a * x2 * x2 + 20 * s.b * x2 * x
                        - 5 * s.a * s.a * x2 - 4 * s.a * s.b * x
                        - 8 * s.b * s.b - rational_pow(s.a, 3));
    detail::fill_recursion(v, n, 2 * y);
    return v[static_cast<std::size_t>(n)];
}

inline Rational division_poly_Psi(int n, const WeierstrassCurve& c, const Rational& x,
                                  const Rational& y) {
    detail::check_division_index(n);
    const Rational x2 = x * x;
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    v[0] = 0;
    v[1] = 1;
    if (n >= 2) v[2] = y;
    if (n >= 3)
        v[3] = 3 * x2 * x2 - Rational(3, 2) * c.g2 * x2 - 3 * c.g3 * x - c.g2 * c.g2 / 16;
    if (n >= 4)
        v[4] = y * (2 * rational_pow(x, 6) - Rational(5, 2) * c.g2 * x2 * x2
                    - 10 * c.g3 * x2 * x - Rational(5, 8) * c.g2 * c.g2 * x2
                    - c.g2 * c.g3 * x / 2 + rational_pow(c.g2, 3) / 32 - c.g3 * c.g3);
    detail::fill_recursion(v, n, y);
    return v[static_cast<std::size_t>(n)];
}

inline Rational division_poly_Psi(int n, const WeierstrassCurve& c, const CurvePoint& p) {
    if (p.at_infinity)
        throw walk_error(errc::not_on_curve, "division polynomial needs an affine point");
    return division_poly_Psi(n, c, p.x, p.y);
}

}  // namespace walkgroup
