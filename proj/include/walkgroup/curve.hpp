#pragma once

// Elliptic curves y^2 = 4x^3 - g2 x - g3 over the rationals, with the
// chord-tangent group law. Additions are routed through the isomorphic
// short curve y^2 = x^3 + a x + b (a = -g2/4, b = -g3/4, y -> y/2) where
// the textbook slope formulas apply, then mapped back.

#include <utility>

#include "walkgroup/errors.hpp"
#include "walkgroup/rational.hpp"

namespace walkgroup {

struct WeierstrassCurve {
    Rational g2, g3;
    Rational disc;  // g2^3 - 27 g3^2

    WeierstrassCurve() = default;
    WeierstrassCurve(Rational g2_, Rational g3_)
        : g2(std::move(g2_)), g3(std::move(g3_)),
          disc(rational_pow(g2, 3) - 27 * g3 * g3) {}

    bool nonsingular() const { return disc != 0; }
};

struct ShortCurve {
    Rational a, b;  // y^2 = x^3 + a x + b

    static ShortCurve from(const WeierstrassCurve& c) {
        return ShortCurve{-c.g2 / 4, -c.g3 / 4};
    }
};

struct CurvePoint {
    bool at_infinity = true;
    Rational x, y;

    static CurvePoint infinity() { return CurvePoint{}; }
    static CurvePoint affine(Rational x_, Rational y_) {
        return CurvePoint{false, std::move(x_), std::move(y_)};
    }

    bool operator==(const CurvePoint& other) const {
        if (at_infinity || other.at_infinity) return at_infinity == other.at_infinity;
        return x == other.x && y == other.y;
    }
};

inline bool on_curve(const CurvePoint& p, const WeierstrassCurve& c) {
    if (p.at_infinity) return true;
    return p.y * p.y == 4 * rational_pow(p.x, 3) - c.g2 * p.x - c.g3;
}

inline bool on_short_curve(const Rational& x, const Rational& y, const ShortCurve& s) {
    return y * y == rational_pow(x, 3) + s.a * x + s.b;
}

inline CurvePoint point_neg(const CurvePoint& p) {
    if (p.at_infinity) return p;
    return CurvePoint::affine(p.x, -p.y);
}

namespace detail {

// Short-curve chord-tangent addition; inputs are assumed on the curve.
inline std::pair<bool, std::pair<Rational, Rational>> short_add(
    const std::pair<Rational, Rational>& p, const std::pair<Rational, Rational>& q,
    const ShortCurve& s) {
    const auto& [x1, y1] = p;
    const auto& [x2, y2] = q;
    Rational slope;
    if (x1 == x2) {
        if (y1 + y2 == 0) return {true, {}};  // inverse pair (covers y = 0 doubling)
        slope = (3 * x1 * x1 + s.a) / (2 * y1);
    } else {
        slope = (y2 - y1) / (x2 - x1);
    }
    Rational x3 = slope * slope - x1 - x2;
    Rational y3 = slope * (x1 - x3) - y1;
    return {false, {std::move(x3), std::move(y3)}};
}

}  // namespace detail

inline CurvePoint point_add(const CurvePoint& p, const CurvePoint& q,
                            const WeierstrassCurve& c) {
    if (!c.nonsingular())
        throw walk_error(errc::singular_curve, "group law undefined for disc = 0");
    if (!on_curve(p, c) || !on_curve(q, c))
        throw walk_error(errc::not_on_curve, "point_add input violates the curve equation");
    if (p.at_infinity) return q;
    if (q.at_infinity) return p;
    const ShortCurve s = ShortCurve::from(c);
    auto [inf, xy] = detail::short_add({p.x, p.y / 2}, {q.x, q.y / 2}, s);
    if (inf) return CurvePoint::infinity();
    return CurvePoint::affine(std::move(xy.first), 2 * xy.second);
}

// n-fold sum by repeated addition; n stays <= 12 in every caller, so no
// ladder is needed.
inline CurvePoint scalar_multiple(int n, const CurvePoint& p, const WeierstrassCurve& c) {
    if (n < 1) throw walk_error(errc::out_of_mazur_range, "scalar_multiple needs n >= 1");
    CurvePoint acc = p;
    for (int i = 1; i < n; ++i) acc = point_add(acc, p, c);
    return acc;
}

}  // namespace walkgroup
