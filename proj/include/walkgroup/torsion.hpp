#pragma once

// Torsion order of a rational point, capped by Mazur's theorem: a rational
// torsion point has order in {1..10, 12}, so twelve additions decide
// finite-vs-infinite. Repeated addition is the authoritative route and the
// division polynomials are the cross-check; the two must agree.

#include <optional>
#include <string>

#include "walkgroup/curve.hpp"
#include "walkgroup/division.hpp"
#include "walkgroup/errors.hpp"

namespace walkgroup {

enum class TorsionMethod { repeated_addition, division_polynomial, both };

struct TorsionVerdict {
    std::optional<int> order;  // nullopt = infinite order
    TorsionMethod evidence = TorsionMethod::both;

    bool infinite() const { return !order.has_value(); }
};

inline std::optional<int> torsion_order_by_addition(const CurvePoint& p,
                                                    const WeierstrassCurve& c) {
    if (p.at_infinity) return 1;
    CurvePoint acc = p;
    for (int n = 2; n <= mazur_max_order; ++n) {
        acc = point_add(acc, p, c);
        if (acc.at_infinity) return n;
    }
    return std::nullopt;
}

inline std::optional<int> torsion_order_by_division(const CurvePoint& p,
                                                    const WeierstrassCurve& c) {
    if (!c.nonsingular())
        throw walk_error(errc::singular_curve, "torsion order undefined for disc = 0");
    if (!on_curve(p, c))
        throw walk_error(errc::not_on_curve, "torsion order needs a point on the curve");
    if (p.at_infinity) return 1;
    if (p.y == 0) return 2;  // resolved before any even-index recursion
    for (int n = 2; n <= mazur_max_order; ++n) {
        if (division_poly_Psi(n, c, p.x, p.y) == 0) return n;  // minimal zero = exact order
    }
    return std::nullopt;
}

inline TorsionVerdict torsion_order(const CurvePoint& p, const WeierstrassCurve& c) {
    if (!c.nonsingular())
        throw walk_error(errc::singular_curve, "torsion order undefined for disc = 0");
    if (!on_curve(p, c))
        throw walk_error(errc::not_on_curve, "torsion order needs a point on the curve");
    const std::optional<int> by_add = torsion_order_by_addition(p, c);
    const std::optional<int> by_psi = torsion_order_by_division(p, c);
    if (by_add != by_psi) {
        auto show = [](const std::optional<int>& o) {
            return o ? std::to_string(*o) : std::string("infinite");
        };
        throw walk_error(errc::method_disagreement,
                         "repeated addition says " + show(by_add) +
                             ", division polynomials say " + show(by_psi));
    }
    if (by_add && *by_add == 11)
        throw walk_error(errc::method_disagreement,
                         "order 11 is impossible for rational torsion");
    return TorsionVerdict{by_add, TorsionMethod::both};
}

}  // namespace walkgroup
