#pragma once

// Dense univariate polynomials over the rationals, stored as coefficient
// vectors in descending powers (index 0 = leading term). Degrees here never
// exceed 4, so the naive algorithms are the right tool.

#include <array>
#include <vector>

#include "walkgroup/rational.hpp"

namespace walkgroup {

using Poly = std::vector<Rational>;
using Quartic = std::array<Rational, 5>;  // descending: x^4 .. x^0

inline Poly poly_from(const Quartic& q) { return Poly(q.begin(), q.end()); }

inline Poly poly_trim(Poly p) {
    std::size_t lead = 0;
    while (lead < p.size() && p[lead] == 0) ++lead;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(lead));
    return p;
}

// Degree of the polynomial; -1 for the zero polynomial.
inline int poly_degree(const Poly& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) return static_cast<int>(p.size() - 1 - i);
    return -1;
}

template <typename Coeffs>
Rational poly_eval(const Coeffs& p, const Rational& x) {
    Rational acc = 0;
    for (const Rational& c : p) acc = acc * x + c;
    return acc;
}

template <typename Coeffs>
Poly poly_derivative(const Coeffs& p) {
    const auto n = static_cast<int>(std::size(p));
    Poly out;
    out.reserve(n > 0 ? n - 1 : 0);
    int power = n - 1;
    for (const Rational& c : p) {
        if (power > 0) out.push_back(c * power);
        --power;
    }
    return out;
}

inline Poly poly_mul(const Poly& u, const Poly& v) {
    if (u.empty() || v.empty()) return {};
    Poly out(u.size() + v.size() - 1, Rational(0));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i + j] += u[i] * v[j];
    return out;
}

// Remainder of f by g (g nonzero), exact over the rationals.
inline Poly poly_remainder(Poly f, Poly g) {
    f = poly_trim(std::move(f));
    g = poly_trim(std::move(g));
    while (!f.empty() && f.size() >= g.size()) {
        const Rational factor = f.front() / g.front();
        for (std::size_t i = 0; i < g.size(); ++i) f[i] -= factor * g[i];
        f = poly_trim(std::move(f));
    }
    return f;
}

// Degree of gcd(f, g); gcd of two zero polynomials is reported as -1.
inline int poly_gcd_degree(Poly f, Poly g) {
    f = poly_trim(std::move(f));
    g = poly_trim(std::move(g));
    while (!g.empty()) {
        Poly r = poly_remainder(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return poly_degree(f);
}

// Squarefree test via gcd with the derivative. Constants are squarefree,
// the zero polynomial is not.
template <typename Coeffs>
bool poly_squarefree(const Coeffs& coeffs) {
    Poly p = poly_trim(Poly(std::begin(coeffs), std::end(coeffs)));
    const int deg = poly_degree(p);
    if (deg < 0) return false;
    if (deg == 0) return true;
    return poly_gcd_degree(p, poly_derivative(p)) == 0;
}

}  // namespace walkgroup
