#pragma once

// Exact rational arithmetic used throughout the library. Values are kept in
// lowest terms with positive denominator, so equality tests and printed
// output are canonical.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "walkgroup/errors.hpp"

namespace walkgroup {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& base, unsigned exponent) {
    Rational out = 1;
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

inline std::string to_string(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double to_double(const Rational& value) {
    return value.convert_to<double>();
}

// Accepts "p", "-p", "p/q"; any other shape (including q = 0) is a parse error.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&] {
        throw walk_error(errc::parse_error,
                         "malformed rational '" + std::string(text) + "'");
    };
    auto strip = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) -> Integer {
        s = strip(s);
        bool negative = false;
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
            negative = s.front() == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) fail();
        Integer out = 0;
        for (char ch : s) {
            if (ch < '0' || ch > '9') fail();
            out = out * 10 + (ch - '0');
        }
        return negative ? Integer(-out) : out;
    };

    text = strip(text);
    if (text.empty()) fail();
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const Integer num = parse_int(text.substr(0, slash));
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw walk_error(errc::parse_error,
                         "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace walkgroup
