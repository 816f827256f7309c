/**
 * @file scalar.hpp
 * @brief Scalar types shared by the floating-point path and the exact oracle.
 */
#pragma once

#include <cmath>
#include <string>

#include <gmpxx.h>

namespace mdspline {

/// Exact rational scalar (canonical numerator/denominator).
using Rational = mpq_class;

/// Converts an exact binary double into scalar T without rounding.
template <class T>
[[nodiscard]] inline T from_double(double v) {
    return T(v);
}

[[nodiscard]] inline double to_double(double v) { return v; }
[[nodiscard]] inline double to_double(const Rational& v) { return v.get_d(); }

[[nodiscard]] inline double abs_value(double v) { return std::fabs(v); }
[[nodiscard]] inline Rational abs_value(const Rational& v) { return abs(v); }

/// "p/q" (or "p" for integers).
[[nodiscard]] inline std::string to_fraction_string(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    return c.get_str();
}

}  // namespace mdspline
