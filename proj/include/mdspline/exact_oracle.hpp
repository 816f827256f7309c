/**
 * @file exact_oracle.hpp
 * @brief Exact rational replay of the construction, error metrics and
 *        formula cross-checks.
 *
 * Breakpoints are binary doubles, so converting them to rationals is exact.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdspline/assembler.hpp"
#include "mdspline/matrix.hpp"
#include "mdspline/scalar.hpp"

namespace mdspline {

using RationalMatrix = Matrix<Rational>;

[[nodiscard]] RationalMatrix oracle_build_matrix(const MDSpace& space, Strategy strategy);

/// Exact max column sum of |M_float - M_exact|, rounded once.
[[nodiscard]] double matrix_error(const Matrix<double>& m, const RationalMatrix& exact);

struct ValueError {
    double absolute = 0.0;
    double relative = 0.0;  ///< absolute when the exact value is 0
};

[[nodiscard]] ValueError value_error(double value, const Rational& exact);

/// Outcome of an exact cross-check.
struct CrossCheck {
    bool ok = true;
    std::size_t checked = 0;  ///< coefficients compared
    std::string first_mismatch;
};

/// Every join cell: coefficients from Greville differences of the finer and
/// coarser spaces equal the integral-ratio coefficients.
[[nodiscard]] CrossCheck oracle_greville_crosscheck(const MDSpace& space);

/// Derivative-jump path and integral-ratio path give the same exact matrix.
[[nodiscard]] CrossCheck oracle_derivative_crosscheck(const MDSpace& space);

/// Conventional (single degree) space: for each breakpoint with k >= 1, every
/// cell of the join at that breakpoint whose spaces are conventional B-spline
/// spaces reproduces the classical knot-insertion weights.
[[nodiscard]] CrossCheck oracle_boehm_crosscheck(const MDSpace& space);

/// Entries as "p/q" strings.
[[nodiscard]] nlohmann::json fractions_to_json(const RationalMatrix& m);

}  // namespace mdspline
