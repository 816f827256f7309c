/**
 * @file legacy_derivative.hpp
 * @brief Reverse knot insertion driven by one-sided derivative jumps of the
 *        finer basis. Kept to measure its loss of accuracy against the
 *        integral-ratio path.
 */
#pragma once

#include "mdspline/assembler.hpp"
#include "mdspline/join_core.hpp"
#include "mdspline/space.hpp"

namespace mdspline {

/**
 * @brief Coefficients for raising the continuity at breakpoint j from k-1 to k.
 *
 * hat_m represents the finer basis relative to the C0 space c0 (global
 * frame); first is the window start and the window has k entries.
 * alpha_i = 1 + alpha_{i-1} (D-N_{i-1} - D+N_{i-1}) / (D-N_i - D+N_i), beta = 1 - alpha.
 */
template <class T>
[[nodiscard]] RKICoefficients<T> alpha_via_derivatives(const Matrix<T>& hat_m, const MDSpace& c0,
                                                       std::size_t breakpoint, int k,
                                                       std::size_t first);

/// Same join schedule as the stable path, coefficients from derivative jumps.
/// Only order 0 is produced.
template <class T>
[[nodiscard]] RepMatrixBundle<T> build_matrix_rki_derivative(const MDSpace& space);

}  // namespace mdspline
