/**
 * @file eval_api.hpp
 * @brief MDB-spline basis values, spline values, Greville abscissae and
 *        coefficient refinement under knot insertion.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "mdspline/assembler.hpp"
#include "mdspline/c0_engine.hpp"

namespace mdspline {

/// Nonzero window of target basis values at x: d_j + 1 functions of interval j.
template <class T>
[[nodiscard]] BasisValues<T> eval_basis(const RepMatrixBundle<T>& rep, double x);

/// sum c_i N_i(x)
template <class T>
[[nodiscard]] T eval_spline(const RepMatrixBundle<T>& rep, const std::vector<T>& coeffs, double x);

/// xi_0 = a, xi_i = a + sum_{h<i} integral of the h-th derivative-space function.
/// Rejects spaces with a degree-0 interval.
template <class T>
[[nodiscard]] std::vector<T> greville(const RepMatrixBundle<T>& rep);

/// Coefficients in the space with k_j lowered by one that represent the same
/// function as coeffs in space.
template <class T>
[[nodiscard]] std::vector<T> insert_knot_coeffs(const MDSpace& space, const std::vector<T>& coeffs,
                                                std::size_t breakpoint);

/// Coefficients of the C^{k_j} join step at breakpoint j (last cell of the
/// triangular scheme), as used by insert_knot_coeffs.
template <class T>
[[nodiscard]] RKICoefficients<T> knot_insertion_coefficients(const MDSpace& space,
                                                             std::size_t breakpoint);

}  // namespace mdspline
