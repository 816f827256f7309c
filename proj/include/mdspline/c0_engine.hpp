/**
 * @file c0_engine.hpp
 * @brief Values, one-sided derivatives and integrals of C0 (and C-1 glued)
 *        piecewise-conventional MDB-spline bases.
 *
 * The space is split into runs of equal degree. Each run is a conventional
 * B-spline space; a run boundary with continuity 0 shares one function
 * between the two runs, continuity -1 shares none.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "mdspline/space.hpp"

namespace mdspline {

/// Nonzero window of basis values: values[v] belongs to function first_index + v.
template <class T>
struct BasisValues {
    std::size_t first_index = 0;
    std::vector<T> values;
};

enum class Side { left, right };

/// Basis values at x. Requires a C0-type space with continuities >= -1.
template <class T>
[[nodiscard]] BasisValues<T> eval_c0_basis(const MDSpace& space, double x);

/// One-sided derivatives of the given order at x.
/// Order above the local degree yields zeros.
template <class T>
[[nodiscard]] BasisValues<T> eval_c0_derivatives(const MDSpace& space, double x, Side side,
                                                 int order);

/// Integral of every basis function; zero-function slots get 0.
template <class T>
[[nodiscard]] std::vector<T> c0_integrals(const MDSpace& space);

/// Integrals from an explicit partition over the knots and per-interval
/// degrees of space (degrees below zero contribute nothing).
template <class T>
[[nodiscard]] std::vector<T> partition_integrals(const MDSpace& space,
                                                 const ExtendedPartition& partition);

/// Scatters a window into a dense vector of length n.
template <class T>
[[nodiscard]] std::vector<T> scatter(const BasisValues<T>& bv, std::size_t n) {
    std::vector<T> out(n, T(0));
    for (std::size_t v = 0; v < bv.values.size(); ++v) out[bv.first_index + v] = bv.values[v];
    return out;
}

}  // namespace mdspline
