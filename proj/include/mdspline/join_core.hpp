/**
 * @file join_core.hpp
 * @brief Stable C^r join of two MD-spline spaces by reverse knot insertion.
 *
 * A SectionBundle carries, for every derivative order rho, the matrix of
 * D^rho of its target basis relative to a C0-type reference basis. Joining
 * two bundles runs the triangular scheme: row n works in the order r-n
 * derivative spaces and column k raises the continuity at the join to k.
 * Every coefficient is a ratio of positive integrals; no subtraction.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <type_traits>
#include <vector>

#include "mdspline/matrix.hpp"
#include "mdspline/space.hpp"

namespace mdspline {

/// alpha_i, beta_i for i = first .. first + size - 1. beta stores 1 - alpha directly.
template <class T>
struct RKICoefficients {
    std::size_t first = 0;
    std::vector<T> alpha;
    std::vector<T> beta;
    [[nodiscard]] std::size_t size() const { return alpha.size(); }
};

/// One derivative order of a bundle.
template <class T>
struct OrderData {
    Matrix<T> m;                   ///< rows: dim(space), cols: dim(reference)
    MDSpace space;                 ///< target D^rho space (raw integers)
    MDSpace reference;             ///< C0-type reference space
    std::vector<T> ref_integrals;  ///< integrals of the reference basis
};

template <class T>
struct SectionBundle {
    std::vector<OrderData<T>> orders;  ///< index = derivative order
    [[nodiscard]] int max_order() const { return static_cast<int>(orders.size()) - 1; }
};

/// Identity bundle of a conventional (single degree) space for orders 0..max_order.
template <class T>
[[nodiscard]] SectionBundle<T> identity_bundle(const MDSpace& section, int max_order);

/// Middle entry is the sum of the two overlapping entries.
template <class T>
[[nodiscard]] std::vector<T> c0_join_integrals(const std::vector<T>& left,
                                               const std::vector<T>& right);

/// Block placement sharing the overlap entry.
template <class T>
[[nodiscard]] Matrix<T> c0_join_matrices(const Matrix<T>& left, const Matrix<T>& right);

/// Block diagonal placement (continuity -1 at the join).
template <class T>
[[nodiscard]] Matrix<T> concat_matrices(const Matrix<T>& left, const Matrix<T>& right);

/**
 * @brief Removal of one s entry at index p and one t entry at index tau.
 *
 * tau < p: rows below tau copy, rows tau..p-1 combine
 * alpha_i row_i + beta_{i+1} row_{i+1} (alpha_tau = beta_p = 1), rows from p
 * take row_{i+1}. tau >= p: rows below p copy, rows p..tau-1 vanish, rows from
 * tau take row_{i+1}.
 */
template <class T>
[[nodiscard]] Matrix<T> apply_reverse_step(const Matrix<T>& hat, long tau, long p,
                                           const RKICoefficients<T>& coeffs);

/// Integral vector after the same step: unchanged rows copy or shift,
/// changed rows are dot products of the new matrix with the reference integrals.
template <class T>
[[nodiscard]] std::vector<T> reverse_step_integrals(const std::vector<T>& hat_integrals,
                                                    const Matrix<T>& m,
                                                    const std::vector<T>& ref_integrals, long tau,
                                                    long p);

/// Ratio recurrence for one cell. prev covers [first, first + size - 2];
/// lower/upper are the previous-row integrals at continuity k-2 and k-1.
template <class T>
[[nodiscard]] RKICoefficients<T> rki_coefficients(std::size_t first, std::size_t size,
                                                  const RKICoefficients<T>& prev,
                                                  const std::vector<T>& lower,
                                                  const std::vector<T>& upper);

/// Counters for the triangular sweep.
struct JoinTelemetry {
    std::size_t cells = 0;       ///< reverse knot insertions performed
    std::size_t nontrivial = 0;  ///< coefficients computed by ratio
};

/// Everything a cell consumed and produced, for cross-checks.
template <class T>
struct CellTrace {
    int row = 0;
    int col = 0;
    RKICoefficients<T> coeffs;
    std::vector<T> lower;  ///< previous-row integrals at continuity col-2
    std::vector<T> upper;  ///< previous-row integrals at continuity col-1
    MDSpace coarse;        ///< space of the cell result
};

template <class T>
using CellObserver = std::function<void(const CellTrace<T>&)>;

/// C^r join at the common endpoint of left and right.
/// Both bundles need orders 0..max(r,1); the result has orders 0..max(r,1).
template <class T>
[[nodiscard]] SectionBundle<T> cr_join(const SectionBundle<T>& left, const SectionBundle<T>& right,
                                       int r, JoinTelemetry* telemetry = nullptr,
                                       const std::type_identity_t<CellObserver<T>>& observer = {});

}  // namespace mdspline
