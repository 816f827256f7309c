/**
 * @file rde_core.hpp
 * @brief Representation relative to the conventional degree-m B-spline basis
 *        by reverse degree elevation (rhomboid scheme).
 *
 * Starting from the conventional space of degree m = max degree, every step
 * lowers the degree of one interval by one. Level k of the scheme works in
 * the order r-k derivative spaces; each level's coefficients are ratios of
 * integrals from the level below.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "mdspline/join_core.hpp"
#include "mdspline/space.hpp"

namespace mdspline {

/// One degree-lowering step: interval receives degree `degree`.
struct RDEStep {
    std::size_t interval = 0;
    int degree = 0;
};

struct RDESchedule {
    int max_degree = 0;         ///< m
    std::size_t total = 0;      ///< g = sum(m - d_j)
    std::vector<RDEStep> steps; ///< intervals left to right, degree descending
};

[[nodiscard]] RDESchedule rde_schedule(const MDSpace& space);

enum class RDEMode {
    subtraction_free,  ///< extra level so every coefficient is a ratio
    fidelity,          ///< first level from integral differences
};

/// Number of levels r used for the space; min_order raises it so that the
/// bundle provides at least orders 0..min_order.
[[nodiscard]] int rde_levels(const MDSpace& space, RDEMode mode, int min_order = 1);

/// Bundle of the space relative to D^rho of the degree-m conventional space.
/// subtraction_free yields orders 0..r, fidelity yields orders 0..r-1.
template <class T>
[[nodiscard]] SectionBundle<T> rde_build(const MDSpace& space,
                                         RDEMode mode = RDEMode::subtraction_free,
                                         int min_order = 1, JoinTelemetry* telemetry = nullptr);

/// Conventional degree-m space with the continuities of space.
[[nodiscard]] MDSpace rde_reference(const MDSpace& space);

}  // namespace mdspline
