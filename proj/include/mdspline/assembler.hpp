/**
 * @file assembler.hpp
 * @brief Full matrix construction for arbitrary target spaces: join
 *        scheduling over sections, whole-space degree reduction, and the
 *        mixed strategy.
 */
#pragma once

#include <string>
#include <vector>

#include "mdspline/join_core.hpp"
#include "mdspline/rde_core.hpp"
#include "mdspline/space.hpp"

namespace mdspline {

enum class Strategy { rki, rde, mixed, derivative };

[[nodiscard]] std::string to_string(Strategy s);
/// Throws std::invalid_argument on unknown names.
[[nodiscard]] Strategy parse_strategy(const std::string& name);

/// Final representation plus the per-order bundle it came from.
template <class T>
struct RepMatrixBundle {
    Strategy strategy = Strategy::rki;
    MDSpace space;
    SectionBundle<T> bundle;
    JoinTelemetry telemetry;

    [[nodiscard]] const Matrix<T>& matrix() const { return bundle.orders.at(0).m; }
    [[nodiscard]] const MDSpace& reference() const { return bundle.orders.at(0).reference; }
};

/// Per-section choice: true = the section belongs to a degree-reduction group.
struct MixedPlan {
    std::vector<bool> use_rde;
};

/// Minimizes nontrivial work: C^r joins cost r(r+1)/2, degree-reduction
/// groups cost the sum of their nontrivial window sizes.
[[nodiscard]] MixedPlan auto_plan(const MDSpace& space);

/// Nontrivial coefficient count of a degree-reduction build with the given order floor.
[[nodiscard]] std::size_t rde_cost(const MDSpace& space, int min_order);

template <class T>
[[nodiscard]] RepMatrixBundle<T> build_matrix_rki(const MDSpace& space,
                                                  const std::type_identity_t<CellObserver<T>>& observer = {});

template <class T>
[[nodiscard]] RepMatrixBundle<T> build_matrix_rde(const MDSpace& space,
                                                  RDEMode mode = RDEMode::subtraction_free);

template <class T>
[[nodiscard]] RepMatrixBundle<T> build_matrix_mixed(const MDSpace& space, const MixedPlan& plan);

/// Dispatch; derivative goes to the legacy path.
template <class T>
[[nodiscard]] RepMatrixBundle<T> build_matrix(const MDSpace& space, Strategy strategy);

}  // namespace mdspline
