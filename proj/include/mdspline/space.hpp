/**
 * @file space.hpp
 * @brief MD-spline space descriptors: validation, dimension, extended
 *        partitions, associated C0 spaces, derivative spaces and sections.
 *
 * Indexing: breakpoints are stored 0-based but addressed through knot(i)
 * with knot(0) = a, knot(q+1) = b. Continuity k_i (i = 1..q) lives at
 * continuities[i-1]. Basis functions are numbered 0-based.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdspline {

/// Raised for malformed or inconsistent space descriptions.
class SpaceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Interval, breakpoints, per-interval degrees and per-breakpoint continuities.
struct MDSpace {
    double a = 0.0;
    double b = 1.0;
    std::vector<double> breakpoints;  ///< x_1..x_q
    std::vector<int> degrees;         ///< d_0..d_q
    std::vector<int> continuities;    ///< k_1..k_q
    bool internal = false;            ///< negative degrees/continuities allowed

    [[nodiscard]] std::size_t num_breakpoints() const { return breakpoints.size(); }
    [[nodiscard]] std::size_t num_intervals() const { return degrees.size(); }

    /// knot(0) = a, knot(i) = x_i, knot(q+1) = b
    [[nodiscard]] double knot(std::size_t i) const {
        if (i == 0) return a;
        if (i > breakpoints.size()) return b;
        return breakpoints[i - 1];
    }

    /// Continuity at breakpoint i (1-based).
    [[nodiscard]] int cont(std::size_t i) const { return continuities[i - 1]; }

    [[nodiscard]] int max_degree() const;
    [[nodiscard]] int min_degree() const;

    bool operator==(const MDSpace&) const = default;
};

/// Builds and validates a public space.
[[nodiscard]] MDSpace validate_space(double a, double b, std::vector<double> breakpoints,
                                     std::vector<int> degrees, std::vector<int> continuities);

/// Throws SpaceError if the space violates its invariants.
void check_space(const MDSpace& space);

/// K = d_0 + 1 + sum(d_i - k_i), raw integers.
[[nodiscard]] long dimension(const MDSpace& space);

/// Left/right extended partitions, with breakpoint indices of every entry.
struct ExtendedPartition {
    std::vector<double> s;
    std::vector<double> t;
    std::vector<std::size_t> s_index;  ///< knot index (0..q+1) of s_i
    std::vector<std::size_t> t_index;  ///< knot index (0..q+1) of t_i
};

/// Raw multiplicities; throws SpaceError when a multiplicity is negative.
[[nodiscard]] ExtendedPartition extended_partitions(const MDSpace& space);

/// Drops the first r entries of s and the last r entries of t.
/// Valid description of the derivative space D^r of a public space even
/// when raw multiplicities of D^r would be negative.
[[nodiscard]] ExtendedPartition derivative_partitions(const ExtendedPartition& base, int r);

/// Continuity zero (or raw value if already below) where adjacent degrees differ.
[[nodiscard]] MDSpace associated_c0(const MDSpace& space);

/// D^r S descriptor.
struct DerivativeDescriptor {
    MDSpace base;
    int order = 0;
    MDSpace space;                    ///< shifted degrees and continuities, internal
    std::vector<bool> zero_interval;  ///< d_i - r < 0
    long dim = 0;
};

[[nodiscard]] DerivativeDescriptor derivative_space(const MDSpace& space, int r);

/// Degrees and continuities shifted by -r; marked internal when r > 0.
[[nodiscard]] MDSpace shift_space(const MDSpace& space, int r);

/// Maximal run of equal-degree intervals.
struct Section {
    std::size_t first_interval = 0;
    std::size_t last_interval = 0;
    int degree = 0;
};

struct JoinStep {
    std::size_t breakpoint = 0;  ///< 1-based breakpoint index
    int continuity = 0;
};

struct SectionDecomposition {
    std::vector<std::size_t> boundaries;  ///< 0, degree-change indices, q+1
    std::vector<Section> sections;
    std::vector<JoinStep> join_order;
};

[[nodiscard]] SectionDecomposition section_decomposition(const MDSpace& space);

/// Orders joins by decreasing continuity, ties left to right.
[[nodiscard]] std::vector<JoinStep> order_joins(std::vector<JoinStep> joins);

/// Interval j with x in [x_j, x_{j+1}); q for x == b.
[[nodiscard]] std::size_t find_interval(const MDSpace& space, double x);

/// Sub-space on intervals first..last (inclusive).
[[nodiscard]] MDSpace restrict_space(const MDSpace& space, std::size_t first, std::size_t last);

/// Concatenates left and right (left.b == right.a) with the given continuity.
[[nodiscard]] MDSpace join_spaces(const MDSpace& left, const MDSpace& right, int continuity);

/// Human-readable compact form, e.g. "[2,4] (4_3 3)".
[[nodiscard]] std::string describe(const MDSpace& space);

}  // namespace mdspline
