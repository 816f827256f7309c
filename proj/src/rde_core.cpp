#include "mdspline/rde_core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mdspline/c0_engine.hpp"
#include "mdspline/scalar.hpp"

namespace mdspline {

namespace {

int max_continuity(const MDSpace& space) {
    int k = 0;
    for (int v : space.continuities) k = std::max(k, v);
    return k;
}

// Integrals of D^rho of a public space, through the dropped partitions.
template <class T>
std::vector<T> derivative_integrals(const MDSpace& space, int rho) {
    const ExtendedPartition base = extended_partitions(space);
    return partition_integrals<T>(shift_space(space, rho), derivative_partitions(base, rho));
}

// First level of the fidelity variant: differences of partial sums.
template <class T>
RKICoefficients<T> difference_coefficients(std::size_t first, std::size_t size,
                                           const std::vector<T>& lower,
                                           const std::vector<T>& upper) {
    RKICoefficients<T> c;
    c.first = first;
    T sum_lower(0), sum_upper(0);
    for (std::size_t t = 0; t < size; ++t) {
        const std::size_t i = first + t;
        const T& den = upper[i - 1];
        if (!(den > T(0)))
            throw std::logic_error("rde: nonpositive denominator at index " + std::to_string(i));
        sum_lower += lower[i - 1];
        c.alpha.push_back(T((sum_lower - sum_upper) / den));
        sum_upper += upper[i - 1];
        c.beta.push_back(T((sum_upper - sum_lower) / den));
    }
    return c;
}

}  // namespace

RDESchedule rde_schedule(const MDSpace& space) {
    RDESchedule s;
    s.max_degree = space.max_degree();
    for (std::size_t j = 0; j < space.num_intervals(); ++j) {
        for (int h = s.max_degree - 1; h >= space.degrees[j]; --h) s.steps.push_back({j, h});
    }
    s.total = s.steps.size();
    return s;
}

MDSpace rde_reference(const MDSpace& space) {
    MDSpace s0 = space;
    std::fill(s0.degrees.begin(), s0.degrees.end(), space.max_degree());
    return s0;
}

int rde_levels(const MDSpace& space, RDEMode mode, int min_order) {
    const int m = space.max_degree();
    const int kmax = max_continuity(space);
    if (mode == RDEMode::subtraction_free)
        return std::max({1, m - 1, kmax, min_order});
    return std::max({1, kmax, std::max(1, min_order) + 1});
}

template <class T>
SectionBundle<T> rde_build(const MDSpace& space, RDEMode mode, int min_order,
                           JoinTelemetry* telemetry) {
    check_space(space);
    if (space.internal) throw SpaceError("rde_build needs a public space");
    const int r = rde_levels(space, mode, min_order);
    const int m = space.max_degree();
    if (r > m && m > 0 && mode == RDEMode::subtraction_free)
        throw SpaceError("rde_build: requested order exceeds max degree");
    const RDESchedule schedule = rde_schedule(space);
    const MDSpace s0 = rde_reference(space);
    const int k_first = mode == RDEMode::subtraction_free ? 0 : 1;
    const std::size_t n_levels = static_cast<std::size_t>(r - k_first + 1);

    // Level index l = k - k_first, derivative order r - k.
    std::vector<int> order(n_levels);
    std::vector<Matrix<T>> mats(n_levels);
    std::vector<std::vector<T>> ref_in(n_levels), cur_in(n_levels);
    for (std::size_t l = 0; l < n_levels; ++l) {
        order[l] = r - (static_cast<int>(l) + k_first);
        const MDSpace ref = shift_space(s0, order[l]);
        ref_in[l] = c0_integrals<T>(ref);
        mats[l] = Matrix<T>::identity(ref_in[l].size());
        cur_in[l] = ref_in[l];
    }
    // Integrals of D^r S_n for the fidelity base row.
    std::vector<T> base_prev, base_cur;
    if (mode == RDEMode::fidelity && schedule.total > 0) base_prev = derivative_integrals<T>(s0, r);

    MDSpace sn = s0;
    for (const RDEStep& step : schedule.steps) {
        sn.degrees[step.interval] = step.degree;
        const std::size_t j = step.interval;
        long prefix = sn.degrees[0] + 1;
        for (std::size_t h = 1; h <= j; ++h) prefix += sn.degrees[h] - sn.cont(h);
        if (mode == RDEMode::fidelity) base_cur = derivative_integrals<T>(sn, r);

        RKICoefficients<T> prev_coeffs;
        std::vector<T> prev_lower, prev_upper;
        for (std::size_t l = 0; l < n_levels; ++l) {
            const int rho = order[l];
            const long w = step.degree - rho;
            const long ie = prefix - rho - 1;
            const long n_hat = static_cast<long>(mats[l].rows());
            long tau = ie - w;
            long p = ie + 1;
            RKICoefficients<T> c;
            if (w >= 1) {
                const std::size_t first = static_cast<std::size_t>(tau + 1);
                if (l == 0 && mode == RDEMode::fidelity) {
                    c = difference_coefficients(first, static_cast<std::size_t>(w), base_prev,
                                                base_cur);
                } else if (l == 0) {
                    throw std::logic_error("rde: nontrivial window on the base level");
                } else {
                    c = rki_coefficients(first, static_cast<std::size_t>(w), prev_coeffs,
                                         prev_lower, prev_upper);
                }
                if (telemetry) {
                    ++telemetry->cells;
                    telemetry->nontrivial += c.size();
                }
            } else if (w < 0) {
                p = std::max(p, 0L);
                tau = std::min(tau, n_hat - 1);
            }
            std::vector<T> lower = std::move(cur_in[l]);
            mats[l] = apply_reverse_step(mats[l], tau, p, c);
            std::vector<T> upper;
            if (l + 1 < n_levels) {
                if (l == 0 && mode == RDEMode::subtraction_free) {
                    upper = derivative_integrals<T>(sn, rho);
                } else {
                    upper = reverse_step_integrals(lower, mats[l], ref_in[l], tau, p);
                }
            }
            cur_in[l] = upper;
            prev_coeffs = std::move(c);
            prev_lower = std::move(lower);
            prev_upper = std::move(upper);
        }
        if (mode == RDEMode::fidelity) base_prev = std::move(base_cur);
    }

    SectionBundle<T> out;
    out.orders.resize(n_levels);
    for (std::size_t l = 0; l < n_levels; ++l) {
        OrderData<T>& o = out.orders[static_cast<std::size_t>(order[l])];
        o.m = std::move(mats[l]);
        o.space = shift_space(space, order[l]);
        o.reference = shift_space(s0, order[l]);
        o.ref_integrals = std::move(ref_in[l]);
    }
    return out;
}

template SectionBundle<double> rde_build<double>(const MDSpace&, RDEMode, int, JoinTelemetry*);
template SectionBundle<Rational> rde_build<Rational>(const MDSpace&, RDEMode, int, JoinTelemetry*);

}  // namespace mdspline
