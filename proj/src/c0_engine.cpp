#include "mdspline/c0_engine.hpp"

#include <algorithm>

#include "mdspline/scalar.hpp"

namespace mdspline {

namespace {

struct Run {
    std::size_t first_interval = 0;
    std::size_t last_interval = 0;
    int degree = 0;
    std::size_t offset = 0;
    std::vector<double> knots;
    std::vector<std::size_t> knot_index;
};

std::vector<Run> build_runs(const MDSpace& space) {
    std::vector<Run> runs;
    const std::size_t n_int = space.num_intervals();
    std::size_t start = 0;
    for (std::size_t i = 1; i <= n_int; ++i) {
        if (i < n_int && space.degrees[i] == space.degrees[start]) continue;
        Run run;
        run.first_interval = start;
        run.last_interval = i - 1;
        run.degree = space.degrees[start];
        runs.push_back(run);
        start = i;
    }
    std::size_t offset = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        Run& run = runs[r];
        const int d = run.degree;
        auto push = [&](std::size_t idx, int count) {
            for (int c = 0; c < count; ++c) {
                run.knots.push_back(space.knot(idx));
                run.knot_index.push_back(idx);
            }
        };
        push(run.first_interval, d + 1);
        for (std::size_t i = run.first_interval + 1; i <= run.last_interval; ++i) {
            const int k = space.cont(i);
            if (k < -1) throw SpaceError("pointwise evaluation needs continuities >= -1");
            push(i, d - k);
        }
        push(run.last_interval + 1, d + 1);
        run.offset = offset;
        const std::size_t n_funcs = run.knots.size() - static_cast<std::size_t>(d) - 1;
        if (r + 1 < runs.size()) {
            const int k = space.cont(run.last_interval + 1);
            if (k > 0 || k < -1)
                throw SpaceError("degree change at breakpoint " +
                                 std::to_string(run.last_interval + 1) +
                                 " needs continuity 0 or -1 for C0 evaluation");
            offset += n_funcs - (k == 0 ? 1 : 0);
        }
    }
    return runs;
}

const Run& run_of(const std::vector<Run>& runs, std::size_t interval) {
    for (const Run& r : runs)
        if (interval >= r.first_interval && interval <= r.last_interval) return r;
    throw SpaceError("interval outside space");
}

std::size_t span_of(const Run& run, std::size_t interval) {
    std::size_t span = 0;
    for (std::size_t p = 0; p < run.knot_index.size(); ++p)
        if (run.knot_index[p] <= interval) span = p;
    return span;
}

// Nonzero basis functions of degree p at x for the knot span (de Boor / Cox).
template <class T>
std::vector<T> basis_funs(const std::vector<double>& knots, std::size_t span, int p, const T& x) {
    std::vector<T> n(p + 1, T(0)), left(p + 1, T(0)), right(p + 1, T(0));
    n[0] = T(1);
    for (int j = 1; j <= p; ++j) {
        left[j] = x - T(knots[span + 1 - j]);
        right[j] = T(knots[span + j]) - x;
        T saved(0);
        for (int r = 0; r < j; ++r) {
            T temp = n[r] / (right[r + 1] + left[j - r]);
            n[r] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        n[j] = saved;
    }
    return n;
}

// Derivative of order m of the nonzero basis functions (NURBS book A2.3).
template <class T>
std::vector<T> ders_basis_funs(const std::vector<double>& knots, std::size_t span, int p,
                               const T& x, int m) {
    std::vector<std::vector<T>> ndu(p + 1, std::vector<T>(p + 1, T(0)));
    std::vector<T> left(p + 1, T(0)), right(p + 1, T(0));
    ndu[0][0] = T(1);
    for (int j = 1; j <= p; ++j) {
        left[j] = x - T(knots[span + 1 - j]);
        right[j] = T(knots[span + j]) - x;
        T saved(0);
        for (int r = 0; r < j; ++r) {
            ndu[j][r] = right[r + 1] + left[j - r];
            T temp = ndu[r][j - 1] / ndu[j][r];
            ndu[r][j] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        ndu[j][j] = saved;
    }
    std::vector<T> out(p + 1, T(0));
    if (m == 0) {
        for (int j = 0; j <= p; ++j) out[j] = ndu[j][p];
        return out;
    }
    std::vector<std::vector<T>> a(2, std::vector<T>(p + 1, T(0)));
    for (int r = 0; r <= p; ++r) {
        int s1 = 0, s2 = 1;
        a[0][0] = T(1);
        T d(0);
        for (int k = 1; k <= m; ++k) {
            d = T(0);
            const int rk = r - k, pk = p - k;
            if (r >= k) {
                a[s2][0] = a[s1][0] / ndu[pk + 1][rk];
                d = a[s2][0] * ndu[rk][pk];
            }
            const int j1 = rk >= -1 ? 1 : -rk;
            const int j2 = (r - 1 <= pk) ? k - 1 : p - r;
            for (int j = j1; j <= j2; ++j) {
                a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][rk + j];
                d += a[s2][j] * ndu[rk + j][pk];
            }
            if (r <= pk) {
                a[s2][k] = -a[s1][k - 1] / ndu[pk + 1][r];
                d += a[s2][k] * ndu[r][pk];
            }
            std::swap(s1, s2);
        }
        out[r] = d;
    }
    T factor(1);
    for (int k = p; k > p - m; --k) factor *= T(k);
    for (int j = 0; j <= p; ++j) out[j] *= factor;
    return out;
}

}  // namespace

template <class T>
BasisValues<T> eval_c0_basis(const MDSpace& space, double x) {
    const std::size_t j = find_interval(space, x);
    const auto runs = build_runs(space);
    const Run& run = run_of(runs, j);
    if (run.degree < 0) throw SpaceError("evaluation on a zero interval");
    const std::size_t span = span_of(run, j);
    BasisValues<T> bv;
    bv.first_index = run.offset + span - static_cast<std::size_t>(run.degree);
    bv.values = basis_funs<T>(run.knots, span, run.degree, from_double<T>(x));
    return bv;
}

template <class T>
BasisValues<T> eval_c0_derivatives(const MDSpace& space, double x, Side side, int order) {
    std::size_t j = find_interval(space, x);
    if (side == Side::left && j > 0 && x == space.knot(j)) --j;
    const auto runs = build_runs(space);
    const Run& run = run_of(runs, j);
    if (run.degree < 0) throw SpaceError("evaluation on a zero interval");
    const std::size_t span = span_of(run, j);
    BasisValues<T> bv;
    bv.first_index = run.offset + span - static_cast<std::size_t>(run.degree);
    if (order > run.degree) {
        bv.values.assign(run.degree + 1, T(0));
        return bv;
    }
    bv.values = ders_basis_funs<T>(run.knots, span, run.degree, from_double<T>(x), order);
    return bv;
}

template <class T>
std::vector<T> partition_integrals(const MDSpace& space, const ExtendedPartition& partition) {
    std::vector<T> out(partition.s.size(), T(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        T acc(0);
        for (std::size_t j = partition.s_index[i]; j < partition.t_index[i]; ++j) {
            const int d = space.degrees[j];
            if (d < 0) continue;
            acc += (from_double<T>(space.knot(j + 1)) - from_double<T>(space.knot(j))) / T(d + 1);
        }
        out[i] = acc;
    }
    return out;
}

template <class T>
std::vector<T> c0_integrals(const MDSpace& space) {
    return partition_integrals<T>(space, extended_partitions(space));
}

template BasisValues<double> eval_c0_basis<double>(const MDSpace&, double);
template BasisValues<Rational> eval_c0_basis<Rational>(const MDSpace&, double);
template BasisValues<double> eval_c0_derivatives<double>(const MDSpace&, double, Side, int);
template BasisValues<Rational> eval_c0_derivatives<Rational>(const MDSpace&, double, Side, int);
template std::vector<double> c0_integrals<double>(const MDSpace&);
template std::vector<Rational> c0_integrals<Rational>(const MDSpace&);
template std::vector<double> partition_integrals<double>(const MDSpace&,
                                                         const ExtendedPartition&);
template std::vector<Rational> partition_integrals<Rational>(const MDSpace&,
                                                             const ExtendedPartition&);

}  // namespace mdspline
