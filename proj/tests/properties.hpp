#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "mdspline/eval_api.hpp"

namespace mdspline::testing {

/// Outcome of one property on one space; message names the first violation.
struct PropertyResult {
    bool ok = true;
    double worst = 0.0;
    std::string message;

    void fail(const std::string& m) {
        if (ok) message = m;
        ok = false;
    }
};

inline std::string where(const MDSpace& s, double x) {
    std::ostringstream os;
    os.precision(17);
    os << describe(s) << " at x=" << x;
    return os.str();
}

inline PropertyResult partition_of_unity(const RepMatrixBundle<double>& rep, std::size_t n, double tol) {
    PropertyResult r;
    for (double x : sample_points(rep.space, n)) {
        double sum = 0.0;
        for (double v : eval_basis(rep, x).values) sum += v;
        r.worst = std::max(r.worst, std::abs(sum - 1.0));
        if (std::abs(sum - 1.0) > tol) r.fail("sum " + std::to_string(sum) + " " + where(rep.space, x));
    }
    return r;
}

inline PropertyResult column_sums(const Matrix<double>& m, double tol) {
    PropertyResult r;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, c);
        r.worst = std::max(r.worst, std::abs(sum - 1.0));
        if (std::abs(sum - 1.0) > tol) r.fail("column " + std::to_string(c));
    }
    return r;
}

inline PropertyResult entry_range(const Matrix<double>& m, double tol) {
    PropertyResult r;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(i, c) < -tol || m(i, c) > 1.0 + tol)
                r.fail("entry (" + std::to_string(i) + "," + std::to_string(c) + ")");
    return r;
}

/// Strictly increasing, endpoints a and b. Spaces with a degree-0 interval are skipped.
inline PropertyResult greville_order(const RepMatrixBundle<double>& rep) {
    PropertyResult r;
    if (rep.space.min_degree() < 1) return r;
    const auto xi = greville(rep);
    if (xi.front() != rep.space.a || xi.back() != rep.space.b) r.fail("endpoints " + describe(rep.space));
    for (std::size_t i = 1; i < xi.size(); ++i)
        if (!(xi[i] > xi[i - 1])) r.fail("not increasing at " + std::to_string(i) + " " + describe(rep.space));
    return r;
}

/// Refining one breakpoint keeps the spline; error relative to the spline of |c|.
inline PropertyResult knot_insertion_roundtrip(const MDSpace& s, std::mt19937& rng, std::size_t n,
                                               double tol) {
    PropertyResult r;
    std::vector<std::size_t> candidates;
    for (std::size_t j = 1; j <= s.num_breakpoints(); ++j)
        if (s.cont(j) >= 1) candidates.push_back(j);
    if (candidates.empty()) return r;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const std::size_t j = candidates[pick(rng)];
    const auto coarse = build_matrix_rki<double>(s);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::vector<double> c(coarse.matrix().rows());
    for (double& v : c) v = coef(rng);
    std::vector<double> mag(c.size());
    std::transform(c.begin(), c.end(), mag.begin(), [](double v) { return std::abs(v); });
    MDSpace fine = s;
    fine.continuities[j - 1] -= 1;
    const auto refined = build_matrix_rki<double>(fine);
    const auto cf = insert_knot_coeffs(s, c, j);
    for (double x : sample_points(s, n)) {
        const double f = eval_spline(coarse, c, x);
        const double g = eval_spline(refined, cf, x);
        const double scale = eval_spline(coarse, mag, x);
        const double e = scale > 0 ? std::abs(f - g) / scale : std::abs(f - g);
        r.worst = std::max(r.worst, e);
        if (e > tol) r.fail("breakpoint " + std::to_string(j) + " " + where(s, x));
    }
    return r;
}

inline PropertyResult strategy_agreement(const MDSpace& s, std::size_t n, double tol) {
    PropertyResult r;
    const auto rki = build_matrix<double>(s, Strategy::rki);
    const auto rde = build_matrix<double>(s, Strategy::rde);
    const auto mixed = build_matrix<double>(s, Strategy::mixed);
    const std::size_t k = rki.matrix().rows();
    for (double x : sample_points(s, n)) {
        const auto a = scatter(eval_basis(rki, x), k);
        const auto b = scatter(eval_basis(rde, x), k);
        const auto c = scatter(eval_basis(mixed, x), k);
        for (std::size_t i = 0; i < k; ++i) {
            const double e = std::max(std::abs(a[i] - b[i]), std::abs(a[i] - c[i]));
            r.worst = std::max(r.worst, e);
            if (e > tol) r.fail("function " + std::to_string(i) + " " + where(s, x));
        }
    }
    return r;
}

/// Dense evaluation through the full matrix: exactly d_j + 1 functions are nonzero inside interval j.
inline PropertyResult local_support(const RepMatrixBundle<double>& rep) {
    PropertyResult r;
    const MDSpace& s = rep.space;
    const std::size_t k0 = rep.matrix().cols();
    for (std::size_t j = 0; j < s.num_intervals(); ++j) {
        for (double t : {0.25, 0.5, 0.75}) {
            const double x = s.knot(j) + t * (s.knot(j + 1) - s.knot(j));
            const auto n0 = scatter(eval_c0_basis<double>(rep.reference(), x), k0);
            const auto n = mat_vec(rep.matrix(), n0);
            const auto count = std::count_if(n.begin(), n.end(), [](double v) { return v != 0.0; });
            const auto positive = std::count_if(n.begin(), n.end(), [](double v) { return v > 0.0; });
            if (count != s.degrees[j] + 1 || positive != count)
                r.fail(std::to_string(count) + " nonzero " + where(s, x));
        }
    }
    return r;
}

}  // namespace mdspline::testing
