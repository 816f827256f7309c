#include "mdspline/join_core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mdspline/c0_engine.hpp"
#include "mdspline/scalar.hpp"

namespace mdspline {

namespace {

template <class T>
std::vector<T> concat(const std::vector<T>& l, const std::vector<T>& r) {
    std::vector<T> out = l;
    out.insert(out.end(), r.begin(), r.end());
    return out;
}

template <class T>
void combine_rows(T* out, const T* lo, const T& a, const T* hi, const T& b, std::size_t n) {
    for (std::size_t c = 0; c < n; ++c) {
        if (lo[c] != T(0) || hi[c] != T(0)) out[c] = a * lo[c] + b * hi[c];
    }
}

template <class T>
T dot(const T* row, const std::vector<T>& v) {
    T acc(0);
    for (std::size_t c = 0; c < v.size(); ++c)
        if (row[c] != T(0)) acc += row[c] * v[c];
    return acc;
}

}  // namespace

template <class T>
SectionBundle<T> identity_bundle(const MDSpace& section, int max_order) {
    SectionBundle<T> b;
    for (int rho = 0; rho <= max_order; ++rho) {
        OrderData<T> o;
        o.space = shift_space(section, rho);
        o.reference = o.space;
        const long dim = dimension(o.space);
        o.m = Matrix<T>::identity(static_cast<std::size_t>(std::max(dim, 0L)));
        o.ref_integrals = c0_integrals<T>(o.reference);
        b.orders.push_back(std::move(o));
    }
    return b;
}

template <class T>
std::vector<T> c0_join_integrals(const std::vector<T>& left, const std::vector<T>& right) {
    if (left.empty() || right.empty()) throw std::invalid_argument("c0_join_integrals: empty input");
    std::vector<T> out(left.begin(), left.end() - 1);
    out.push_back(left.back() + right.front());
    out.insert(out.end(), right.begin() + 1, right.end());
    return out;
}

template <class T>
Matrix<T> c0_join_matrices(const Matrix<T>& left, const Matrix<T>& right) {
    if (left.rows() == 0 || right.rows() == 0)
        throw std::invalid_argument("c0_join_matrices: empty input");
    const std::size_t rl = left.rows(), cl = left.cols();
    const T& lo = left(rl - 1, cl - 1);
    const T& ro = right(0, 0);
    if (abs_value(T(lo - ro)) > T(1e-14))
        throw std::logic_error("c0_join_matrices: overlap entries differ");
    Matrix<T> m(rl + right.rows() - 1, cl + right.cols() - 1);
    for (std::size_t i = 0; i < rl; ++i)
        for (std::size_t j = 0; j < cl; ++j) m(i, j) = left(i, j);
    for (std::size_t i = 0; i < right.rows(); ++i)
        for (std::size_t j = 0; j < right.cols(); ++j) {
            if (i == 0 && j == 0) continue;
            m(rl - 1 + i, cl - 1 + j) = right(i, j);
        }
    return m;
}

template <class T>
Matrix<T> concat_matrices(const Matrix<T>& left, const Matrix<T>& right) {
    Matrix<T> m(left.rows() + right.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i)
        for (std::size_t j = 0; j < left.cols(); ++j) m(i, j) = left(i, j);
    for (std::size_t i = 0; i < right.rows(); ++i)
        for (std::size_t j = 0; j < right.cols(); ++j)
            m(left.rows() + i, left.cols() + j) = right(i, j);
    return m;
}

template <class T>
Matrix<T> apply_reverse_step(const Matrix<T>& hat, long tau, long p,
                             const RKICoefficients<T>& coeffs) {
    const long n_hat = static_cast<long>(hat.rows());
    if (n_hat == 0) throw std::invalid_argument("apply_reverse_step: empty matrix");
    const std::size_t cols = hat.cols();
    Matrix<T> out(static_cast<std::size_t>(n_hat - 1), cols);
    auto copy_row = [&](long dst, long src) {
        std::copy(hat.row(src), hat.row(src) + cols, out.row(dst));
    };
    if (tau < p) {
        if (tau < 0 || p > n_hat - 1) throw std::logic_error("apply_reverse_step: window out of range");
        if (coeffs.size() != static_cast<std::size_t>(p - tau - 1) ||
            (coeffs.size() > 0 && coeffs.first != static_cast<std::size_t>(tau + 1)))
            throw std::logic_error("apply_reverse_step: coefficient window mismatch");
        for (long i = 0; i < tau; ++i) copy_row(i, i);
        for (long i = tau; i < p; ++i) {
            const T a = (i == tau) ? T(1) : coeffs.alpha[i - tau - 1];
            const T b = (i + 1 == p) ? T(1) : coeffs.beta[i - tau];
            combine_rows(out.row(i), hat.row(i), a, hat.row(i + 1), b, cols);
        }
        for (long i = p; i < n_hat - 1; ++i) copy_row(i, i + 1);
    } else {
        if (p < 0 || tau > n_hat - 1) throw std::logic_error("apply_reverse_step: window out of range");
        for (long i = 0; i < p; ++i) copy_row(i, i);
        for (long i = tau; i < n_hat - 1; ++i) copy_row(i, i + 1);
    }
    return out;
}

template <class T>
std::vector<T> reverse_step_integrals(const std::vector<T>& hat_integrals, const Matrix<T>& m,
                                      const std::vector<T>& ref_integrals, long tau, long p) {
    const long n = static_cast<long>(m.rows());
    std::vector<T> out(static_cast<std::size_t>(n), T(0));
    if (tau < p) {
        for (long i = 0; i < tau; ++i) out[i] = hat_integrals[i];
        for (long i = tau; i < p; ++i) out[i] = dot(m.row(i), ref_integrals);
        for (long i = p; i < n; ++i) out[i] = hat_integrals[i + 1];
    } else {
        for (long i = 0; i < p; ++i) out[i] = hat_integrals[i];
        for (long i = tau; i < n; ++i) out[i] = hat_integrals[i + 1];
    }
    return out;
}

template <class T>
RKICoefficients<T> rki_coefficients(std::size_t first, std::size_t size,
                                    const RKICoefficients<T>& prev, const std::vector<T>& lower,
                                    const std::vector<T>& upper) {
    if (prev.size() + 1 != size || (prev.size() > 0 && prev.first != first))
        throw std::logic_error("rki_coefficients: previous window mismatch");
    if (first == 0 || first + size > lower.size() || first + size - 1 > upper.size())
        throw std::logic_error("rki_coefficients: integral vectors too short");
    RKICoefficients<T> c;
    c.first = first;
    c.alpha.reserve(size);
    c.beta.reserve(size);
    for (std::size_t t = 0; t < size; ++t) {
        const std::size_t i = first + t;
        const T& den = upper[i - 1];
        if (!(den > T(0)))
            throw std::logic_error("rki_coefficients: nonpositive denominator at index " +
                                   std::to_string(i));
        const T a_prev = (t >= 1) ? prev.alpha[t - 1] : T(1);
        const T b_prev = (t + 1 < size) ? prev.beta[t] : T(1);
        c.alpha.push_back(T(a_prev * lower[i - 1] / den));
        c.beta.push_back(T(b_prev * lower[i] / den));
    }
    return c;
}

template <class T>
SectionBundle<T> cr_join(const SectionBundle<T>& left, const SectionBundle<T>& right, int r,
                         JoinTelemetry* telemetry,
                         const std::type_identity_t<CellObserver<T>>& observer) {
    const int top = std::max(r, 1);
    if (r < 0) throw std::invalid_argument("cr_join: negative continuity");
    if (left.max_order() < top || right.max_order() < top)
        throw std::invalid_argument("cr_join: bundles lack derivative orders up to " +
                                    std::to_string(top));
    SectionBundle<T> out;
    out.orders.resize(static_cast<std::size_t>(top) + 1);

    std::vector<std::vector<T>> prev_in;          // prev_in[c+1]: continuity c
    std::vector<RKICoefficients<T>> prev_coeffs;  // prev_coeffs[c]
    for (int n = 0; n <= r; ++n) {
        const int rho = r - n;
        const OrderData<T>& lo = left.orders[rho];
        const OrderData<T>& ro = right.orders[rho];
        const bool need_in = n < r;
        std::vector<T> in0 = c0_join_integrals(lo.ref_integrals, ro.ref_integrals);
        Matrix<T> m = c0_join_matrices(lo.m, ro.m);

        std::vector<std::vector<T>> cur_in;
        std::vector<RKICoefficients<T>> cur_coeffs(static_cast<std::size_t>(n) + 1);
        if (need_in) {
            const std::vector<T> in_l = mat_vec(lo.m, lo.ref_integrals);
            const std::vector<T> in_r = mat_vec(ro.m, ro.ref_integrals);
            cur_in.push_back(concat(in_l, in_r));
            cur_in.push_back(c0_join_integrals(in_l, in_r));
        }
        const std::size_t kl = lo.m.rows();
        for (int k = 1; k <= n; ++k) {
            const std::size_t first = kl - static_cast<std::size_t>(k);
            RKICoefficients<T> c = rki_coefficients(first, static_cast<std::size_t>(k),
                                                    prev_coeffs[k - 1], prev_in[k - 1], prev_in[k]);
            const long tau = static_cast<long>(first) - 1;
            const long p = static_cast<long>(first) + k;
            m = apply_reverse_step(m, tau, p, c);
            if (need_in) cur_in.push_back(reverse_step_integrals(cur_in.back(), m, in0, tau, p));
            if (telemetry) {
                ++telemetry->cells;
                telemetry->nontrivial += c.size();
            }
            if (observer) {
                CellTrace<T> tr;
                tr.row = n;
                tr.col = k;
                tr.coeffs = c;
                tr.lower = prev_in[k - 1];
                tr.upper = prev_in[k];
                tr.coarse = join_spaces(lo.space, ro.space, k);
                observer(tr);
            }
            cur_coeffs[k] = std::move(c);
        }
        OrderData<T>& o = out.orders[rho];
        o.m = std::move(m);
        o.space = join_spaces(lo.space, ro.space, n);
        o.reference = join_spaces(lo.reference, ro.reference, 0);
        o.ref_integrals = std::move(in0);
        prev_in = std::move(cur_in);
        prev_coeffs = std::move(cur_coeffs);
    }
    if (r == 0) {
        const OrderData<T>& lo = left.orders[1];
        const OrderData<T>& ro = right.orders[1];
        OrderData<T>& o = out.orders[1];
        o.m = concat_matrices(lo.m, ro.m);
        o.space = join_spaces(lo.space, ro.space, -1);
        o.reference = join_spaces(lo.reference, ro.reference, -1);
        o.ref_integrals = concat(lo.ref_integrals, ro.ref_integrals);
    }
    return out;
}

#define MDSPLINE_INSTANTIATE_JOIN(T)                                                              \
    template SectionBundle<T> identity_bundle<T>(const MDSpace&, int);                            \
    template std::vector<T> c0_join_integrals<T>(const std::vector<T>&, const std::vector<T>&);   \
    template Matrix<T> c0_join_matrices<T>(const Matrix<T>&, const Matrix<T>&);                   \
    template Matrix<T> concat_matrices<T>(const Matrix<T>&, const Matrix<T>&);                    \
    template Matrix<T> apply_reverse_step<T>(const Matrix<T>&, long, long,                        \
                                             const RKICoefficients<T>&);                          \
    template std::vector<T> reverse_step_integrals<T>(const std::vector<T>&, const Matrix<T>&,    \
                                                      const std::vector<T>&, long, long);         \
    template RKICoefficients<T> rki_coefficients<T>(std::size_t, std::size_t,                     \
                                                    const RKICoefficients<T>&,                    \
                                                    const std::vector<T>&, const std::vector<T>&); \
    template SectionBundle<T> cr_join<T>(const SectionBundle<T>&, const SectionBundle<T>&, int,   \
                                         JoinTelemetry*, const CellObserver<T>&);

MDSPLINE_INSTANTIATE_JOIN(double)
MDSPLINE_INSTANTIATE_JOIN(Rational)

}  // namespace mdspline
