#include "mdspline/legacy_derivative.hpp"

#include <stdexcept>
#include <string>

#include "mdspline/c0_engine.hpp"
#include "mdspline/scalar.hpp"

namespace mdspline {

namespace {

template <class T>
T row_dot(const Matrix<T>& m, std::size_t i, const BasisValues<T>& bv) {
    T acc(0);
    for (std::size_t v = 0; v < bv.values.size(); ++v) {
        const T& e = m(i, bv.first_index + v);
        if (e != T(0)) acc += e * bv.values[v];
    }
    return acc;
}

}  // namespace

template <class T>
RKICoefficients<T> alpha_via_derivatives(const Matrix<T>& hat_m, const MDSpace& c0,
                                         std::size_t breakpoint, int k, std::size_t first) {
    const double x = c0.knot(breakpoint);
    const BasisValues<T> dl = eval_c0_derivatives<T>(c0, x, Side::left, k);
    const BasisValues<T> dr = eval_c0_derivatives<T>(c0, x, Side::right, k);
    auto jump = [&](std::size_t i) {
        const T left = row_dot(hat_m, i, dl);
        const T right = row_dot(hat_m, i, dr);
        return T(left - right);
    };
    RKICoefficients<T> c;
    c.first = first;
    T a_prev(1);
    T jump_prev = jump(first - 1);
    for (int t = 0; t < k; ++t) {
        const std::size_t i = first + static_cast<std::size_t>(t);
        const T jump_i = jump(i);
        if (jump_i == T(0))
            throw std::runtime_error("derivative jump vanishes at function " + std::to_string(i));
        const T a = T(1) + a_prev * jump_prev / jump_i;
        c.alpha.push_back(a);
        c.beta.push_back(T(T(1) - a));
        a_prev = a;
        jump_prev = jump_i;
    }
    return c;
}

template <class T>
RepMatrixBundle<T> build_matrix_rki_derivative(const MDSpace& space) {
    check_space(space);
    const MDSpace c0 = associated_c0(space);
    const SectionDecomposition sd = section_decomposition(space);
    std::vector<int> cont = c0.continuities;
    Matrix<T> m = Matrix<T>::identity(static_cast<std::size_t>(dimension(c0)));
    RepMatrixBundle<T> out;
    out.strategy = Strategy::derivative;
    out.space = space;
    for (const JoinStep& js : sd.join_order) {
        for (int k = 1; k <= js.continuity; ++k) {
            long t_hat = 0;
            for (std::size_t i = 1; i <= js.breakpoint; ++i)
                t_hat += space.degrees[i - 1] - cont[i - 1];
            const std::size_t first = static_cast<std::size_t>(t_hat);
            RKICoefficients<T> c = alpha_via_derivatives(m, c0, js.breakpoint, k, first);
            m = apply_reverse_step(m, t_hat - 1, t_hat + k, c);
            cont[js.breakpoint - 1] = k;
            ++out.telemetry.cells;
            out.telemetry.nontrivial += c.size();
        }
    }
    OrderData<T> o;
    o.m = std::move(m);
    o.space = space;
    o.reference = c0;
    o.ref_integrals = c0_integrals<T>(c0);
    out.bundle.orders.push_back(std::move(o));
    return out;
}

template RKICoefficients<double> alpha_via_derivatives<double>(const Matrix<double>&,
                                                               const MDSpace&, std::size_t, int,
                                                               std::size_t);
template RKICoefficients<Rational> alpha_via_derivatives<Rational>(const Matrix<Rational>&,
                                                                   const MDSpace&, std::size_t,
                                                                   int, std::size_t);
template RepMatrixBundle<double> build_matrix_rki_derivative<double>(const MDSpace&);
template RepMatrixBundle<Rational> build_matrix_rki_derivative<Rational>(const MDSpace&);

}  // namespace mdspline
