#include "mdspline/eval_api.hpp"

#include <stdexcept>

#include "mdspline/scalar.hpp"

namespace mdspline {

template <class T>
BasisValues<T> eval_basis(const RepMatrixBundle<T>& rep, double x) {
    const MDSpace& space = rep.space;
    const std::size_t j = find_interval(space, x);
    long first = 0;
    for (std::size_t i = 1; i <= j; ++i) first += space.degrees[i - 1] - space.cont(i);
    const BasisValues<T> ref = eval_c0_basis<T>(rep.reference(), x);
    const Matrix<T>& m = rep.matrix();
    BasisValues<T> out;
    out.first_index = static_cast<std::size_t>(first);
    out.values.assign(static_cast<std::size_t>(space.degrees[j]) + 1, T(0));
    for (std::size_t v = 0; v < out.values.size(); ++v) {
        const std::size_t i = out.first_index + v;
        T acc(0);
        for (std::size_t c = 0; c < ref.values.size(); ++c) {
            const T& e = m(i, ref.first_index + c);
            if (e != T(0)) acc += e * ref.values[c];
        }
        out.values[v] = acc;
    }
    return out;
}

template <class T>
T eval_spline(const RepMatrixBundle<T>& rep, const std::vector<T>& coeffs, double x) {
    if (coeffs.size() != rep.matrix().rows())
        throw std::invalid_argument("eval_spline: expected " + std::to_string(rep.matrix().rows()) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    const BasisValues<T> bv = eval_basis(rep, x);
    T acc(0);
    for (std::size_t v = 0; v < bv.values.size(); ++v) acc += coeffs[bv.first_index + v] * bv.values[v];
    return acc;
}

template <class T>
std::vector<T> greville(const RepMatrixBundle<T>& rep) {
    for (std::size_t j = 0; j < rep.space.num_intervals(); ++j)
        if (rep.space.degrees[j] < 1)
            throw SpaceError("Greville abscissae need degree >= 1 on every interval (interval " +
                             std::to_string(j) + ")");
    if (rep.bundle.max_order() < 1)
        throw std::invalid_argument("greville: representation lacks the first derivative order");
    const OrderData<T>& d1 = rep.bundle.orders[1];
    const std::vector<T> in1 = mat_vec(d1.m, d1.ref_integrals);
    std::vector<T> xi;
    xi.reserve(in1.size() + 1);
    T acc = from_double<T>(rep.space.a);
    xi.push_back(acc);
    for (std::size_t i = 0; i + 1 < in1.size(); ++i) {
        acc += in1[i];
        xi.push_back(acc);
    }
    xi.push_back(from_double<T>(rep.space.b));
    return xi;
}

template <class T>
RKICoefficients<T> knot_insertion_coefficients(const MDSpace& space, std::size_t breakpoint) {
    check_space(space);
    if (breakpoint < 1 || breakpoint > space.num_breakpoints())
        throw std::invalid_argument("knot insertion: breakpoint index out of range");
    const int r = space.cont(breakpoint);
    if (r < 1) throw std::invalid_argument("knot insertion: continuity already 0 at breakpoint");
    const MDSpace left = restrict_space(space, 0, breakpoint - 1);
    const MDSpace right = restrict_space(space, breakpoint, space.num_intervals() - 1);
    const SectionBundle<T> bl = rde_build<T>(left, RDEMode::subtraction_free, r);
    const SectionBundle<T> br = rde_build<T>(right, RDEMode::subtraction_free, r);
    RKICoefficients<T> last;
    (void)cr_join(bl, br, r, nullptr, [&](const CellTrace<T>& cell) {
        if (cell.row == r && cell.col == r) last = cell.coeffs;
    });
    return last;
}

template <class T>
std::vector<T> insert_knot_coeffs(const MDSpace& space, const std::vector<T>& coeffs,
                                  std::size_t breakpoint) {
    if (coeffs.size() != static_cast<std::size_t>(dimension(space)))
        throw std::invalid_argument("insert_knot_coeffs: coefficient count mismatch");
    const RKICoefficients<T> c = knot_insertion_coefficients<T>(space, breakpoint);
    // N_i = alpha_i Nhat_i + beta_{i+1} Nhat_{i+1} inside the window.
    const std::size_t tau = c.first - 1;
    const std::size_t p = c.first + c.size();
    std::vector<T> out(coeffs.size() + 1, T(0));
    for (std::size_t h = 0; h <= tau; ++h) out[h] = coeffs[h];
    for (std::size_t h = tau + 1; h < p; ++h) {
        const std::size_t t = h - c.first;
        out[h] = c.alpha[t] * coeffs[h] + c.beta[t] * coeffs[h - 1];
    }
    for (std::size_t h = p; h < out.size(); ++h) out[h] = coeffs[h - 1];
    return out;
}

#define MDSPLINE_INSTANTIATE_EVAL(T)                                                              \
    template BasisValues<T> eval_basis<T>(const RepMatrixBundle<T>&, double);                     \
    template T eval_spline<T>(const RepMatrixBundle<T>&, const std::vector<T>&, double);          \
    template std::vector<T> greville<T>(const RepMatrixBundle<T>&);                               \
    template std::vector<T> insert_knot_coeffs<T>(const MDSpace&, const std::vector<T>&,          \
                                                  std::size_t);                                   \
    template RKICoefficients<T> knot_insertion_coefficients<T>(const MDSpace&, std::size_t);

MDSPLINE_INSTANTIATE_EVAL(double)
MDSPLINE_INSTANTIATE_EVAL(Rational)

}  // namespace mdspline
