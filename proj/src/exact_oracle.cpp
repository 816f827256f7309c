#include "mdspline/exact_oracle.hpp"

#include <sstream>
#include <stdexcept>

#include "mdspline/join_core.hpp"
#include "mdspline/legacy_derivative.hpp"

namespace mdspline {

namespace {

void record(CrossCheck& cc, const std::string& what) {
    if (cc.ok) cc.first_mismatch = what;
    cc.ok = false;
}

std::string cell_label(const CellTrace<Rational>& cell, std::size_t i) {
    std::ostringstream os;
    os << "cell (" << cell.row << "," << cell.col << ") index " << i << " in " << describe(cell.coarse);
    return os.str();
}

}  // namespace

RationalMatrix oracle_build_matrix(const MDSpace& space, Strategy strategy) {
    return build_matrix<Rational>(space, strategy).matrix();
}

double matrix_error(const Matrix<double>& m, const RationalMatrix& exact) {
    if (m.rows() != exact.rows() || m.cols() != exact.cols())
        throw std::invalid_argument("matrix_error: shape mismatch");
    Rational worst(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Rational col(0);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Rational d = Rational(m(i, j)) - exact(i, j);
            col += abs(d);
        }
        if (col > worst) worst = col;
    }
    return worst.get_d();
}

ValueError value_error(double value, const Rational& exact) {
    const Rational diff = abs(Rational(value) - exact);
    ValueError e;
    e.absolute = diff.get_d();
    e.relative = exact == 0 ? e.absolute : Rational(diff / abs(exact)).get_d();
    return e;
}

CrossCheck oracle_greville_crosscheck(const MDSpace& space) {
    CrossCheck cc;
    (void)build_matrix_rki<Rational>(space, [&](const CellTrace<Rational>& cell) {
        // Greville of the finer and coarser spaces, up to the common start a.
        std::vector<Rational> fine(cell.lower.size() + 1, Rational(0));
        std::vector<Rational> coarse(cell.upper.size() + 1, Rational(0));
        for (std::size_t h = 0; h < cell.lower.size(); ++h) fine[h + 1] = fine[h] + cell.lower[h];
        for (std::size_t h = 0; h < cell.upper.size(); ++h) coarse[h + 1] = coarse[h] + cell.upper[h];
        for (std::size_t t = 0; t < cell.coeffs.size(); ++t) {
            const std::size_t i = cell.coeffs.first + t;
            const Rational alpha = (fine[i] - coarse[i - 1]) / (coarse[i] - coarse[i - 1]);
            ++cc.checked;
            if (alpha != cell.coeffs.alpha[t] || Rational(1 - alpha) != cell.coeffs.beta[t])
                record(cc, cell_label(cell, i));
        }
    });
    return cc;
}

CrossCheck oracle_derivative_crosscheck(const MDSpace& space) {
    CrossCheck cc;
    const RepMatrixBundle<Rational> stable = build_matrix_rki<Rational>(space);
    const RepMatrixBundle<Rational> legacy = build_matrix_rki_derivative<Rational>(space);
    const RationalMatrix& a = stable.matrix();
    const RationalMatrix& b = legacy.matrix();
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        record(cc, "shape mismatch");
        return cc;
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            ++cc.checked;
            if (a(i, j) != b(i, j))
                record(cc, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return cc;
}

CrossCheck oracle_boehm_crosscheck(const MDSpace& space) {
    check_space(space);
    const int d = space.degrees.front();
    for (int v : space.degrees)
        if (v != d) throw std::invalid_argument("Boehm cross-check needs a single-degree space");
    CrossCheck cc;
    for (std::size_t j = 1; j <= space.num_breakpoints(); ++j) {
        const int r = space.cont(j);
        if (r < 1) continue;
        const MDSpace left = restrict_space(space, 0, j - 1);
        const MDSpace right = restrict_space(space, j, space.num_intervals() - 1);
        const int top = std::max(1, d);
        const SectionBundle<Rational> bl = identity_bundle<Rational>(left, top);
        const SectionBundle<Rational> br = identity_bundle<Rational>(right, top);
        (void)cr_join(bl, br, r, nullptr, [&](const CellTrace<Rational>& cell) {
            const MDSpace& c = cell.coarse;
            const int p = c.degrees.front();
            for (int k : c.continuities)
                if (k < 0) return;  // not a conventional B-spline space
            std::vector<Rational> tau;
            for (int m = 0; m <= p; ++m) tau.emplace_back(c.a);
            for (std::size_t i = 1; i <= c.num_breakpoints(); ++i)
                for (int m = 0; m < p - c.cont(i); ++m) tau.emplace_back(c.knot(i));
            for (int m = 0; m <= p; ++m) tau.emplace_back(c.b);
            const Rational x(space.knot(j));
            for (std::size_t t = 0; t < cell.coeffs.size(); ++t) {
                const std::size_t i = cell.coeffs.first + t;
                Rational w;
                if (tau[i + p] <= x) w = 1;
                else if (tau[i] >= x) w = 0;
                else w = (x - tau[i]) / (tau[i + p] - tau[i]);
                ++cc.checked;
                if (w != cell.coeffs.alpha[t] || Rational(1 - w) != cell.coeffs.beta[t])
                    record(cc, cell_label(cell, i));
            }
        });
    }
    return cc;
}

nlohmann::json fractions_to_json(const RationalMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_fraction_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace mdspline
