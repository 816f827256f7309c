#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "mdspline/assembler.hpp"
#include "mdspline/eval_api.hpp"
#include "mdspline/presets.hpp"
#include "mdspline/scalar.hpp"

using namespace mdspline;

namespace {

MDSpace example1() { return validate_space(0, 4, {1, 2, 3}, {2, 2, 4, 3}, {1, 2, 3}); }

double max_basis_gap(const RepMatrixBundle<double>& a, const RepMatrixBundle<double>& b, std::size_t n) {
    const std::size_t k = a.matrix().rows();
    double worst = 0.0;
    for (double x : testing::sample_points(a.space, n)) {
        const auto va = scatter(eval_basis(a, x), k);
        const auto vb = scatter(eval_basis(b, x), k);
        for (std::size_t i = 0; i < k; ++i) worst = std::max(worst, std::abs(va[i] - vb[i]));
    }
    return worst;
}

}  // namespace

TEST_CASE("strategy names") {
    for (Strategy s : {Strategy::rki, Strategy::rde, Strategy::mixed, Strategy::derivative})
        CHECK(parse_strategy(to_string(s)) == s);
    CHECK_THROWS_AS((void)parse_strategy("boehm"), std::invalid_argument);
}

TEST_CASE("conventional space gives the identity") {
    const MDSpace s = validate_space(0, 3, {1, 2}, {3, 3, 3}, {2, 1});
    CHECK(build_matrix_rki<Rational>(s).matrix() == Matrix<Rational>::identity(static_cast<std::size_t>(dimension(s))));
    CHECK(build_matrix<double>(s, Strategy::mixed).matrix() == Matrix<double>::identity(static_cast<std::size_t>(dimension(s))));
}

TEST_CASE("shapes and reference spaces") {
    const MDSpace s = example1();
    const auto rki = build_matrix_rki<double>(s);
    CHECK(rki.matrix().rows() == 6);
    CHECK(rki.matrix().cols() == 11);
    CHECK(rki.reference() == associated_c0(s));
    const auto rde = build_matrix_rde<double>(s);
    CHECK(rde.matrix().rows() == 6);
    CHECK(rde.reference() == rde_reference(s));
    CHECK(static_cast<long>(rde.matrix().cols()) == dimension(rde_reference(s)));
}

TEST_CASE("strategies describe the same basis on the worked space") {
    const MDSpace s = example1();
    const auto rki = build_matrix<double>(s, Strategy::rki);
    CHECK(max_basis_gap(rki, build_matrix<double>(s, Strategy::rde), 401) <= 1e-13);
    CHECK(max_basis_gap(rki, build_matrix<double>(s, Strategy::mixed), 401) <= 1e-13);
    CHECK(max_basis_gap(rki, build_matrix<double>(s, Strategy::derivative), 401) <= 1e-13);
}

TEST_CASE("every mixed plan gives the same exact matrix") {
    const MDSpace s = validate_space(0, 6, {1, 2, 3, 4, 5}, {3, 4, 2, 2, 5, 3}, {2, 2, 1, 2, 3});
    const std::size_t p = section_decomposition(s).sections.size();
    const auto reference = build_matrix_rki<Rational>(s);
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
        MixedPlan plan;
        for (std::size_t i = 0; i < p; ++i) plan.use_rde.push_back(((mask >> i) & 1u) != 0);
        CAPTURE(mask);
        const auto mixed = build_matrix_mixed<Rational>(s, plan);
        // Reference spaces differ when a degree-reduction group spans a degree change; compare functions.
        for (double x : {0.0, 0.5, 1.25, 2.0, 2.5, 3.75, 4.5, 5.0, 5.5, 6.0}) {
            CHECK(scatter(eval_basis(mixed, x), reference.matrix().rows()) ==
                  scatter(eval_basis(reference, x), reference.matrix().rows()));
        }
    }
}

TEST_CASE("mixed plan validation and auto plan") {
    const MDSpace s = example1();
    CHECK_THROWS_AS((void)build_matrix_mixed<double>(s, MixedPlan{{true}}), std::invalid_argument);
    const MixedPlan plan = auto_plan(s);
    CHECK(plan.use_rde.size() == section_decomposition(s).sections.size());
    // Two sections of equal work: high-continuity joins are cheap, so long uniform runs stay joined.
    const MixedPlan single = auto_plan(validate_space(0, 1, {}, {4}, {}));
    CHECK(single.use_rde == std::vector<bool>{false});
}

TEST_CASE("degree-reduction cost counts window sizes") {
    // One step from degree 2 to 1 on the last interval: levels r=1, window size h - (r-k) = 1 at k=1.
    CHECK(rde_cost(validate_space(0, 2, {1}, {2, 1}, {0}), 1) == 1);
    CHECK(rde_cost(validate_space(0, 1, {}, {3}, {}), 1) == 0);
}

TEST_CASE("stable path matrix invariants on presets") {
    for (const Preset& p : all_presets()) {
        CAPTURE(p.name);
        const auto rep = build_matrix_rki<double>(p.space);
        const Matrix<double>& m = rep.matrix();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            double sum = 0.0;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                CHECK(m(i, c) >= -1e-15);
                CHECK(m(i, c) <= 1 + 1e-15);
                sum += m(i, c);
            }
            CHECK(std::abs(sum - 1.0) <= 1e-13);
        }
    }
}
