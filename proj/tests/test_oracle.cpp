#include <doctest.h>

#include "helpers.hpp"
#include "mdspline/eval_api.hpp"
#include "mdspline/exact_oracle.hpp"
#include "mdspline/presets.hpp"

using namespace mdspline;

TEST_CASE("matrix error") {
    RationalMatrix e = RationalMatrix::identity(2);
    CHECK(matrix_error(Matrix<double>::identity(2), e) == 0.0);
    Matrix<double> m = Matrix<double>::identity(2);
    m(0, 1) = 0.25;
    m(1, 1) = 0.5;
    CHECK(matrix_error(m, e) == 0.75);
    CHECK_THROWS((void)matrix_error(Matrix<double>::identity(3), e));
}

TEST_CASE("value error") {
    const ValueError ok = value_error(0.5, Rational(1, 2));
    CHECK(ok.absolute == 0.0);
    CHECK(ok.relative == 0.0);
    const ValueError z = value_error(1e-20, Rational(0));
    CHECK(z.relative == z.absolute);
    const ValueError r = value_error(0.375, Rational(1, 4));
    CHECK(r.absolute == 0.125);
    CHECK(r.relative == 0.5);
}

TEST_CASE("fraction export") {
    RationalMatrix m(1, 2);
    m(0, 0) = Rational(3, 6);
    m(0, 1) = 2;
    const auto j = fractions_to_json(m);
    CHECK(j.dump() == R"([["1/2","2"]])");
}

TEST_CASE("oracle matrices are exactly column stochastic") {
    for (const char* name : {"test1", "test2", "test3", "test4"}) {
        const RationalMatrix m = oracle_build_matrix(presets(name).front().space, Strategy::rki);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Rational sum = 0;
            for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, c);
            CHECK(sum == 1);
        }
    }
}

TEST_CASE("Greville-difference coefficients equal integral-ratio coefficients") {
    const MDSpace ex1 = validate_space(0, 4, {1, 2, 3}, {2, 2, 4, 3}, {1, 2, 3});
    const CrossCheck c = oracle_greville_crosscheck(ex1);
    CHECK_MESSAGE(c.ok, c.first_mismatch);
    CHECK(c.checked >= 10);
    for (const Preset& p : all_presets()) {
        CAPTURE(p.name);
        const CrossCheck cc = oracle_greville_crosscheck(p.space);
        CHECK_MESSAGE(cc.ok, cc.first_mismatch);
    }
}

TEST_CASE("derivative-jump coefficients equal integral-ratio coefficients") {
    for (const Preset& p : all_presets()) {
        CAPTURE(p.name);
        const CrossCheck cc = oracle_derivative_crosscheck(p.space);
        CHECK_MESSAGE(cc.ok, cc.first_mismatch);
        CHECK(cc.checked > 0);
    }
}

TEST_CASE("conventional cells reproduce classical insertion weights") {
    for (const char* name : {"cox"}) {
        const CrossCheck cc = oracle_boehm_crosscheck(presets(name).front().space);
        CHECK_MESSAGE(cc.ok, cc.first_mismatch);
        CHECK(cc.checked > 0);
    }
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        MDSpace s = testing::random_space(rng, 6, 4);
        std::fill(s.degrees.begin(), s.degrees.end(), s.max_degree());
        const CrossCheck cc = oracle_boehm_crosscheck(s);
        CHECK_MESSAGE(cc.ok, cc.first_mismatch);
    }
}

TEST_CASE("oracle pointwise values sum to one") {
    const Preset p = presets("test3").front();
    const auto rep = build_matrix_rki<Rational>(p.space);
    for (double x : p.points) {
        Rational sum = 0;
        for (const Rational& v : eval_basis(rep, x).values) sum += v;
        CHECK(sum == 1);
    }
}
