#include <doctest.h>

#include "mdspline/presets.hpp"
#include "properties.hpp"

using namespace mdspline;
using namespace mdspline::testing;

namespace {

std::vector<MDSpace> property_spaces() {
    std::vector<MDSpace> out;
    for (const Preset& p : all_presets()) out.push_back(p.space);
    std::mt19937 rng(20240611);
    for (int i = 0; i < 200; ++i) out.push_back(random_space(rng, 12, 8, i % 4 == 3));
    return out;
}

#define CHECK_PROPERTY(expr)                      \
    do {                                          \
        const PropertyResult pr_ = (expr);        \
        CHECK_MESSAGE(pr_.ok, pr_.message);       \
    } while (0)

}  // namespace

TEST_CASE("basis and matrix properties on presets and random spaces") {
    std::mt19937 rng(99);
    for (const MDSpace& s : property_spaces()) {
        CAPTURE(describe(s));
        const auto rep = build_matrix_rki<double>(s);
        CHECK_PROPERTY(partition_of_unity(rep, 1000, 1e-13));
        CHECK_PROPERTY(column_sums(rep.matrix(), 1e-13));
        CHECK_PROPERTY(entry_range(rep.matrix(), 1e-15));
        CHECK_PROPERTY(greville_order(rep));
        CHECK_PROPERTY(local_support(rep));
        CHECK_PROPERTY(knot_insertion_roundtrip(s, rng, 200, 1e-13));
    }
}

TEST_CASE("strategies agree pointwise") {
    for (const MDSpace& s : property_spaces()) {
        CAPTURE(describe(s));
        CHECK_PROPERTY(strategy_agreement(s, 1000, 1e-12));
    }
}

TEST_CASE("degree-reduction matrices are column stochastic") {
    for (const MDSpace& s : property_spaces()) {
        CAPTURE(describe(s));
        const auto rep = build_matrix<double>(s, Strategy::rde);
        CHECK_PROPERTY(column_sums(rep.matrix(), 1e-13));
        CHECK_PROPERTY(entry_range(rep.matrix(), 1e-15));
    }
}
