#include <doctest.h>

#include "mdspline/presets.hpp"
#include "mdspline/space.hpp"

using namespace mdspline;

namespace {

MDSpace example1() { return validate_space(0, 4, {1, 2, 3}, {2, 2, 4, 3}, {1, 2, 3}); }

}  // namespace

TEST_CASE("validation accepts well-formed spaces") {
    CHECK_NOTHROW((void)example1());
    CHECK_NOTHROW((void)validate_space(0, 1, {}, {3}, {}));
    CHECK_NOTHROW((void)validate_space(0, 2, {1}, {2, 3}, {2}));
}

TEST_CASE("validation rejects malformed spaces") {
    CHECK_THROWS_AS((void)validate_space(0, 2, {1}, {2, 2}, {3}), SpaceError);
    CHECK_THROWS_AS((void)validate_space(0, 2, {1}, {2, 2}, {-1}), SpaceError);
    CHECK_THROWS_AS((void)validate_space(0, 2, {1}, {-1, 2}, {0}), SpaceError);
    CHECK_THROWS_AS((void)validate_space(1, 1, {}, {2}, {}), SpaceError);
    CHECK_THROWS_AS((void)validate_space(0, 2, {2}, {2, 2}, {0}), SpaceError);
    CHECK_THROWS_AS((void)validate_space(0, 3, {2, 1}, {2, 2, 2}, {0, 0}), SpaceError);
    CHECK_THROWS_AS((void)validate_space(0, 2, {1}, {2}, {0}), SpaceError);
    CHECK_THROWS_AS((void)validate_space(0, 2, {1}, {2, 2}, {}), SpaceError);
}

TEST_CASE("dimension") {
    CHECK(dimension(example1()) == 6);
    CHECK(dimension(validate_space(2, 4, {3}, {4, 3}, {3})) == 5);
    CHECK(dimension(associated_c0(validate_space(2, 4, {3}, {4, 3}, {3}))) == 8);
    CHECK(dimension(associated_c0(example1())) == 11);
    CHECK(dimension(presets("test1").front().space) == 9);
    CHECK(dimension(presets("test5").front().space) == 43);
    CHECK(dimension(presets("cox").front().space) == 43);
    CHECK(dimension(validate_space(0, 1, {}, {3}, {})) == 4);
}

TEST_CASE("extended partitions") {
    SUBCASE("two-interval space") {
        const auto p = extended_partitions(validate_space(2, 4, {3}, {4, 3}, {3}));
        CHECK(p.s == std::vector<double>{2, 2, 2, 2, 2});
        CHECK(p.t == std::vector<double>{3, 4, 4, 4, 4});
    }
    SUBCASE("Bernstein") {
        const auto p = extended_partitions(validate_space(0, 1, {}, {3}, {}));
        CHECK(p.s == std::vector<double>{0, 0, 0, 0});
        CHECK(p.t == std::vector<double>{1, 1, 1, 1});
    }
    SUBCASE("degree drop") {
        const auto p = extended_partitions(validate_space(2, 4, {3}, {2, 1}, {0}));
        CHECK(p.s == std::vector<double>{2, 2, 2, 3});
        CHECK(p.t == std::vector<double>{3, 3, 4, 4});
    }
    SUBCASE("mixed degrees") {
        const auto p = extended_partitions(example1());
        CHECK(p.s == std::vector<double>{0, 0, 0, 1, 2, 2});
        CHECK(p.t == std::vector<double>{1, 3, 4, 4, 4, 4});
        CHECK(p.s_index == std::vector<std::size_t>{0, 0, 0, 1, 2, 2});
        CHECK(p.t_index == std::vector<std::size_t>{1, 3, 4, 4, 4, 4});
    }
    SUBCASE("support ordering") {
        const auto p = extended_partitions(example1());
        for (std::size_t i = 0; i < p.s.size(); ++i) CHECK(p.s[i] < p.t[i]);
    }
}

TEST_CASE("derivative partitions drop leading s and trailing t") {
    const auto base = extended_partitions(example1());
    const auto d1 = derivative_partitions(base, 1);
    CHECK(d1.s == std::vector<double>{0, 0, 1, 2, 2});
    CHECK(d1.t == std::vector<double>{1, 3, 4, 4, 4});
    CHECK_THROWS_AS((void)derivative_partitions(base, 7), SpaceError);
}

TEST_CASE("associated C0 space") {
    const MDSpace c0 = associated_c0(example1());
    CHECK(c0.continuities == std::vector<int>{1, 0, 0});
    CHECK(c0.degrees == example1().degrees);

    const MDSpace conv = validate_space(0, 3, {1, 2}, {3, 3, 3}, {2, 1});
    CHECK(associated_c0(conv) == conv);

    MDSpace internal;
    internal.a = 0;
    internal.b = 4;
    internal.breakpoints = {1, 2, 3};
    internal.degrees = {0, 0, 2, 1};
    internal.continuities = {-1, 0, 1};
    internal.internal = true;
    CHECK(associated_c0(internal).continuities == std::vector<int>{-1, 0, 0});
}

TEST_CASE("derivative spaces") {
    const DerivativeDescriptor d1 = derivative_space(example1(), 1);
    CHECK(d1.space.degrees == std::vector<int>{1, 1, 3, 2});
    CHECK(d1.space.continuities == std::vector<int>{0, 1, 2});
    CHECK(d1.dim == 5);
    const DerivativeDescriptor d3 = derivative_space(example1(), 3);
    CHECK(d3.zero_interval == std::vector<bool>{true, true, false, false});
    CHECK_THROWS_AS((void)derivative_space(example1(), 5), SpaceError);
    const MDSpace sh = shift_space(example1(), 2);
    CHECK(sh.internal);
    CHECK(sh.degrees == std::vector<int>{0, 0, 2, 1});
}

TEST_CASE("section decomposition and join order") {
    const SectionDecomposition sd = section_decomposition(example1());
    REQUIRE(sd.sections.size() == 3);
    CHECK(sd.sections[0].first_interval == 0);
    CHECK(sd.sections[0].last_interval == 1);
    CHECK(sd.sections[0].degree == 2);
    CHECK(sd.sections[1].first_interval == 2);
    CHECK(sd.sections[2].degree == 3);
    CHECK(sd.boundaries == std::vector<std::size_t>{0, 2, 3, 4});
    REQUIRE(sd.join_order.size() == 2);
    CHECK(sd.join_order[0].breakpoint == 3);
    CHECK(sd.join_order[0].continuity == 3);
    CHECK(sd.join_order[1].breakpoint == 2);
    CHECK(sd.join_order[1].continuity == 2);

    const auto ordered = order_joins({{1, 2}, {4, 5}, {2, 5}, {3, 0}});
    CHECK(ordered[0].breakpoint == 2);
    CHECK(ordered[1].breakpoint == 4);
    CHECK(ordered[2].breakpoint == 1);
    CHECK(ordered[3].breakpoint == 3);

    CHECK(section_decomposition(validate_space(0, 1, {}, {3}, {})).sections.size() == 1);
}

TEST_CASE("interval lookup, restriction and joining") {
    const MDSpace s = example1();
    CHECK(find_interval(s, 0.0) == 0);
    CHECK(find_interval(s, 0.5) == 0);
    CHECK(find_interval(s, 1.0) == 1);
    CHECK(find_interval(s, 3.5) == 3);
    CHECK(find_interval(s, 4.0) == 3);
    CHECK_THROWS_AS((void)find_interval(s, 4.5), SpaceError);

    const MDSpace left = restrict_space(s, 0, 1);
    const MDSpace right = restrict_space(s, 2, 3);
    CHECK(left.b == 2.0);
    CHECK(right.degrees == std::vector<int>{4, 3});
    CHECK(right.continuities == std::vector<int>{3});
    CHECK(join_spaces(left, right, 2) == s);
    CHECK_THROWS_AS((void)join_spaces(right, left, 0), SpaceError);
    CHECK(describe(restrict_space(s, 2, 3)) == "[2,4] (4_3 3)");
}
