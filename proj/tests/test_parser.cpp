#include <doctest.h>

#include "wpl/parser.hpp"

using namespace wpl;

TEST_CASE("parse examples") {
    const WeightType wt{2, 3, 4};
    CHECK(parse_weight(" (2, 3,4) ") == wt);
    CHECK(parse_located("E<1*x3>(1*xb3) @ (2,3,4)") ==
          BundleSum(wt, {Bundle::extension(LElement::x(wt, 3), LElement::xbar(wt, 3))}));
    CHECK(parse_located("O(3*x1) @ (2,3,4)") == BundleSum(wt, {Bundle::line(LElement::x(wt, 1) + LElement::c(wt))}));
    CHECK(parse_lelement("w", wt) == LElement::omega(wt));
    CHECK(parse_lelement("d", wt) == LElement::delta(wt));
    CHECK(parse_lelement("-x1 + 2*c - xb2", wt) == 2 * LElement::c(wt) - LElement::x(wt, 1) - LElement::xbar(wt, 2));
    CHECK(parse_lelement("0", wt).is_zero());
    CHECK(parse_lelement("2", wt) == 2 * LElement::c(wt));
    CHECK(parse_bundle("E", wt) == Bundle::auslander(LElement::zero(wt)));
    CHECK(parse_bundle("E(xb1)", wt) == Bundle::auslander(LElement::xbar(wt, 1)));
    CHECK(parse_bundle("A(xb1)", wt) == Bundle::auslander(LElement::xbar(wt, 1)));
}

TEST_CASE("sums split at bundle boundaries only") {
    const WeightType wt{2, 3, 4};
    const BundleSum s = parse_bundle_sum("O(x1 + x2) + 2*E<x3>(x1 - c) ⊕ A(0)", wt);
    CHECK(s.distinct_count() == 3);
    CHECK(s.total_count() == 4);
    CHECK(s.contains(Bundle::line(LElement::x(wt, 1) + LElement::x(wt, 2))));
}

TEST_CASE("errors carry positions") {
    const WeightType wt{2, 3, 4};
    CHECK_THROWS_AS(parse_located("E<3*x3> @ (2,3,4)"), ParseError);
    try {
        parse_bundle("O(x1 + y)", wt);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
    CHECK_THROWS_AS(parse_bundle("Q(0)", wt), ParseError);
    CHECK_THROWS_AS(parse_bundle("O(x1", wt), ParseError);
    CHECK_THROWS_AS(parse_weight("(2,3)"), ParseError);
    CHECK_THROWS_AS(parse_weight("(1,3,4)"), ParseError);
    CHECK_THROWS_AS(parse_located("O(0)"), ParseError);
    CHECK_THROWS_AS(parse_bundle_sum("O(0) +", wt), ParseError);
}

TEST_CASE("render then parse is the identity") {
    for (const WeightType& wt : {WeightType{2, 3, 4}, WeightType{3, 3, 4}, WeightType{2, 4, 5}}) {
        for (const FamilyKind k : {FamilyKind::cuboid, FamilyKind::auslander_t1, FamilyKind::auslander_t2}) {
            if (k != FamilyKind::cuboid && wt[0] != 2) continue;
            const BundleSum s = family(k, wt);
            CHECK(parse_bundle_sum(s.str(), wt) == s);
        }
        for (int c = -3; c <= 3; ++c) {
            const LElement y = LElement::normal_form(wt, std::vector<std::int64_t>{1, 2, 3}, c);
            CHECK(parse_lelement(y.str(), wt) == y);
            const BundleSum s(wt, {Bundle::line(y), Bundle::extension(LElement::delta(wt), -y)});
            CHECK(parse_bundle_sum(s.str(), wt) == s);
        }
    }
}
