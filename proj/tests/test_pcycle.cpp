#include <doctest.h>

#include "wpl/catalog.hpp"
#include "wpl/recognize.hpp"

using namespace wpl;

TEST_CASE("line bundle cycle shape") {
    const WeightType wt{2, 3, 4};
    const PCycle c = line_to_pcycle(LElement::zero(wt));
    REQUIRE(c.period() == 4);
    for (int i = 0; i < 4; ++i) CHECK(c.entries()[static_cast<std::size_t>(i)][0].is_zero());
    CHECK(c.maps()[3].target()[0] == LElement::c(wt.base()));
    CHECK(c.validate());
    const MonomialMatrix w = c.wrap_product();
    CHECK(w.at(0, 0) == HomPoly::monomial(wt.base(), 0, 3) - HomPoly::monomial(wt.base(), 2, 0));

    const PCycle x3 = line_to_pcycle(LElement::x(wt, 3));
    CHECK(x3.maps()[2].target()[0] == LElement::c(wt.base()));
    CHECK(line_to_pcycle(LElement::c(wt)) == twist_pointwise(c, LElement::c(wt.base())));
}

TEST_CASE("extension bundle cycle wraps to the relation times identity") {
    const WeightType wt{2, 3, 4};
    const PCycle c = ext_to_pcycle(LElement::x(wt, 3), LElement::zero(wt));
    CHECK(c.rank() == 2);
    CHECK(c.validate());
    const MonomialMatrix w = c.wrap_product();
    const HomPoly rel = HomPoly::monomial(wt.base(), 0, 3) - HomPoly::monomial(wt.base(), 2, 0);
    CHECK(w.at(0, 0) == rel);
    CHECK(w.at(1, 1) == rel);
    CHECK(w.at(0, 1).is_zero());
    CHECK(w.at(1, 0).is_zero());
}

TEST_CASE("perturbed cycles are rejected") {
    const WeightType wt{2, 3, 4};
    const PCycle c = line_to_pcycle(LElement::zero(wt));
    auto entries = c.entries();
    entries[1][0] = LElement::x(wt.base(), 1);
    const PCycle bad(wt, entries, c.maps());
    CHECK_FALSE(bad.validate());
    CHECK_FALSE(bad.validation_error().empty());
}

TEST_CASE("shift and twist") {
    const WeightType wt{2, 3, 4};
    for (const Bundle& b : {Bundle::line(LElement::x(wt, 2)), Bundle::extension(LElement::x(wt, 3), LElement::x(wt, 1))}) {
        const PCycle c = to_pcycle(b);
        CHECK(shift(c, 0) == c);
        CHECK(shift(c, 4) == twist_pointwise(c, LElement::c(wt.base())));
        CHECK(shift(shift(c, 3), -3) == c);
        CHECK(twist_pointwise(c, LElement::zero(wt.base())) == c);
        // shifting by one is the twist by x3
        CHECK(shift(c, 1) == to_pcycle(b.twisted(LElement::x(wt, 3))));
        for (int k = -5; k <= 5; ++k) CHECK(shift(c, k).validate());
    }
}

TEST_CASE("reduction and insertion at the cycle level") {
    const WeightType wt{2, 3, 4};
    const WeightType small{2, 3, 3};
    CHECK(reduce_at(line_to_pcycle(LElement::x(wt, 3)), 1) == line_to_pcycle(LElement::x(small, 3)));
    CHECK(insert_at(line_to_pcycle(LElement::zero(small)), 1) == line_to_pcycle(LElement::zero(wt)));

    for (const Bundle& b : {Bundle::line(LElement::x(wt, 1)), Bundle::auslander(LElement::zero(wt)),
                            Bundle::extension(LElement::x(wt, 2) + LElement::x(wt, 3), LElement::x(wt, 3))}) {
        const PCycle c = to_pcycle(b);
        for (int j = 0; j < c.period(); ++j) {
            CHECK(reduce_at(c, j).validate());
            CHECK(insert_at(c, j).validate());
            CHECK(reduce_at(insert_at(c, j), j) == c);
        }
    }

    const WeightType w222{2, 2, 2};
    const PCycle up = insert_at(to_pcycle(Bundle::auslander(LElement::zero(w222))), 0);
    const WeightType w223{2, 2, 3};
    // Index 2 on period 2 is index 0 shifted once on the target.
    const Recognition r = recognize(shift(up, 1));
    CHECK(r.contains(BundleSum(w223, {Bundle::extension(LElement::x(w223, 3), LElement::zero(w223))})));
}

TEST_CASE("direct sums are valid and stack entries") {
    const WeightType wt{2, 3, 4};
    const PCycle a = line_to_pcycle(LElement::zero(wt));
    const PCycle b = ext_to_pcycle(LElement::x(wt, 3), LElement::x(wt, 1));
    const PCycle s = direct_sum(a, b);
    CHECK(s.rank() == 3);
    CHECK(s.validate());
}
