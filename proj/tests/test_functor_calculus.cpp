#include <doctest.h>

#include "wpl/functor_calculus.hpp"

using namespace wpl;

namespace {

BundleSum one(const Bundle& b) { return BundleSum(b.weights(), {b}); }

// Sum of the line bundle degrees of a filtration.
LElement det(const BundleSum& s) {
    LElement d = LElement::zero(s.weights());
    for (const auto& [b, m] : s.items()) {
        for (const LElement& f : filtration_degrees(b)) d += m * f;
    }
    return d;
}

}  // namespace

TEST_CASE("recognition returns the isomorphism class") {
    const WeightType wt{2, 3, 4};
    for (int c = -1; c <= 1; ++c) {
        const LElement y = LElement::normal_form(wt, std::vector<std::int64_t>{1, 2, 1}, c);
        const Recognition r = recognize(line_to_pcycle(y));
        REQUIRE(r.recognized());
        CHECK(r.matches.size() == 1);
        CHECK(r.value() == one(Bundle::line(y)));
    }
    const Bundle e = Bundle::extension(LElement::x(wt, 2), LElement::x(wt, 3));
    CHECK(recognize(to_pcycle(e)).contains(one(e)));

    // Different parameters, same bundle.
    const WeightType w{2, 3, 3};
    const PCycle a = to_pcycle(Bundle::auslander(-LElement::c(w)));
    const PCycle b = to_pcycle(
        Bundle::extension(LElement::x(w, 3), LElement::x(w, 1) + LElement::x(w, 3) - 2 * LElement::c(w)));
    CHECK(isomorphic(a, b));
    CHECK_FALSE(isomorphic(a, to_pcycle(Bundle::auslander(LElement::zero(w)))));

    // A sum of two lines is recognized as such.
    const PCycle s = direct_sum(line_to_pcycle(LElement::zero(wt)), line_to_pcycle(LElement::x(wt, 1)));
    const Recognition rs = recognize(s);
    REQUIRE(rs.recognized());
    CHECK(rs.value().total_count() == 2);

    // Rank three is outside the catalog shapes.
    const PCycle big = direct_sum(s, line_to_pcycle(LElement::x(wt, 2)));
    CHECK_FALSE(recognize(big).recognized());
}

TEST_CASE("determinants of polynomial matrices") {
    const WeightType base{2, 3};
    const LElement zero = LElement::zero(base);
    const LElement x1 = LElement::x(base, 1);
    MonomialMatrix m({zero, x1}, {zero, x1});
    m.set(0, 0, HomPoly::scalar(base, 2));
    m.set(1, 1, HomPoly::scalar(base, 3));
    m.set(1, 0, HomPoly::monomial(base, 1, 0));
    CHECK(determinant(m) == HomPoly::scalar(base, 6));
}

TEST_CASE("closed-form examples") {
    const WeightType wt{2, 3, 4};
    const WeightType small{2, 3, 3};
    const LElement x3 = LElement::x(wt, 3);
    CHECK(reduce_closed(Bundle::line(x3), 3) == one(Bundle::line(LElement::zero(small))));
    CHECK(reduce_closed(Bundle::auslander(LElement::zero(wt)), 4) ==
          BundleSum(small, {Bundle::line(LElement::c(small) - LElement::x(small, 1) - LElement::x(small, 2) -
                                         LElement::x(small, 3)),
                            Bundle::line(-LElement::x(small, 3))}));
    CHECK(reduce_closed(Bundle::auslander(LElement::zero(wt)), 0) ==
          BundleSum(small, {Bundle::line(LElement::c(small) - LElement::x(small, 1) - LElement::x(small, 2)),
                            Bundle::line(LElement::zero(small))}));
    CHECK(reduce_closed(Bundle::extension(x3, LElement::zero(wt)), 3) == one(Bundle::auslander(LElement::zero(small))));

    const WeightType w222{2, 2, 2};
    const WeightType w223{2, 2, 3};
    CHECK(insert_closed(Bundle::auslander(LElement::zero(w222)), 2) ==
          one(Bundle::extension(LElement::x(w223, 3), LElement::zero(w223))));
    CHECK(insert_closed(Bundle::extension(LElement::x(small, 3), LElement::zero(small)), 2) ==
          one(Bundle::extension(2 * x3, LElement::zero(wt))));
    CHECK(insert_closed(Bundle::line(LElement::x(small, 3)), 1) == one(Bundle::line(x3)));
}

TEST_CASE("index periodicity") {
    const WeightType wt{2, 3, 4};
    const WeightType small{2, 3, 3};
    const WeightType large{2, 3, 5};
    for (const Bundle& b : {Bundle::line(LElement::x(wt, 2)), Bundle::auslander(LElement::x(wt, 3)),
                            Bundle::extension(LElement::x(wt, 2) + LElement::x(wt, 3), LElement::zero(wt))}) {
        for (int j = 0; j < 4; ++j) {
            CHECK(reduce_closed(b, j + 4) == twist_object(reduce_closed(b, j), -LElement::x(small, 3)));
            CHECK(insert_closed(b, j + 4) == twist_object(insert_closed(b, j), LElement::x(large, 3)));
        }
    }
}

TEST_CASE("composites") {
    for (int p3 = 3; p3 <= 6; ++p3) {
        const WeightType w222{2, 2, 2};
        const BundleSum e = one(Bundle::auslander(LElement::zero(w222)));
        const BundleSum up = apply_sequence(e, complement_indices(1, p3), Direction::insert);
        const WeightType top{2, 2, p3};
        CHECK(up == one(Bundle::extension((p3 - 2) * LElement::x(top, 3), LElement::zero(top))));
        const WeightType low{2, 2, p3 - 1};
        CHECK(apply_sequence(up, shifted_up(leading_indices(1)), Direction::reduce) ==
              one(Bundle::extension((p3 - 3) * LElement::x(low, 3), LElement::zero(low))));
    }
    CHECK_THROWS(apply_sequence(one(Bundle::line(LElement::zero(WeightType{2, 3, 4}))), {2, 2}, Direction::reduce));
    CHECK(leading_indices(3) == std::vector<int>{1, 2, 3});
    CHECK(complement_indices(1, 4) == std::vector<int>{2, 3});
}

TEST_CASE("closed forms match the chain-level engine on more weight types") {
    for (const WeightType& wt : {WeightType{2, 2, 3}, WeightType{3, 3, 4}, WeightType{2, 4, 3}}) {
        for (const LElement& x : enumerate_interval(LElement::zero(wt), LElement::delta(wt))) {
            for (const LElement& y : {LElement::zero(wt), LElement::x(wt, 3), LElement::xbar(wt, 1)}) {
                for (int j = -1; j <= wt[2] + 1; ++j) {
                    for (Direction d : {Direction::reduce, Direction::insert}) {
                        const Crosscheck line = crosscheck(Bundle::line(y), j, d);
                        CHECK_MESSAGE(line.agree, line.detail);
                        const Crosscheck ext = crosscheck(Bundle::extension(x, y), j, d);
                        CHECK_MESSAGE(ext.agree, ext.detail);
                    }
                }
            }
        }
    }
}

TEST_CASE("functors respect the filtration of extension bundles") {
    // psi is exact, so det psi(E<x>(y)) = det psi(O(omega + y)) + det psi(O(x + y)).
    for (const WeightType& wt : {WeightType{2, 3, 4}, WeightType{2, 3, 5}, WeightType{3, 3, 4}}) {
        for (const LElement& x : enumerate_interval(LElement::zero(wt), LElement::delta(wt))) {
            for (int k = 0; k < wt[2]; ++k) {
                const LElement y = k * LElement::x(wt, 3) + LElement::x(wt, 1);
                const Bundle e = Bundle::extension(x, y);
                for (int j = -2; j <= 2 * wt[2]; ++j) {
                    for (Direction d : {Direction::reduce, Direction::insert}) {
                        const LElement parts = det(apply_closed(Bundle::line(LElement::omega(wt) + y), j, d)) +
                                               det(apply_closed(Bundle::line(x + y), j, d));
                        CHECK(det(apply_closed(e, j, d)) == parts);
                    }
                }
            }
        }
    }
}
