#include <doctest.h>

#include <random>

#include "wpl/linalg.hpp"
#include "wpl/string_group.hpp"

using namespace wpl;

namespace {

LElement nf(const WeightType& wt, std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t c) {
    return LElement::normal_form(wt, std::vector<std::int64_t>{a, b, d}, c);
}

// x is effective iff some monomial x1^a1 x2^a2 x3^a3 has degree x.
bool effective_by_search(const LElement& x) {
    const WeightType& wt = x.weights();
    // Enough for c_coeff(x) <= 2; x3^p3 is a combination of x1^p1, x2^p2.
    const std::int64_t bound = 4 * wt[2];
    for (std::int64_t a = 0; a <= bound; ++a) {
        for (std::int64_t b = 0; b <= bound; ++b) {
            for (std::int64_t d = 0; d < wt[2]; ++d) {
                if (nf(wt, a, b, d, 0) == x) return true;
            }
        }
    }
    return false;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
    const Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(a + Rational(1, 3) == Rational(5, 6));
    CHECK((a * Rational(-4)).str() == "-2");
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    const Rational big(std::int64_t{1} << 62);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("sparse echelon nullspace is annihilated by every row") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const int cols = 6;
        std::vector<SparseVector> rows;
        SparseEchelon e(cols);
        for (int r = 0; r < 4; ++r) {
            SparseVector v;
            for (int c = 0; c < cols; ++c) {
                const int x = val(rng);
                if (x != 0) v.push_back({c, Rational(x)});
            }
            rows.push_back(v);
            e.add(v);
        }
        const auto null = e.nullspace();
        CHECK(static_cast<int>(null.size()) == cols - e.rank());
        for (const SparseVector& n : null) {
            for (const SparseVector& row : rows) {
                Rational dot;
                for (const auto& [c, x] : row) {
                    for (const auto& [c2, y] : n) {
                        if (c == c2) dot += x * y;
                    }
                }
                CHECK(dot.is_zero());
            }
        }
    }
}

TEST_CASE("sparse echelon reports rank growth and membership") {
    SparseEchelon e(3);
    CHECK(e.add({{0, 1}, {1, 2}}));
    CHECK_FALSE(e.add({{0, 2}, {1, 4}}));
    CHECK(e.contains({{0, -1}, {1, -2}}));
    CHECK_FALSE(e.contains({{2, 1}}));
    CHECK(e.rank() == 1);
}

TEST_CASE("normal form examples") {
    const WeightType wt{2, 3, 4};
    CHECK(nf(wt, 3, 0, 0, 0) == nf(wt, 1, 0, 0, 1));
    CHECK(nf(wt, 0, 0, -1, 0) == nf(wt, 0, 0, 3, -1));
    CHECK(LElement::omega(wt) == nf(wt, 1, 2, 3, -2));
    CHECK(LElement::x(wt, 2) + 2 * LElement::x(wt, 2) == LElement::c(wt));
    CHECK(LElement::xbar(wt, 2) == nf(wt, 1, 0, 3, -1));
    CHECK(LElement::xbar(wt, 1) == nf(wt, 0, 2, 3, -1));
    CHECK(LElement::delta(wt) == nf(wt, 0, 1, 2, 0));
    CHECK((-LElement::zero(wt)).is_zero());
    CHECK(LElement::omega(wt).str() == "x1 + 2*x2 + 3*x3 - 2*c");
}

TEST_CASE("phi drops the x3 coefficient") {
    const WeightType wt{2, 3, 4};
    const WeightType base{2, 3};
    CHECK(LElement::c(wt).phi() == LElement::c(base));
    CHECK(LElement::x(wt, 3).phi().is_zero());
    CHECK(LElement::omega(wt).phi() == LElement::normal_form(base, std::vector<std::int64_t>{1, 2}, -2));
}

TEST_CASE("group laws hold on random elements") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> k(-30, 30);
    for (const WeightType& wt : {WeightType{2, 3, 4}, WeightType{3, 3, 4}, WeightType{2, 4, 5}, WeightType{5, 7, 2}}) {
        for (int i = 0; i < 500; ++i) {
            const LElement a = nf(wt, k(rng), k(rng), k(rng), k(rng));
            const LElement b = nf(wt, k(rng), k(rng), k(rng), k(rng));
            const LElement c = nf(wt, k(rng), k(rng), k(rng), k(rng));
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE(a + b == b + a);
            REQUIRE((a - a).is_zero());
            REQUIRE(a.residue(0) < wt[0]);
            REQUIRE(a.residue(2) >= 0);
            // p_i x_i = c for each generator.
            REQUIRE(wt[1] * LElement::x(wt, 2) == LElement::c(wt));
            REQUIRE(LElement::xbar(wt, 3) == LElement::x(wt, 3) + LElement::omega(wt));
        }
    }
}

TEST_CASE("effectiveness agrees with a monomial search") {
    const WeightType wt{2, 3, 4};
    for (int c = -2; c <= 2; ++c) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 3; ++b) {
                for (int d = 0; d < 4; ++d) {
                    const LElement x = nf(wt, a, b, d, c);
                    CHECK(x.is_effective() == effective_by_search(x));
                }
            }
        }
    }
    CHECK_FALSE(LElement::omega(wt).is_effective());
    CHECK((LElement::c(wt) - LElement::x(wt, 1)).is_effective());
    CHECK(leq(LElement::zero(wt), LElement::x(wt, 1)));
}

TEST_CASE("interval enumeration") {
    const WeightType wt{2, 3, 4};
    const LElement zero = LElement::zero(wt);
    CHECK(enumerate_interval(zero, zero).size() == 1);
    const auto zc = enumerate_interval(zero, LElement::c(wt));
    CHECK(zc.size() == 8);
    CHECK(enumerate_interval(LElement::x(wt, 1), zero).empty());
    CHECK(enumerate_interval(zero, LElement::delta(wt)).size() == 6);
    // Every listed element lies between the ends, and every element in a box
    // between them is listed.
    const LElement top = LElement::c(wt) + LElement::x(wt, 3);
    const auto box = enumerate_interval(zero, top);
    int brute = 0;
    for (int c = -1; c <= 2; ++c) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 3; ++b) {
                for (int d = 0; d < 4; ++d) {
                    const LElement x = nf(wt, a, b, d, c);
                    if (leq(zero, x) && leq(x, top)) ++brute;
                }
            }
        }
    }
    CHECK(static_cast<int>(box.size()) == brute);
}

TEST_CASE("reweighting keeps coefficients") {
    const WeightType wt{2, 3, 4};
    const WeightType small{2, 3, 3};
    CHECK((3 * LElement::x(wt, 3)).reweight(small) == LElement::c(small));
    CHECK(LElement::x(wt, 2).reweight(small) == LElement::x(small, 2));
}
