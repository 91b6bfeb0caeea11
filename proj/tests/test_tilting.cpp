#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "wpl/tilting.hpp"

using namespace wpl;

namespace {

BundleSum thm(const WeightType& wt, int q, int i, int j) {
    BundleSum t(wt);
    t.add(family(FamilyKind::thm_t1k, wt, q, i));
    t.add(family(FamilyKind::thm_t2k, wt, q, j));
    return t;
}

}  // namespace

TEST_CASE("rigidity examples") {
    const WeightType wt{2, 3, 4};
    StableHomCache cache;
    const TiltingReport t1 = check_rigidity(family(FamilyKind::auslander_t1, wt), 12, &cache);
    CHECK(t1.pass);
    CHECK(t1.summand_count == 6);
    CHECK(t1.expected_count == 6);
    CHECK(t1.exact_pairs == 36);

    const BundleSum bad(wt, {Bundle::auslander(LElement::zero(wt)),
                             Bundle::auslander(LElement::xbar(wt, 1) + LElement::x(wt, 1))});
    const TiltingReport r = check_rigidity(bad, 12, &cache);
    CHECK_FALSE(r.pass);
    REQUIRE_FALSE(r.nonzero_cells.empty());
    CHECK(r.nonzero_cells.front().shift == -1);
    CHECK(r.witness.find("[-1]") != std::string::npos);

    const TiltingReport t = check_rigidity(thm(wt, 1, 1, 2), 12, &cache);
    CHECK(t.pass);
    CHECK(t.boundary_cells_checked > 0);

    // Too few summands fail on the count.
    const TiltingReport few = check_rigidity(family(FamilyKind::thm_t1k, wt, 1, 1), 12, &cache);
    CHECK_FALSE(few.pass);
    CHECK(few.witness.find("summand count") != std::string::npos);

    CHECK_THROWS(check_rigidity(family(FamilyKind::cuboid, WeightType{3, 3, 4}), 12));
}

TEST_CASE("all families are rigid on (2,4,5)") {
    const WeightType wt{2, 4, 5};
    StableHomCache cache;
    for (FamilyKind k : {FamilyKind::cuboid, FamilyKind::auslander_t1, FamilyKind::auslander_t2}) {
        const TiltingReport r = check_rigidity(family(k, wt), 6, &cache);
        CHECK_MESSAGE(r.pass, (wpl::to_string(k) + ": " + r.witness));
    }
    for (int q = 1; q <= 3; ++q) {
        const TiltingReport r = check_rigidity(thm(wt, q, 1 + q % 2, 2 - q % 2), 6, &cache);
        CHECK_MESSAGE(r.pass, r.witness);
    }
}

TEST_CASE("rigidity window from the environment") {
    ::setenv("WPL_RIGIDITY_WINDOW", "5", 1);
    CHECK(rigidity_window_from_env() == 5);
    ::setenv("WPL_RIGIDITY_WINDOW", "junk", 1);
    CHECK(rigidity_window_from_env() == default_rigidity_window);
    ::unsetenv("WPL_RIGIDITY_WINDOW");
    CHECK(rigidity_window_from_env() == 12);
}

TEST_CASE("add condition") {
    for (int p3 = 3; p3 <= 5; ++p3) {
        const WeightType w222{2, 2, 2};
        const BundleSum e = family(FamilyKind::cuboid, w222);
        const WeightType prev{2, 2, p3 - 1};
        const GluingStep ok = check_add_condition(e, family(FamilyKind::cuboid, prev), 1, p3);
        CHECK_MESSAGE(ok.pass, ok.witness);
        CHECK(ok.computed == BundleSum(prev, {Bundle::extension((p3 - 3) * LElement::x(prev, 3), LElement::zero(prev))}));
        // Drop that summand from T''.
        BundleSum missing(prev);
        for (const Bundle& b : family(FamilyKind::cuboid, prev).distinct()) {
            if (!ok.computed.contains(b)) missing.add(b);
        }
        const GluingStep bad = check_add_condition(e, missing, 1, p3);
        CHECK_FALSE(bad.pass);
        CHECK_FALSE(bad.witness.empty());
    }
    // The (2,p2,.) stage.
    const WeightType w232{2, 3, 2};
    CHECK(check_add_condition(family(FamilyKind::cuboid, w232), family(FamilyKind::cuboid, WeightType{2, 3, 3}), 1, 4).pass);
}

TEST_CASE("assembly reproduces the families") {
    StableHomCache cache;
    for (const WeightType& wt : {WeightType{2, 3, 4}, WeightType{2, 3, 5}}) {
        for (int q = 1; q <= wt[2] - 2; ++q) {
            for (int k = 1; k <= 2; ++k) {
                const Assembly a = assemble_recollement(family(FamilyKind::thm_t1k_source, wt, q, k),
                                                        family(FamilyKind::thm_t2k_source, wt, q, k), q, wt[2], 12, &cache);
                CHECK_MESSAGE(a.pass, a.witness);
                CHECK(a.object == thm(wt, q, k, k));
            }
        }
    }
    const WeightType w222{2, 2, 2};
    const Assembly base = assemble_recollement(family(FamilyKind::cuboid, w222), family(FamilyKind::cuboid, w222), 1, 3, 12);
    CHECK(base.pass);
    CHECK(base.object == family(FamilyKind::cuboid, WeightType{2, 2, 3}));

    const WeightType wt{2, 3, 4};
    const Assembly swapped = assemble_recollement(family(FamilyKind::thm_t2k_source, wt, 1, 1),
                                                  family(FamilyKind::thm_t1k_source, wt, 1, 1), 1, 4, 12);
    CHECK_FALSE(swapped.pass);
    CHECK_FALSE(swapped.witness.empty());
}

TEST_CASE("cuboid induction") {
    const CuboidTrace base = verify_cuboid_induction(WeightType{2, 2, 2});
    CHECK(base.pass);
    CHECK(base.result.distinct_count() == 1);
    for (const WeightType& wt : {WeightType{2, 2, 3}, WeightType{2, 3, 4}, WeightType{3, 3, 4}, WeightType{2, 3, 5},
                                 WeightType{3, 4, 3}}) {
        const CuboidTrace t = verify_cuboid_induction(wt);
        CHECK_MESSAGE(t.pass, t.failed_step);
        CHECK(t.result == family(FamilyKind::cuboid, wt));
        CHECK(t.result.distinct_count() == (wt[0] - 1) * (wt[1] - 1) * (wt[2] - 1));
    }
}

TEST_CASE("endomorphism quivers") {
    const WeightType w222{2, 2, 2};
    const Quiver single = endomorphism_quiver(family(FamilyKind::cuboid, w222));
    CHECK(single.vertices.size() == 1);
    CHECK(single.arrow_count() == 0);

    const WeightType wt{2, 3, 4};
    const BundleSum t = twist_object(thm(wt, 1, 1, 2), -2 * LElement::x(wt, 3));
    const Quiver q = endomorphism_quiver(t);
    CHECK(q.vertices.size() == 6);
    CHECK(q.arrow_count() == 7);
    CHECK(q.dot().rfind("digraph", 0) == 0);

    // Invariant under a global twist.
    const Quiver moved = endomorphism_quiver(twist_object(t, LElement::xbar(wt, 2)));
    CHECK(moved.arrow_count() == 7);
    auto flat = [](const Quiver& x) {
        std::vector<int> v;
        for (const auto& row : x.stable_dims) v.insert(v.end(), row.begin(), row.end());
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(flat(moved) == flat(q));

    // Repeated summands collapse to one vertex.
    BundleSum twice = family(FamilyKind::cuboid, w222);
    twice.add(family(FamilyKind::cuboid, w222));
    const Quiver dup = endomorphism_quiver(twice);
    CHECK(dup.vertices.size() == 1);
    CHECK(dup.vertex_multiplicity[0] == 2);
    CHECK(dup.dot().find("x2") != std::string::npos);
}
