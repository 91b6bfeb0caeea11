#include "wpl/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "wpl/functor_calculus.hpp"
#include "wpl/parser.hpp"

namespace wpl {

namespace {

using Weights = std::vector<WeightType>;

Weights pick(const AcceptanceOptions& o, Weights defaults) { return o.weights.empty() ? defaults : o.weights; }

Weights only_p1_two(const Weights& ws) {
    Weights out;
    for (const WeightType& wt : ws) {
        if (wt[0] == 2) out.push_back(wt);
    }
    return out;
}

// Every element in normal form with c_coeff in [lo, hi].
std::vector<LElement> elements(const WeightType& wt, int lo, int hi) {
    std::vector<LElement> out;
    for (int c = lo; c <= hi; ++c) {
        for (int a = 0; a < wt[0]; ++a) {
            for (int b = 0; b < wt[1]; ++b) {
                for (int d = 0; d < wt[2]; ++d) {
                    out.push_back(LElement::normal_form(wt, std::vector<std::int64_t>{a, b, d}, c));
                }
            }
        }
    }
    return out;
}

// Catalog objects with twists c_coeff in [lo, hi]: lines and extension
// bundles over the whole cuboid.
std::vector<Bundle> catalog_objects(const WeightType& wt, int lo, int hi) {
    std::vector<Bundle> out;
    const std::vector<LElement> twists = elements(wt, lo, hi);
    for (const LElement& y : twists) out.push_back(Bundle::line(y));
    for (const LElement& x : enumerate_interval(LElement::zero(wt), LElement::delta(wt))) {
        for (const LElement& y : twists) out.push_back(Bundle::extension(x, y));
    }
    return out;
}

struct Outcome {
    bool pass = true;
    bool skipped = false;
    std::string detail;
};

Outcome skip(const std::string& why) { return {true, true, why}; }

std::string join(const Weights& ws) {
    std::string s;
    for (const WeightType& wt : ws) s += (s.empty() ? "" : " ") + wt.str();
    return s;
}

Outcome string_group_laws(const AcceptanceOptions& o) {
    const Weights ws = pick(o, {{2, 3, 4}, {3, 3, 4}, {2, 4, 5}});
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<std::int64_t> coef(-20, 20);
    std::uniform_int_distribution<std::int64_t> cc(-5, 5);
    int triples = 0;
    for (const WeightType& wt : ws) {
        auto draw = [&] {
            return LElement::normal_form(wt, std::vector<std::int64_t>{coef(rng), coef(rng), coef(rng)}, cc(rng));
        };
        for (int i = 0; i < 10000; ++i, ++triples) {
            const LElement a = draw(), b = draw(), c = draw();
            const LElement renorm = LElement::normal_form(
                wt, std::vector<std::int64_t>{a.residue(0), a.residue(1), a.residue(2)}, a.c_coeff());
            if ((a + b) + c != a + (b + c) || a + b != b + a || !(a + (-a)).is_zero() || renorm != a ||
                a - b + b != a) {
                return {false, false, "law violated on " + wt.str() + " at " + a.str() + ", " + b.str() + ", " + c.str()};
            }
        }
    }
    std::string omega_check;
    const WeightType w234{2, 3, 4};
    if (o.weights.empty() || std::find(ws.begin(), ws.end(), w234) != ws.end()) {
        const LElement expect = LElement::normal_form(w234, std::vector<std::int64_t>{1, 2, 3}, -2);
        if (LElement::omega(w234) != expect) return {false, false, "omega on (2,3,4) is " + LElement::omega(w234).str()};
        omega_check = "; omega(2,3,4) = " + expect.str();
    }
    return {true, false, std::to_string(triples) + " triples on " + join(ws) + omega_check};
}

Outcome line_hom_oracle(const AcceptanceOptions& o) {
    const Weights ws = pick(o, {{2, 3, 4}, {3, 3, 4}, {2, 4, 5}});
    long pairs = 0;
    for (const WeightType& wt : ws) {
        const std::vector<LElement> all = elements(wt, -4, 4);
        for (const LElement& a : all) {
            for (const LElement& b : all) {
                ++pairs;
                const int closed = hom_dim_line(a, b, LineHomMode::closed);
                const int oracle = hom_dim_line(a, b, LineHomMode::oracle);
                if (closed != oracle) {
                    return {false, false, "Hom(O(" + a.str() + "), O(" + b.str() + ")): closed " +
                                              std::to_string(closed) + ", oracle " + std::to_string(oracle)};
                }
            }
        }
    }
    const WeightType w{2, 3, 4};
    const int chain = hom_dim(Bundle::line(LElement::zero(w)), Bundle::line(LElement::c(w)));
    if (chain != 2) return {false, false, "dim Hom(O, O(c)) on (2,3,4) is " + std::to_string(chain)};
    return {true, false, std::to_string(pairs) + " pairs on " + join(ws) + "; dim Hom(O, O(c)) = 2 on (2,3,4)"};
}

Outcome pcycle_validity(const AcceptanceOptions& o) {
    const Weights ws = pick(o, {{2, 3, 4}, {2, 3, 5}, {3, 3, 4}});
    int cycles = 0;
    for (const WeightType& wt : ws) {
        for (const Bundle& b : catalog_objects(wt, -1, 1)) {
            ++cycles;
            const std::string err = to_pcycle(b).validation_error();
            if (!err.empty()) return {false, false, b.str() + " on " + wt.str() + ": " + err};
        }
    }
    return {true, false, std::to_string(cycles) + " cycles valid on " + join(ws)};
}

BundleSum corrupted_closed(const Bundle& b, int j, Direction d) {
    BundleSum s = apply_closed(b, j, d);
    if (d != Direction::reduce || !b.is_line()) return s;
    return twist_object(s, LElement::x(s.weights(), 3));
}

Outcome formula_vs_engine(const AcceptanceOptions& o) {
    const Weights ws = pick(o, {{2, 3, 4}, {2, 3, 5}});
    int checks = 0;
    for (const WeightType& wt : ws) {
        for (const Bundle& b : catalog_objects(wt, -1, 1)) {
            const PCycle cycle = to_pcycle(b);
            for (int j = 1; j <= wt[2]; ++j) {
                for (Direction d : {Direction::reduce, Direction::insert}) {
                    ++checks;
                    const BundleSum formula = o.corrupt_formula ? corrupted_closed(b, j, d) : apply_closed(b, j, d);
                    const Recognition engine = recognize(engine_apply(cycle, j, d));
                    if (!engine.contains(formula)) {
                        return {false, false, to_string(d) + " j=" + std::to_string(j) + " on " + b.str() + " @ " +
                                                  wt.str() + ": formula " + formula.str() + ", engine " +
                                                  (engine.recognized() ? engine.value().str() : "unrecognized")};
                    }
                }
            }
        }
    }
    return {true, false, std::to_string(checks) + " crosschecks on " + join(ws)};
}

Outcome proof_steps(const AcceptanceOptions& o) {
    int checks = 0;
    for (int p3 : {3, 4, 5}) {
        const WeightType base{2, 2, 2};
        const BundleSum e(base, {Bundle::auslander(LElement::zero(base))});
        const BundleSum up = apply_sequence(e, complement_indices(1, p3), Direction::insert);
        const WeightType top{2, 2, p3};
        const BundleSum want_up(top, {Bundle::extension((p3 - 2) * LElement::x(top, 3), LElement::zero(top))});
        const BundleSum down = apply_sequence(up, {2}, Direction::reduce);
        const WeightType low{2, 2, p3 - 1};
        const BundleSum want_down(low, {Bundle::extension((p3 - 3) * LElement::x(low, 3), LElement::zero(low))});
        checks += 2;
        if (up != want_up) return {false, false, "psi_{J1^c}(E) on " + top.str() + " is " + up.str()};
        if (down != want_down) return {false, false, "psibar^2 psibar_{J1^c}(E) on " + low.str() + " is " + down.str()};
    }
    const Weights ws = only_p1_two(pick(o, {{2, 3, 4}, {2, 4, 5}}));
    for (const WeightType& wt : ws) {
        const int p3 = wt[2];
        for (int q = 1; q <= p3 - 2; ++q) {
            for (int k = 1; k <= 2; ++k) {
                checks += 2;
                const BundleSum t1 = apply_sequence(family(FamilyKind::thm_t1k_source, wt, q, k),
                                                    complement_indices(q, p3), Direction::insert);
                if (t1 != family(FamilyKind::thm_t1k, wt, q, k)) {
                    return {false, false, "psibar_{J_q^c}(T'1" + std::to_string(k) + ") q=" + std::to_string(q) +
                                              " on " + wt.str() + " is " + t1.str()};
                }
                const BundleSum t2 = apply_sequence(family(FamilyKind::thm_t2k_source, wt, q, k), leading_indices(q),
                                                    Direction::insert);
                if (t2 != family(FamilyKind::thm_t2k, wt, q, k)) {
                    return {false, false, "psibar_{J_q}(T'2" + std::to_string(k) + ") q=" + std::to_string(q) +
                                              " on " + wt.str() + " is " + t2.str()};
                }
            }
        }
    }
    return {true, false, std::to_string(checks) + " identities (cuboid steps p3 = 3,4,5; families on " + join(ws) + ")"};
}

Outcome cuboid_induction(const AcceptanceOptions& o) {
    const Weights ws = pick(o, {{2, 2, 3}, {2, 3, 4}, {3, 3, 4}, {2, 3, 5}});
    int steps = 0;
    for (const WeightType& wt : ws) {
        const CuboidTrace t = verify_cuboid_induction(wt);
        steps += static_cast<int>(t.steps.size());
        const int expected = (wt[0] - 1) * (wt[1] - 1) * (wt[2] - 1);
        if (!t.pass) return {false, false, wt.str() + ": " + t.failed_step};
        if (t.result.distinct_count() != expected) {
            return {false, false, wt.str() + ": " + std::to_string(t.result.distinct_count()) + " summands"};
        }
    }
    return {true, false, std::to_string(steps) + " steps replayed on " + join(ws)};
}

Outcome family_rigidity(const AcceptanceOptions& o) {
    const Weights ws = only_p1_two(pick(o, {{2, 3, 4}, {2, 3, 5}}));
    if (ws.empty()) return skip("no weight type with p1 = 2");
    StableHomCache cache;
    int objects = 0;
    int exact = 0;
    int boundary = 0;
    auto run = [&](const BundleSum& t, const std::string& name) -> std::string {
        const TiltingReport r = check_rigidity(t, o.window, &cache);
        ++objects;
        exact += r.exact_pairs;
        boundary += r.boundary_cells_checked;
        return r.pass ? std::string() : name + " on " + t.weights().str() + ": " + r.witness;
    };
    for (const WeightType& wt : ws) {
        for (FamilyKind k : {FamilyKind::auslander_t1, FamilyKind::auslander_t2}) {
            const std::string bad = run(family(k, wt), to_string(k));
            if (!bad.empty()) return {false, false, bad};
        }
        for (int q = 1; q <= wt[2] - 2; ++q) {
            for (int i = 1; i <= 2; ++i) {
                for (int j = 1; j <= 2; ++j) {
                    BundleSum t(wt);
                    t.add(family(FamilyKind::thm_t1k, wt, q, i));
                    t.add(family(FamilyKind::thm_t2k, wt, q, j));
                    const std::string bad =
                        run(t, "T1" + std::to_string(i) + "+T2" + std::to_string(j) + " q=" + std::to_string(q));
                    if (!bad.empty()) return {false, false, bad};
                }
            }
        }
    }

    // Corrupted objects must fail with a witness.
    std::string witnesses;
    for (const WeightType& wt : ws) {
        const BundleSum pair(wt, {Bundle::auslander(LElement::zero(wt)),
                                  Bundle::auslander(LElement::xbar(wt, 1) + LElement::x(wt, 1))});
        BundleSum shifted = family(FamilyKind::auslander_t1, wt);
        shifted.add(suspend(shifted.distinct().front(), 1));
        for (const BundleSum& t : {pair, shifted}) {
            const TiltingReport r = check_rigidity(t, o.window, &cache);
            if (r.pass || r.witness.empty()) return {false, false, "corrupted " + t.str() + " passed"};
            if (witnesses.empty()) witnesses = r.witness;
        }
    }
    std::ostringstream os;
    os << objects << " objects rigid on " << join(ws) << " (window " << o.window << ", " << exact
       << " Auslander pairs exact, " << boundary << " boundary cells); corrupted objects fail, e.g. " << witnesses;
    return {true, false, os.str()};
}

Outcome auslander_criterion(const AcceptanceOptions& o) {
    const Weights ws = only_p1_two(pick(o, {{2, 3, 4}}));
    if (ws.empty()) return skip("no weight type with p1 = 2");
    long cells = 0;
    for (const WeightType& wt : ws) {
        StableHomCache cache;
        const std::vector<LElement> twists = elements(wt, -2, 2);
        for (const LElement& a : twists) {
            for (const LElement& b : twists) {
                for (int n = -6; n <= 6; ++n) {
                    ++cells;
                    const bool criterion = auslander_vanishing_nonzero(a, b, n);
                    const int oracle = stable_hom(Bundle::auslander(a), suspend(Bundle::auslander(b), n), &cache).dimension;
                    if (criterion != (oracle != 0)) {
                        return {false, false, "A(" + a.str() + "), A(" + b.str() + ")[" + std::to_string(n) +
                                                  "] on " + wt.str() + ": oracle dimension " + std::to_string(oracle)};
                    }
                }
            }
        }
    }
    return {true, false, std::to_string(cells) + " cells agree on " + join(ws)};
}

Outcome example_quiver(const AcceptanceOptions& o) {
    const WeightType wt{2, 3, 4};
    if (!o.weights.empty() && std::find(o.weights.begin(), o.weights.end(), wt) == o.weights.end()) {
        return skip("needs (2,3,4)");
    }
    BundleSum t(wt);
    t.add(family(FamilyKind::thm_t1k, wt, 1, 1));
    t.add(family(FamilyKind::thm_t2k, wt, 1, 2));
    t = twist_object(t, -2 * LElement::x(wt, 3));
    const std::vector<std::string> names{"E(x3)",  "E(xb3 + x3)", "E<x3>", "E<x3>(xb3)", "E(xb2)", "E(xb1)"};
    const std::vector<std::pair<int, int>> expected{{0, 1}, {2, 0}, {2, 4}, {2, 3}, {4, 5}, {3, 1}, {3, 5}};
    std::vector<Bundle> want;
    for (const std::string& n : names) want.push_back(parse_bundle(n, wt));

    const Quiver q = endomorphism_quiver(t);
    if (q.vertices.size() != want.size()) return {false, false, std::to_string(q.vertices.size()) + " vertices"};
    std::vector<int> index(want.size(), -1);
    for (std::size_t i = 0; i < want.size(); ++i) {
        for (std::size_t v = 0; v < q.vertices.size(); ++v) {
            if (q.vertices[v] == want[i]) index[i] = static_cast<int>(v);
        }
        if (index[i] < 0) return {false, false, "vertex " + names[i] + " missing"};
    }
    std::set<std::pair<int, int>> got;
    for (const QuiverArrow& a : q.arrows) {
        if (a.multiplicity != 1) return {false, false, "arrow with multiplicity " + std::to_string(a.multiplicity)};
        got.insert({a.source, a.target});
    }
    std::set<std::pair<int, int>> want_arrows;
    for (const auto& [s, d] : expected) want_arrows.insert({index[static_cast<std::size_t>(s)], index[static_cast<std::size_t>(d)]});
    if (got != want_arrows) return {false, false, std::to_string(q.arrow_count()) + " arrows, not the expected 7"};
    if (q.dot().find("->") == std::string::npos) return {false, false, "empty DOT"};
    return {true, false, "6 vertices, 7 arrows as expected; DOT emitted"};
}

Outcome adjunction(const AcceptanceOptions& o) {
    Weights ws = only_p1_two(pick(o, {{2, 3, 4}}));
    ws.erase(std::remove_if(ws.begin(), ws.end(), [](const WeightType& w) { return w[2] < 3; }), ws.end());
    if (ws.empty()) return skip("needs p1 = 2 and p3 >= 3");
    std::string detail;
    for (const WeightType& big : ws) {
        const WeightType small = big.with_last(big[2] - 1);
        const std::vector<std::string> es{"O(0)", "O(x3)", "E", "E<x3>", "E<x2>(x3)"};
        const std::vector<std::string> fs{"O(0)", "O(x2)", "E", "E<x3>(x1)"};
        std::vector<PCycle> ec, fc;
        for (const std::string& s : es) {
            try {
                ec.push_back(to_pcycle(parse_bundle(s, big)));
            } catch (const std::invalid_argument&) {
                ec.push_back(to_pcycle(parse_bundle("O(x1)", big)));
            }
        }
        for (const std::string& s : fs) {
            try {
                fc.push_back(to_pcycle(parse_bundle(s, small)));
            } catch (const std::invalid_argument&) {
                fc.push_back(to_pcycle(parse_bundle("O(x1)", small)));
            }
        }
        std::string left_js, right_js, both_js;
        for (int j = 1; j <= big[2]; ++j) {
            int left = 0;
            int right = 0;
            for (const PCycle& e : ec) {
                const PCycle re = engine_apply(e, j, Direction::reduce);
                for (const PCycle& f : fc) {
                    const PCycle inf = engine_apply(f, j, Direction::insert);
                    left += hom_dim(re, f) == hom_dim(e, inf) ? 1 : 0;
                    right += hom_dim(inf, e) == hom_dim(f, re) ? 1 : 0;
                }
            }
            const int n = static_cast<int>(ec.size() * fc.size());
            if (left != n && right != n) {
                return {false, false, "j=" + std::to_string(j) + " on " + big.str() + ": neither direction uniform (" +
                                          std::to_string(left) + "/" + std::to_string(n) + " and " +
                                          std::to_string(right) + "/" + std::to_string(n) + ")"};
            }
            std::string& bucket = left == n && right == n ? both_js : (left == n ? left_js : right_js);
            bucket += (bucket.empty() ? "" : ",") + std::to_string(j);
        }
        detail += (detail.empty() ? "" : "; ") + big.str() + "->" + small.str() + ": ";
        if (right_js.empty()) {
            detail += "Hom(psi^j E, F) = Hom(E, psi_j F) on all 20 pairs for every j";
            if (!both_js.empty()) detail += " (the reverse identity also holds for j in {" + both_js + "})";
        } else {
            detail += "left identity for j in {" + left_js + "}, right identity for j in {" + right_js + "}, both for {" +
                      both_js + "}";
        }
    }
    return {true, false, detail};
}

struct Entry {
    const char* name;
    Outcome (*run)(const AcceptanceOptions&);
};

const Entry entries[criterion_count] = {
    {"string-group-laws", string_group_laws},   {"line-hom-oracle", line_hom_oracle},
    {"pcycle-validity", pcycle_validity},       {"formula-vs-engine", formula_vs_engine},
    {"proof-steps", proof_steps},               {"cuboid-induction", cuboid_induction},
    {"family-rigidity", family_rigidity},       {"auslander-criterion", auslander_criterion},
    {"example-quiver", example_quiver},         {"adjunction", adjunction},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
    if (id < 1 || id > criterion_count) throw std::invalid_argument("no criterion " + std::to_string(id));
    const Entry& e = entries[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = e.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Outcome out = e.run(options);
        r.pass = out.pass;
        r.skipped = out.skipped;
        r.detail = out.detail;
    } catch (const std::exception& ex) {
        r.pass = false;
        r.detail = std::string("exception: ") + ex.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count; ++id) out.push_back(run_criterion(id, options));
    return out;
}

}  // namespace wpl
