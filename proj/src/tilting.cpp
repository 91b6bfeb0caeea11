#include "wpl/tilting.hpp"

#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "wpl/recognize.hpp"

namespace wpl {

namespace {

std::vector<Bundle> summands(const BundleSum& t) { return t.distinct(); }

int expected_summands(const WeightType& wt) {
    int n = 1;
    for (int i = 0; i < wt.size(); ++i) n *= wt[i] - 1;
    return n;
}

// rep[i] = index of the first summand isomorphic to items[i].
std::vector<int> iso_representatives(const std::vector<Bundle>& items) {
    std::vector<int> rep(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        rep[i] = static_cast<int>(i);
        for (std::size_t j = 0; j < i; ++j) {
            if (rep[j] != static_cast<int>(j)) continue;
            if (items[i].rank() != items[j].rank() || items[i].is_line() != items[j].is_line()) continue;
            if (isomorphic(to_pcycle(items[j]), to_pcycle(items[i]))) {
                rep[i] = static_cast<int>(j);
                break;
            }
        }
    }
    return rep;
}

int iso_class_count(const std::vector<Bundle>& items) {
    const std::vector<int> rep = iso_representatives(items);
    int n = 0;
    for (std::size_t i = 0; i < rep.size(); ++i) n += rep[i] == static_cast<int>(i) ? 1 : 0;
    return n;
}

std::string hom_label(const Bundle& a, const Bundle& b, int n) {
    std::ostringstream os;
    os << "Hom(" << a.str() << ", " << b.str() << "[" << n << "])";
    return os.str();
}

// Nonzero shifts of stable Hom(a, b[n]) for 0 < |n| <= window. Auslander
// pairs use the exact criterion and report every nonzero n, in or out of the
// window.
struct ShiftScan {
    std::vector<RigidityCell> nonzero;
    int cells = 0;
    int boundary = 0;
    bool exact = false;
};

ShiftScan scan_shifts(const Bundle& a, const Bundle& b, int window, StableHomCache* cache) {
    ShiftScan out;
    if (a.is_auslander() && b.is_auslander()) {
        out.exact = true;
        for (int n : solve_all_n(a.twist(), b.twist())) {
            if (n != 0) out.nonzero.push_back({0, 0, n, 1, "criterion"});
        }
        return out;
    }
    for (int n = -window; n <= window; ++n) {
        if (n == 0) continue;
        const int d = stable_hom(a, suspend(b, n), cache).dimension;
        ++out.cells;
        if (n == window || n == -window) ++out.boundary;
        if (d != 0) out.nonzero.push_back({0, 0, n, d, "oracle"});
    }
    return out;
}

}  // namespace

int rigidity_window_from_env() {
    const char* v = std::getenv("WPL_RIGIDITY_WINDOW");
    if (v == nullptr) return default_rigidity_window;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || n <= 0 || n > 10000) return default_rigidity_window;
    return static_cast<int>(n);
}

TiltingReport check_rigidity(const BundleSum& t, int window, StableHomCache* cache) {
    const WeightType& wt = t.weights();
    if (wt.size() != 3 || wt[0] != 2) throw std::invalid_argument("rigidity needs weight type (2,p2,p3), got " + wt.str());
    if (window <= 0) throw std::invalid_argument("rigidity window must be positive");
    StableHomCache local;
    if (cache == nullptr) cache = &local;

    TiltingReport rep;
    rep.object = t;
    rep.window = window;
    const std::vector<Bundle> items = summands(t);
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = 0; j < items.size(); ++j) {
            ShiftScan s = scan_shifts(items[i], items[j], window, cache);
            rep.cells_checked += s.cells;
            rep.boundary_cells_checked += s.boundary;
            if (s.exact) ++rep.exact_pairs;
            for (RigidityCell cell : s.nonzero) {
                cell.source = static_cast<int>(i);
                cell.target = static_cast<int>(j);
                rep.nonzero_cells.push_back(cell);
            }
        }
    }
    rep.summand_count = iso_class_count(items);
    rep.expected_count = expected_summands(wt);
    rep.notes.push_back("generation is not decided; the summand count against (p1-1)(p2-1)(p3-1) is used as a proxy");
    if (items.size() != static_cast<std::size_t>(rep.summand_count)) {
        rep.notes.push_back("some summands with different parameters are isomorphic; counted once");
    }

    if (!rep.nonzero_cells.empty()) {
        const RigidityCell& w = rep.nonzero_cells.front();
        rep.witness = hom_label(items[w.source], items[w.target], w.shift) + " has dimension " +
                      std::to_string(w.dimension) + " (" + w.method + ")";
    } else if (rep.summand_count != rep.expected_count) {
        rep.witness = "summand count " + std::to_string(rep.summand_count) + " but expected " +
                      std::to_string(rep.expected_count);
    }
    rep.pass = rep.witness.empty();
    return rep;
}

namespace {

std::string weights_mismatch(const BundleSum& s, const WeightType& want, const char* name) {
    if (s.weights() == want) return {};
    return std::string(name) + " lives on " + s.weights().str() + " but " + want.str() + " is required";
}

BundleSum glue_image(const BundleSum& t_prime, int q, int p3) {
    const BundleSum up = apply_sequence(t_prime, complement_indices(q, p3), Direction::insert);
    return apply_sequence(up, shifted_up(leading_indices(q)), Direction::reduce);
}

}  // namespace

GluingStep check_add_condition(const BundleSum& t_prime, const BundleSum& t_second, int q, int p3) {
    GluingStep step;
    const WeightType& wt = t_prime.weights();
    std::ostringstream d;
    d << "psibar^{2.." << q + 1 << "} psibar_{" << q + 1 << ".." << p3 - 1 << "}(T') in add(T'')";
    step.description = d.str();
    if (q < 1 || p3 < q + 1 || wt.size() != 3) throw std::invalid_argument("need 1 <= q <= p3 - 1");
    std::string bad = weights_mismatch(t_prime, wt.with_last(q + 1), "T'");
    if (bad.empty()) bad = weights_mismatch(t_second, wt.with_last(p3 - q), "T''");
    if (!bad.empty()) {
        step.witness = bad;
        return step;
    }
    step.computed = glue_image(t_prime, q, p3);
    for (const Bundle& b : step.computed.distinct()) {
        if (!t_second.contains(b)) {
            step.witness = b.str() + " is not a summand of T''";
            return step;
        }
    }
    step.pass = true;
    return step;
}

Assembly assemble_recollement(const BundleSum& t_prime, const BundleSum& t_second, int q, int p3, int window,
                              StableHomCache* cache) {
    Assembly out;
    const WeightType& wt = t_prime.weights();
    if (wt.size() != 3 || q < 1 || p3 < q + 1) throw std::invalid_argument("need three weights and 1 <= q <= p3 - 1");
    const WeightType big = wt.with_last(p3);

    GluingStep add = check_add_condition(t_prime, t_second, q, p3);
    out.trace.push_back(add);
    if (t_prime.weights() != wt.with_last(q + 1) || t_second.weights() != wt.with_last(p3 - q)) {
        out.witness = add.witness;
        return out;
    }

    out.object = BundleSum(big);
    out.object.add(apply_sequence(t_prime, complement_indices(q, p3), Direction::insert));
    out.object.add(apply_sequence(t_second, leading_indices(q), Direction::insert));
    if (add.pass) {
        out.pass = true;
        return out;
    }

    // Fall back to vanishing of Hom(T'', j^# i_*(T')[n]).
    GluingStep hom;
    hom.description = "stable Hom(T'', j^# i_*(T')[n]) = 0 for 0 < |n| <= " + std::to_string(window);
    hom.computed = add.computed;
    if (wt[0] != 2) {
        hom.witness = "add condition failed and suspension is unavailable on " + wt.str() + ": " + add.witness;
    } else {
        StableHomCache local;
        if (cache == nullptr) cache = &local;
        for (const Bundle& a : t_second.distinct()) {
            for (const Bundle& b : add.computed.distinct()) {
                const ShiftScan s = scan_shifts(a, b, window, cache);
                if (!s.nonzero.empty()) {
                    hom.witness = hom_label(a, b, s.nonzero.front().shift) + " has dimension " +
                                  std::to_string(s.nonzero.front().dimension);
                    break;
                }
            }
            if (!hom.witness.empty()) break;
        }
    }
    hom.pass = hom.witness.empty();
    out.trace.push_back(hom);
    out.pass = hom.pass;
    if (!out.pass) out.witness = hom.witness;
    return out;
}

namespace {

// X(p1,p2,p3) only depends on the weights up to order; relabeling the
// points permutes the generators. new[k] = old[from[k]].
LElement relabel(const LElement& e, const WeightType& target, const std::array<int, 3>& from) {
    std::vector<std::int64_t> coeffs;
    for (int k = 0; k < 3; ++k) coeffs.push_back(e.residue(from[k]));
    return LElement::normal_form(target, coeffs, e.c_coeff());
}

BundleSum relabel(const BundleSum& s, const WeightType& target, const std::array<int, 3>& from) {
    BundleSum out(target);
    for (const auto& [b, mult] : s.items()) {
        const LElement y = relabel(b.twist(), target, from);
        if (b.is_line()) {
            out.add(Bundle::line(y), mult);
        } else {
            out.add(Bundle::extension(relabel(b.cuboid(), target, from), y), mult);
        }
    }
    return out;
}

struct CuboidReplay {
    std::vector<GluingStep>& steps;
    bool ok = true;
    std::string failed;

    void fail(const GluingStep& s) {
        if (ok) failed = s.description + ": " + s.witness;
        ok = false;
    }

    void compare(const BundleSum& t, const WeightType& wt, const std::string& what) {
        GluingStep s;
        s.description = what + " equals the cuboid family on " + wt.str();
        s.computed = t;
        s.pass = t == family(FamilyKind::cuboid, wt);
        if (!s.pass) s.witness = "got " + t.str();
        steps.push_back(s);
        if (!s.pass) fail(s);
    }

    BundleSum build(const WeightType& wt) {
        if (!ok) return BundleSum(wt);
        const int p = wt[2];
        if (p == 2) {
            if (wt[0] == 2 && wt[1] == 2) {
                GluingStep s;
                s.description = "base T(2,2,2) = E";
                s.computed = family(FamilyKind::cuboid, wt);
                s.pass = true;
                steps.push_back(s);
                return s.computed;
            }
            const WeightType from_wt{2, wt[0], wt[1]};
            const BundleSum t = relabel(build(from_wt), wt, {1, 2, 0});
            if (ok) compare(t, wt, "T" + wt.str() + " relabeled from T" + from_wt.str());
            return t;
        }
        const BundleSum base = build(wt.with_last(2));
        BundleSum prev = base;
        for (int k = 3; k <= p && ok; ++k) {
            GluingStep add = check_add_condition(base, prev, 1, k);
            add.description = "T" + wt.with_last(k).str() + " step: " + add.description;
            steps.push_back(add);
            if (!add.pass) {
                fail(add);
                break;
            }
            BundleSum t(wt.with_last(k));
            t.add(apply_sequence(base, complement_indices(1, k), Direction::insert));
            t.add(apply_sequence(prev, leading_indices(1), Direction::insert));
            compare(t, wt.with_last(k), "T" + wt.with_last(k).str());
            prev = t;
        }
        return prev;
    }
};

}  // namespace

CuboidTrace verify_cuboid_induction(const WeightType& wt) {
    if (wt.size() != 3) throw std::invalid_argument("cuboid induction needs three weights");
    for (int i = 0; i < 3; ++i) {
        if (wt[i] < 2) throw std::invalid_argument("cuboid induction needs all weights >= 2");
    }
    CuboidTrace out;
    CuboidReplay replay{out.steps, true, {}};
    out.result = replay.build(wt);
    out.pass = replay.ok;
    out.failed_step = replay.failed;
    return out;
}

int Quiver::arrow_count() const {
    int n = 0;
    for (const QuiverArrow& a : arrows) n += a.multiplicity;
    return n;
}

std::string Quiver::dot() const {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        os << "  v" << i << " [label=\"" << vertices[i].str();
        if (vertex_multiplicity[i] > 1) os << " (x" << vertex_multiplicity[i] << ")";
        os << "\"];\n";
    }
    for (const QuiverArrow& a : arrows) {
        os << "  v" << a.source << " -> v" << a.target;
        if (a.multiplicity > 1) os << " [label=\"" << a.multiplicity << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

Quiver endomorphism_quiver(const BundleSum& t) {
    Quiver out;
    const std::vector<Bundle> items = summands(t);
    const std::vector<int> rep = iso_representatives(items);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const int r = rep[i];
        int mult = 0;
        for (const auto& [b, m] : t.items()) {
            if (b == items[i]) mult = m;
        }
        if (r == static_cast<int>(i)) {
            out.vertices.push_back(items[i]);
            out.vertex_multiplicity.push_back(mult);
        } else {
            for (std::size_t v = 0; v < out.vertices.size(); ++v) {
                if (out.vertices[v] == items[r]) out.vertex_multiplicity[v] += mult;
            }
        }
    }

    const std::size_t m = out.vertices.size();
    std::vector<PCycle> cycles;
    for (const Bundle& b : out.vertices) cycles.push_back(to_pcycle(b));
    std::vector<std::vector<HomSpace>> spaces;
    std::vector<std::vector<std::vector<ChainMap>>> maps(m, std::vector<std::vector<ChainMap>>(m));
    std::vector<std::vector<std::vector<SparseVector>>> ideal(m, std::vector<std::vector<SparseVector>>(m));
    out.stable_dims.assign(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        spaces.emplace_back();
        for (std::size_t j = 0; j < m; ++j) {
            spaces[i].emplace_back(cycles[i], cycles[j]);
            const HomSpace& h = spaces[i][j];
            maps[i][j] = h.basis_maps();
            ideal[i][j] = factoring_span(out.vertices[i], out.vertices[j], h);
            out.stable_dims[i][j] = h.dimension() - static_cast<int>(ideal[i][j].size());
        }
        if (out.stable_dims[i][i] != 1) {
            throw std::runtime_error("stable End(" + out.vertices[i].str() + ") has dimension " +
                                     std::to_string(out.stable_dims[i][i]) + "; the radical is not computed in that case");
        }
    }

    // The stable radical between distinct vertices is all of stable Hom, and
    // rad(i,i) = 0 stably, so rad^2(i,j) is spanned by composites through
    // the other vertices, modulo maps factoring through line bundles.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j || out.stable_dims[i][j] == 0) continue;
            const HomSpace& h = spaces[i][j];
            SparseEchelon span(h.unknowns());
            for (const SparseVector& v : ideal[i][j]) span.add(v);
            for (std::size_t k = 0; k < m; ++k) {
                if (k == i || k == j || out.stable_dims[i][k] == 0 || out.stable_dims[k][j] == 0) continue;
                for (const ChainMap& f : maps[i][k]) {
                    for (const ChainMap& g : maps[k][j]) span.add(h.coordinates(compose(g, f)));
                }
            }
            const int arrows = h.dimension() - span.rank();
            if (arrows > 0) out.arrows.push_back({static_cast<int>(i), static_cast<int>(j), arrows});
        }
    }
    return out;
}

}  // namespace wpl
