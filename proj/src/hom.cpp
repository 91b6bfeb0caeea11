#include "wpl/hom.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace wpl {

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (g.u.size() != f.u.size()) throw std::invalid_argument("compose: chain maps of different period");
    ChainMap r;
    for (std::size_t i = 0; i < f.u.size(); ++i) r.u.push_back(compose(g.u[i], f.u[i]));
    return r;
}

namespace {

// Index carry when multiplying monomial bases of two degrees.
int carry(const LElement& a, const LElement& b) { return (a.residue(0) + b.residue(0)) / a.weights()[0]; }

}  // namespace

HomSpace::HomSpace(const PCycle& source, const PCycle& target) : source_(source), target_(target) {
    if (source.period() != target.period() || source.base() != target.base()) {
        throw std::invalid_argument("hom_space: cycles differ in period or weight type");
    }
    const int p = source.period();
    for (int i = 0; i < p; ++i) {
        const auto& e = source.entries()[static_cast<std::size_t>(i)];
        const auto& f = target.entries()[static_cast<std::size_t>(i)];
        std::vector<int> offs;
        for (const auto& fr : f) {
            for (const auto& es : e) {
                offs.push_back(unknowns_);
                unknowns_ += basis_size(fr - es);
            }
        }
        offsets_.push_back(std::move(offs));
    }

    SparseEchelon ech(unknowns_);
    for (int i = 0; i < p; ++i) {
        const int next = (i + 1) % p;
        const auto& e_i = source.entries()[static_cast<std::size_t>(i)];
        const auto& f_i = target.entries()[static_cast<std::size_t>(i)];
        const auto e_next = source.entry(i + 1);
        const auto f_next = target.entry(i + 1);
        const MonomialMatrix& x = source.maps()[static_cast<std::size_t>(i)];
        const MonomialMatrix& y = target.maps()[static_cast<std::size_t>(i)];
        for (int r = 0; r < static_cast<int>(f_next.size()); ++r) {
            for (int s = 0; s < static_cast<int>(e_i.size()); ++s) {
                const LElement degree = f_next[static_cast<std::size_t>(r)] - e_i[static_cast<std::size_t>(s)];
                const int n = basis_size(degree);
                if (n == 0) continue;
                std::vector<SparseVector> eqs(static_cast<std::size_t>(n));
                // u_{i+1}[r,t] * x_i[t,s]
                for (int t = 0; t < static_cast<int>(e_next.size()); ++t) {
                    const HomPoly& xp = x.at(t, s);
                    if (xp.is_zero()) continue;
                    const LElement du = f_next[static_cast<std::size_t>(r)] - e_next[static_cast<std::size_t>(t)];
                    const int nu = basis_size(du);
                    const int base_col = offset(next, r, t);
                    const int cr = carry(du, xp.degree());
                    for (int a = 0; a < nu; ++a) {
                        for (const auto& [b, q] : xp.terms()) {
                            eqs[static_cast<std::size_t>(cr + a + b)].push_back({base_col + a, q});
                        }
                    }
                }
                // - y_i[r,t] * u_i[t,s]
                for (int t = 0; t < static_cast<int>(f_i.size()); ++t) {
                    const HomPoly& yp = y.at(r, t);
                    if (yp.is_zero()) continue;
                    const LElement du = f_i[static_cast<std::size_t>(t)] - e_i[static_cast<std::size_t>(s)];
                    const int nu = basis_size(du);
                    const int base_col = offset(i, t, s);
                    const int cr = carry(du, yp.degree());
                    for (int a = 0; a < nu; ++a) {
                        for (const auto& [b, q] : yp.terms()) {
                            eqs[static_cast<std::size_t>(cr + a + b)].push_back({base_col + a, -q});
                        }
                    }
                }
                for (auto& eq : eqs) {
                    canonicalize(eq);
                    if (!eq.empty()) ech.add(std::move(eq));
                }
            }
        }
    }
    basis_ = ech.nullspace();
}

int HomSpace::offset(int i, int r, int s) const {
    const int cols = source_.rank();
    return offsets_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r * cols + s)];
}

ChainMap HomSpace::chain_map(const SparseVector& coords) const {
    ChainMap m;
    std::unordered_map<int, Rational> val;
    for (const auto& e : coords) val.emplace(e.col, e.val);
    for (int i = 0; i < source_.period(); ++i) {
        const auto& e = source_.entries()[static_cast<std::size_t>(i)];
        const auto& f = target_.entries()[static_cast<std::size_t>(i)];
        MonomialMatrix u(e, f);
        for (int r = 0; r < static_cast<int>(f.size()); ++r) {
            for (int s = 0; s < static_cast<int>(e.size()); ++s) {
                const LElement d = f[static_cast<std::size_t>(r)] - e[static_cast<std::size_t>(s)];
                HomPoly poly(d);
                for (int a = 0; a < basis_size(d); ++a) {
                    auto it = val.find(offset(i, r, s) + a);
                    if (it != val.end()) poly = poly + HomPoly::basis_element(d, a, it->second);
                }
                u.set(r, s, std::move(poly));
            }
        }
        m.u.push_back(std::move(u));
    }
    return m;
}

SparseVector HomSpace::coordinates(const ChainMap& m) const {
    if (static_cast<int>(m.u.size()) != source_.period()) throw std::invalid_argument("coordinates: wrong period");
    SparseVector v;
    for (int i = 0; i < source_.period(); ++i) {
        const MonomialMatrix& u = m.u[static_cast<std::size_t>(i)];
        if (u.source() != source_.entries()[static_cast<std::size_t>(i)] ||
            u.target() != target_.entries()[static_cast<std::size_t>(i)]) {
            throw std::invalid_argument("coordinates: chain map has the wrong degrees");
        }
        for (int r = 0; r < u.rows(); ++r) {
            for (int s = 0; s < u.cols(); ++s) {
                for (const auto& [a, q] : u.at(r, s).terms()) v.push_back({offset(i, r, s) + a, q});
            }
        }
    }
    canonicalize(v);
    return v;
}

std::vector<ChainMap> HomSpace::basis_maps() const {
    std::vector<ChainMap> out;
    for (const auto& b : basis_) out.push_back(chain_map(b));
    return out;
}

bool HomSpace::is_morphism(const ChainMap& m) const {
    const int p = source_.period();
    if (static_cast<int>(m.u.size()) != p) return false;
    for (int i = 0; i < p; ++i) {
        MonomialMatrix next = m.u[static_cast<std::size_t>((i + 1) % p)];
        if (i + 1 == p) next = next.twisted(LElement::c(source_.base()));
        MonomialMatrix lhs = compose(next, source_.maps()[static_cast<std::size_t>(i)]);
        MonomialMatrix rhs = compose(target_.maps()[static_cast<std::size_t>(i)], m.u[static_cast<std::size_t>(i)]);
        if (lhs != rhs) return false;
    }
    return true;
}

int hom_dim_line(const LElement& a, const LElement& b, LineHomMode mode) {
    const LElement d = b - a;
    if (mode == LineHomMode::closed) return std::max<std::int64_t>(0, d.c_coeff() + 1);
    const WeightType& wt = d.weights();
    if (wt.size() != 3) throw std::invalid_argument("hom_dim_line needs three weights");
    if (d.c_coeff() < 0) return 0;
    // Every monomial of degree d has a_i * x_i summing to d, so
    // a_i <= p_i * (c_coeff(d) + 1) bounds the search.
    const std::int64_t bound = d.c_coeff() + 1;
    int count = 0;
    for (int a3 = 0; a3 < wt[2]; ++a3) {
        for (int a1 = 0; a1 <= wt[0] * bound; ++a1) {
            for (int a2 = 0; a2 <= wt[1] * bound; ++a2) {
                if (LElement::normal_form(wt, std::vector<std::int64_t>{a1, a2, a3}, 0) == d) ++count;
            }
        }
    }
    return count;
}

int hom_dim(const PCycle& e, const PCycle& f) { return HomSpace(e, f).dimension(); }

int hom_dim(const Bundle& e, const Bundle& f) {
    if (e.weights() != f.weights()) throw std::invalid_argument("hom_dim: weight type mismatch");
    return hom_dim(to_pcycle(e), to_pcycle(f));
}

int ext1_dim(const Bundle& x, const Bundle& y) {
    return hom_dim(y, x.twisted(LElement::omega(x.weights())));
}

int ext1_dim(const PCycle& x, const PCycle& y) {
    const WeightType wt{x.base()[0], x.base()[1], x.period()};
    return hom_dim(y, twist_cycle(x, LElement::omega(wt)));
}

std::vector<LElement> filtration_degrees(const Bundle& b) {
    if (b.is_line()) return {b.twist()};
    return {LElement::omega(b.weights()) + b.twist(), b.cuboid() + b.twist()};
}

StableHomCache::Key StableHomCache::key(const Bundle& e, const Bundle& f) {
    return {e.kind(), e.cuboid(), f.kind(), f.cuboid(), f.twist() - e.twist()};
}

std::optional<StableHomResult> StableHomCache::find(const Bundle& e, const Bundle& f) const {
    auto it = memo_.find(key(e, f));
    if (it == memo_.end()) return std::nullopt;
    return it->second;
}

void StableHomCache::store(const Bundle& e, const Bundle& f, const StableHomResult& r) { memo_[key(e, f)] = r; }

namespace {

// Mediating degrees: the union of [s, q] over filtration degrees, and the
// same with both ends moved out by c (without the core part).
std::pair<std::vector<LElement>, std::vector<LElement>> mediating_window(const Bundle& e, const Bundle& f) {
    const LElement c = LElement::c(e.weights());
    std::set<LElement> core;
    std::set<LElement> padded;
    for (const auto& s : filtration_degrees(e)) {
        for (const auto& q : filtration_degrees(f)) {
            for (const auto& xi : enumerate_interval(s, q)) core.insert(xi);
            for (const auto& xi : enumerate_interval(s - c, q + c)) padded.insert(xi);
        }
    }
    std::vector<LElement> extra;
    for (const auto& xi : padded) {
        if (!core.contains(xi)) extra.push_back(xi);
    }
    return {{core.begin(), core.end()}, extra};
}

// Adds the maps E -> O(xi) -> F to `ech`, stopping once it spans `space`.
void add_compositions(const PCycle& ce, const PCycle& cf, const LElement& xi, const HomSpace& space,
                      SparseEchelon& ech, std::vector<SparseVector>* kept) {
    const PCycle line = line_to_pcycle(xi);
    HomSpace into(ce, line);
    if (into.dimension() == 0) return;
    HomSpace out(line, cf);
    if (out.dimension() == 0) return;
    const auto fs = into.basis_maps();
    const auto gs = out.basis_maps();
    for (const auto& g : gs) {
        for (const auto& f : fs) {
            SparseVector v = space.coordinates(compose(g, f));
            if (ech.add(v) && kept) kept->push_back(std::move(v));
            if (ech.rank() == space.dimension()) return;
        }
    }
}

}  // namespace

std::vector<SparseVector> factoring_span(const Bundle& e, const Bundle& f, const HomSpace& space) {
    std::vector<SparseVector> kept;
    if (space.dimension() == 0) return kept;
    if (e.is_line() || f.is_line()) return space.basis();
    const PCycle ce = to_pcycle(e);
    const PCycle cf = to_pcycle(f);
    SparseEchelon ech(space.unknowns());
    auto [core, extra] = mediating_window(e, f);
    for (const auto& xi : core) {
        add_compositions(ce, cf, xi, space, ech, &kept);
        if (ech.rank() == space.dimension()) return kept;
    }
    const int before = ech.rank();
    for (const auto& xi : extra) add_compositions(ce, cf, xi, space, ech, &kept);
    if (ech.rank() != before) {
        throw std::runtime_error("stable Hom window unstable for " + e.str() + " -> " + f.str());
    }
    return kept;
}

StableHomResult stable_hom(const Bundle& e, const Bundle& f, StableHomCache* cache) {
    if (e.weights() != f.weights()) throw std::invalid_argument("stable_hom: weight type mismatch");
    if (cache) {
        if (auto hit = cache->find(e, f)) return *hit;
    }
    StableHomResult r;
    const PCycle ce = to_pcycle(e);
    const PCycle cf = to_pcycle(f);
    HomSpace space(ce, cf);
    r.coherent_dimension = space.dimension();
    if (e.is_line() || f.is_line()) {
        r.factoring_dimension = r.coherent_dimension;
    } else if (r.coherent_dimension > 0) {
        SparseEchelon ech(space.unknowns());
        auto [core, extra] = mediating_window(e, f);
        for (const auto& xi : core) {
            ++r.window_size;
            add_compositions(ce, cf, xi, space, ech, nullptr);
            if (ech.rank() == space.dimension()) break;
        }
        if (ech.rank() < space.dimension()) {
            const int before = ech.rank();
            for (const auto& xi : extra) {
                ++r.window_size;
                add_compositions(ce, cf, xi, space, ech, nullptr);
            }
            r.window_stable = ech.rank() == before;
            if (!r.window_stable) {
                throw std::runtime_error("stable Hom window unstable for " + e.str() + " -> " + f.str());
            }
        }
        r.factoring_dimension = ech.rank();
    }
    r.dimension = r.coherent_dimension - r.factoring_dimension;
    if (cache) cache->store(e, f, r);
    return r;
}

Bundle suspend(const Bundle& b, int n) {
    if (b.weights().size() != 3 || b.weights()[0] != 2) {
        throw std::invalid_argument("suspension is only available for weight types (2,p2,p3)");
    }
    return b.twisted(n * LElement::x(b.weights(), 1));
}

BundleSum suspend(const BundleSum& s, int n) {
    BundleSum out(s.weights());
    for (const auto& [b, m] : s.items()) out.add(suspend(b, n), m);
    return out;
}

namespace {

std::vector<LElement> auslander_targets(const WeightType& wt) {
    return {LElement::zero(wt), LElement::xbar(wt, 1), LElement::xbar(wt, 2), LElement::xbar(wt, 3)};
}

void check_auslander_input(const LElement& a, const LElement& b) {
    if (a.weights() != b.weights()) throw std::invalid_argument("auslander criterion: weight type mismatch");
    if (a.weights().size() != 3 || a.weights()[0] != 2) {
        throw std::invalid_argument("auslander criterion needs weight type (2,p2,p3)");
    }
}

}  // namespace

bool auslander_vanishing_nonzero(const LElement& a, const LElement& b, int n) {
    check_auslander_input(a, b);
    const LElement d = b + n * LElement::x(a.weights(), 1) - a;
    const auto ts = auslander_targets(a.weights());
    return std::find(ts.begin(), ts.end(), d) != ts.end();
}

std::set<int> solve_all_n(const LElement& a, const LElement& b) {
    check_auslander_input(a, b);
    std::set<int> out;
    const int p1 = a.weights()[0];
    for (const auto& t : auslander_targets(a.weights())) {
        // n*x1 = t + a - b; n*x1 has normal form (n mod p1, 0, 0; floor(n/p1)).
        const LElement z = t + a - b;
        if (z.residue(1) != 0 || z.residue(2) != 0) continue;
        out.insert(static_cast<int>(z.residue(0) + p1 * z.c_coeff()));
    }
    return out;
}

}  // namespace wpl
