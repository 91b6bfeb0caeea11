#include "wpl/recognize.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

namespace wpl {

HomPoly determinant(const MonomialMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::optional<HomPoly> acc;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
            }
        }
        HomPoly term = m.at(0, perm[0]);
        for (int i = 1; i < n; ++i) term = term * m.at(i, perm[static_cast<std::size_t>(i)]);
        if (inversions % 2) term = Rational(-1) * term;
        acc = acc ? *acc + term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *acc;
}

bool is_isomorphism(const ChainMap& u) {
    for (const auto& m : u.u) {
        if (m.rows() != m.cols()) return false;
        std::vector<LElement> s = m.source();
        std::vector<LElement> t = m.target();
        std::sort(s.begin(), s.end());
        std::sort(t.begin(), t.end());
        if (s != t) return false;
        if (!determinant(m).is_unit()) return false;
    }
    return true;
}

namespace {

bool same_degree_profile(const PCycle& a, const PCycle& b) {
    if (a.period() != b.period() || a.rank() != b.rank() || a.base() != b.base()) return false;
    for (int i = 0; i < a.period(); ++i) {
        auto x = a.entries()[static_cast<std::size_t>(i)];
        auto y = b.entries()[static_cast<std::size_t>(i)];
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    return true;
}

LElement lift(const LElement& base_degree, const WeightType& wt, int k3) {
    return LElement::normal_form(wt, std::vector<std::int64_t>{base_degree.residue(0), base_degree.residue(1), k3},
                                 base_degree.c_coeff());
}

}  // namespace

bool isomorphic(const PCycle& a, const PCycle& b) {
    if (!same_degree_profile(a, b)) return false;
    HomSpace space(a, b);
    if (space.dimension() == 0) return false;
    for (unsigned seed : {17u, 4099u, 65537u}) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> dist(1, 997);
        SparseVector v;
        for (const auto& basis_vec : space.basis()) {
            Rational q(dist(rng));
            for (const auto& e : basis_vec) v.push_back({e.col, q * e.val});
        }
        canonicalize(v);
        if (is_isomorphism(space.chain_map(v))) return true;
    }
    return false;
}

bool Recognition::contains(const BundleSum& s) const {
    return std::find(matches.begin(), matches.end(), s) != matches.end();
}

WeightType cycle_weights(const PCycle& c) { return WeightType{c.base()[0], c.base()[1], c.period()}; }

Recognition recognize(const PCycle& c) {
    if (std::string err = c.validation_error(); !err.empty()) throw std::invalid_argument("recognize: " + err);
    const WeightType wt = cycle_weights(c);
    const WeightType base = c.base();
    const int p = c.period();
    Recognition out;
    std::vector<BundleSum> candidates;

    if (c.rank() == 1) {
        for (int k3 = 0; k3 < p; ++k3) {
            candidates.push_back(BundleSum(wt, {Bundle::line(lift(c.entries()[0][0], wt, k3))}));
        }
    } else if (c.rank() == 2) {
        // Two line bundles: each starts at one of the degrees of E_0.
        const auto& e0 = c.entries()[0];
        for (int k = 0; k < p; ++k) {
            for (int m = 0; m < p; ++m) {
                candidates.push_back(BundleSum(wt, {Bundle::line(lift(e0[0], wt, k)), Bundle::line(lift(e0[1], wt, m))}));
            }
        }
        // Extension bundles: some entry has the shape
        // O(c - x1 - x2 + phi(y)) + O(phi(x) + phi(y)).
        if (p >= 2 && base[0] >= 2 && base[1] >= 2) {
            const LElement corner = LElement::c(base) - LElement::x(base, 1) - LElement::x(base, 2);
            std::set<std::pair<LElement, LElement>> seen;
            for (const auto& entry : c.entries()) {
                for (int first = 0; first < 2; ++first) {
                    const LElement phi_y = entry[static_cast<std::size_t>(first)] - corner;
                    const LElement phi_x = entry[static_cast<std::size_t>(1 - first)] - phi_y;
                    if (phi_x.c_coeff() != 0 || phi_x.residue(0) > base[0] - 2 || phi_x.residue(1) > base[1] - 2) continue;
                    if (!seen.insert({phi_y, phi_x}).second) continue;
                    for (int l3 = 0; l3 <= p - 2; ++l3) {
                        const LElement x = lift(phi_x, wt, l3);
                        for (int k3 = 0; k3 < p; ++k3) {
                            // The listed entry may sit in a shifted position, so phi(y)
                            // can be off by c; both nearby lifts are tried.
                            for (int dc = -1; dc <= 0; ++dc) {
                                const LElement y = lift(phi_y, wt, k3) + dc * LElement::c(wt);
                                candidates.push_back(BundleSum(wt, {Bundle::extension(x, y)}));
                            }
                        }
                    }
                }
            }
        }
    } else {
        out.detail = "rank " + std::to_string(c.rank()) + " is outside the recognizable shapes";
        return out;
    }

    auto by_items = [](const BundleSum& a, const BundleSum& b) { return a.items() < b.items(); };
    std::sort(candidates.begin(), candidates.end(), by_items);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& cand : candidates) {
        if (isomorphic(c, to_pcycle(cand))) out.matches.push_back(cand);
    }
    if (out.matches.empty()) {
        out.detail = "no catalog shape is isomorphic to the cycle";
        return out;
    }
    const bool split = out.matches.front().total_count() == 2;
    for (const auto& m : out.matches) {
        // An indecomposable bundle cannot be isomorphic to a sum of two.
        if ((m.total_count() == 2) != split) throw std::runtime_error("recognition conflict: " + m.str());
    }
    if (out.matches.size() > 1) {
        out.detail = std::to_string(out.matches.size()) + " parameter sets in the isomorphism class";
    }
    return out;
}

}  // namespace wpl
