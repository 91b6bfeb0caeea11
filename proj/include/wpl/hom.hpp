#pragma once

// Hom spaces between p-cycles as exact nullspaces, Ext^1 through Serre
// duality, and Hom in the stable category (maps modulo those factoring
// through line bundles).

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "wpl/catalog.hpp"
#include "wpl/linalg.hpp"
#include "wpl/pcycle.hpp"

namespace wpl {

/// u_0..u_{p-1} with u_i : E_i -> F_i.
struct ChainMap {
    std::vector<MonomialMatrix> u;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);

/// The solution space of u_{i+1} x_i = x'_i u_i (u_p = u_0 twisted by c),
/// with unknowns the monomial coefficients of every u_i entry.
class HomSpace {
public:
    HomSpace(const PCycle& source, const PCycle& target);

    int dimension() const { return static_cast<int>(basis_.size()); }
    int unknowns() const { return unknowns_; }
    /// Nullspace basis in unknown coordinates.
    const std::vector<SparseVector>& basis() const { return basis_; }

    ChainMap chain_map(const SparseVector& coords) const;
    SparseVector coordinates(const ChainMap& m) const;
    std::vector<ChainMap> basis_maps() const;

    /// Chain maps u_i compatible with the cycle maps.
    bool is_morphism(const ChainMap& m) const;

private:
    int offset(int i, int r, int s) const;

    PCycle source_;
    PCycle target_;
    // offsets_[i][r * cols + s]
    std::vector<std::vector<int>> offsets_;
    int unknowns_ = 0;
    std::vector<SparseVector> basis_;
};

enum class LineHomMode { closed, oracle };

/// dim Hom(O(a), O(b)) on X(p1,p2,p3). The oracle counts monomials
/// x1^a1 x2^a2 x3^a3 of degree b - a with a3 < p3.
int hom_dim_line(const LElement& a, const LElement& b, LineHomMode mode);

int hom_dim(const PCycle& e, const PCycle& f);
int hom_dim(const Bundle& e, const Bundle& f);
/// dim Ext^1(x, y) = dim Hom(y, x(omega)).
int ext1_dim(const Bundle& x, const Bundle& y);
int ext1_dim(const PCycle& x, const PCycle& y);

/// Sub- and quotient-line-bundle degrees: {y} for O(y) and
/// {omega + y, x + y} for E<x>(y).
std::vector<LElement> filtration_degrees(const Bundle& b);

struct StableHomResult {
    int coherent_dimension = 0;
    int factoring_dimension = 0;
    int dimension = 0;
    int window_size = 0;            // mediating degrees examined
    bool window_stable = true;      // padding by c changed nothing
};

/// Memo for stable Hom between catalog objects; keyed by the pair up to a
/// common twist. Owned by the caller.
class StableHomCache {
public:
    std::optional<StableHomResult> find(const Bundle& e, const Bundle& f) const;
    void store(const Bundle& e, const Bundle& f, const StableHomResult& r);
    std::size_t size() const { return memo_.size(); }

private:
    using Key = std::tuple<Bundle::Kind, LElement, Bundle::Kind, LElement, LElement>;
    static Key key(const Bundle& e, const Bundle& f);
    std::map<Key, StableHomResult> memo_;
};

/// Throws std::runtime_error if the padded window changes the answer.
StableHomResult stable_hom(const Bundle& e, const Bundle& f, StableHomCache* cache = nullptr);

/// Maps E -> F (as coordinates in HomSpace(E,F)) that factor through line
/// bundles, spanning that subspace. Used for the stable quotient.
std::vector<SparseVector> factoring_span(const Bundle& e, const Bundle& f, const HomSpace& space);

/// B[n] as the twist by n*x1; needs p1 = 2.
Bundle suspend(const Bundle& b, int n);
BundleSum suspend(const BundleSum& s, int n);

/// Nonzero stable Hom(A(a), A(b)[n]) iff (b + n x1) - a is one of
/// 0, xbar1, xbar2, xbar3.
bool auslander_vanishing_nonzero(const LElement& a, const LElement& b, int n);
/// All integers n with nonzero stable Hom(A(a), A(b)[n]).
std::set<int> solve_all_n(const LElement& a, const LElement& b);

}  // namespace wpl
