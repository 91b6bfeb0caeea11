#pragma once

// Morphisms between sums of line bundles on the two-weight base Y = X(p1,p2).
// Its coordinate ring is k[x1,x2], so Hom(O(a),O(b)) has the monomials of
// degree b - a as a basis. With b - a = (k1,k2;k) in normal form these are
// x1^(k1+s*p1) * x2^(k2+(k-s)*p2) for s = 0..k, and a homogeneous polynomial
// is stored as coefficients over that index s.

#include <string>
#include <utility>
#include <vector>

#include "wpl/rational.hpp"
#include "wpl/string_group.hpp"

namespace wpl {

struct Monomial {
    Rational coeff;
    int e1 = 0;
    int e2 = 0;

    LElement degree(const WeightType& base) const;
    std::string str() const;  // "q * x1^a1 * x2^a2"
};

/// Monomial basis of Hom(O(a), O(b)) on the base, coefficient 1 each.
std::vector<Monomial> y_hom_basis(const LElement& a, const LElement& b);

/// Number of monomials of the given degree (c_coeff + 1, or 0).
inline int basis_size(const LElement& degree) {
    return degree.c_coeff() < 0 ? 0 : static_cast<int>(degree.c_coeff()) + 1;
}

class HomPoly {
public:
    HomPoly() = default;
    explicit HomPoly(LElement degree) : degree_(std::move(degree)) {}

    static HomPoly scalar(const WeightType& base, const Rational& q);
    static HomPoly basis_element(const LElement& degree, int s, const Rational& q = 1);
    /// q * x1^e1 * x2^e2.
    static HomPoly monomial(const WeightType& base, int e1, int e2, const Rational& q = 1);

    const LElement& degree() const { return degree_; }
    /// Sorted (index, coefficient) pairs with nonzero coefficients.
    const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Nonzero constant (degree 0).
    bool is_unit() const { return degree_.is_zero() && !terms_.empty(); }
    Rational coeff(int s) const;

    std::pair<int, int> exponents(int s) const;
    std::vector<Monomial> monomials() const;

    friend HomPoly operator+(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator-(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const Rational& q, const HomPoly& a);
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend bool operator==(const HomPoly& a, const HomPoly& b) = default;

    std::string str() const;

private:
    LElement degree_;
    std::vector<std::pair<int, Rational>> terms_;
};

/// Matrix of homogeneous polynomials between sums of line bundles on the base.
/// Entry (i, j) maps source summand j to target summand i.
class MonomialMatrix {
public:
    MonomialMatrix() = default;
    /// Zero map.
    MonomialMatrix(std::vector<LElement> source, std::vector<LElement> target);

    static MonomialMatrix identity(const std::vector<LElement>& degrees);

    const std::vector<LElement>& source() const { return source_; }
    const std::vector<LElement>& target() const { return target_; }
    int rows() const { return static_cast<int>(target_.size()); }
    int cols() const { return static_cast<int>(source_.size()); }

    const HomPoly& at(int i, int j) const { return entries_[index(i, j)]; }
    /// Throws if the polynomial degree is not target_i - source_j.
    void set(int i, int j, HomPoly p);

    /// Same polynomials with every degree moved by eta.
    MonomialMatrix twisted(const LElement& eta) const;

    friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) = default;

    std::string str() const;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * cols() + j); }

    std::vector<LElement> source_;
    std::vector<LElement> target_;
    std::vector<HomPoly> entries_;
};

/// g after f; requires source(g) == target(f).
MonomialMatrix compose(const MonomialMatrix& g, const MonomialMatrix& f);

/// Adds c to every degree.
std::vector<LElement> twist_c(const std::vector<LElement>& degrees);
std::vector<LElement> twist_by(const std::vector<LElement>& degrees, const LElement& eta);

/// Splits off identity summands: repeatedly takes the leftmost-topmost
/// scalar entry, clears its row and column by exact elimination and drops
/// that source/target pair. Returns the reduced matrix and the split count.
std::pair<MonomialMatrix, int> unit_split(const MonomialMatrix& m);

}  // namespace wpl
