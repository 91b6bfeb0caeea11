#pragma once

// The string group L(p1,...,pt) for t <= 3: generators x1..xt and c with
// p_i * x_i = c. Elements are kept in normal form sum l_i x_i + l c with
// 0 <= l_i < p_i.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace wpl {

class WeightType {
public:
    WeightType() = default;
    WeightType(std::initializer_list<int> weights);
    explicit WeightType(const std::vector<int>& weights);

    int size() const { return t_; }
    int operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }
    int last() const { return p_[static_cast<std::size_t>(t_ - 1)]; }

    /// Same weights with the last one replaced.
    WeightType with_last(int p) const;
    /// The first two weights, i.e. the base of a three-weight line.
    WeightType base() const;

    std::string str() const;

    friend auto operator<=>(const WeightType&, const WeightType&) = default;

private:
    int t_ = 0;
    std::array<int, 3> p_{1, 1, 1};
};

class LElement {
public:
    LElement() = default;

    /// Normal form of sum raw[i] x_{i+1} + c_coeff c.
    static LElement normal_form(const WeightType& wt, const std::vector<std::int64_t>& raw, std::int64_t c_coeff);
    static LElement normal_form(const WeightType& wt, const std::array<std::int64_t, 3>& raw, std::int64_t c_coeff);
    static LElement zero(const WeightType& wt);
    static LElement x(const WeightType& wt, int i);  // 1-based generator
    static LElement c(const WeightType& wt);
    static LElement omega(const WeightType& wt);
    static LElement delta(const WeightType& wt);
    static LElement xbar(const WeightType& wt, int i);  // x_i + omega

    const WeightType& weights() const { return wt_; }
    int residue(int i) const { return l_[static_cast<std::size_t>(i)]; }  // 0-based
    std::int64_t c_coeff() const { return c_; }

    LElement operator-() const;
    friend LElement operator+(const LElement& a, const LElement& b);
    friend LElement operator-(const LElement& a, const LElement& b) { return a + (-b); }
    friend LElement operator*(std::int64_t n, const LElement& a);
    LElement& operator+=(const LElement& o) { return *this = *this + o; }
    LElement& operator-=(const LElement& o) { return *this = *this - o; }

    /// Lexicographic order on (weights, residues, c); only for containers.
    friend auto operator<=>(const LElement&, const LElement&) = default;

    bool is_zero() const;
    /// True iff the element is a nonnegative combination of generators.
    bool is_effective() const { return c_ >= 0; }

    /// Drops the x3 term: the projection to the two-weight base.
    LElement phi() const;
    /// Reads the same coefficients in another weight type and renormalizes.
    LElement reweight(const WeightType& target) const;

    std::string str() const;

private:
    void check_same(const LElement& o) const;

    WeightType wt_;
    std::array<int, 3> l_{0, 0, 0};
    std::int64_t c_ = 0;
};

/// a <= b in the effectivity order.
inline bool leq(const LElement& a, const LElement& b) { return (b - a).is_effective(); }

/// All xi with a <= xi <= b, in ascending lexicographic order.
std::vector<LElement> enumerate_interval(const LElement& a, const LElement& b);

}  // namespace wpl
