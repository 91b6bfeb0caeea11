#pragma once

// Catalog objects on X(p1,p2,p3): line bundles O(y), extension bundles
// E<x>(y) with x in the cuboid 0 <= x <= delta, and formal direct sums.
// Objects are identified by their parameters.

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "wpl/pcycle.hpp"
#include "wpl/string_group.hpp"

namespace wpl {

class Bundle {
public:
    enum class Kind { line, extension };

    static Bundle line(LElement degree);
    /// Throws std::invalid_argument when x is outside the cuboid.
    static Bundle extension(LElement x, LElement y);
    static Bundle auslander(LElement y);

    Kind kind() const { return kind_; }
    bool is_line() const { return kind_ == Kind::line; }
    bool is_auslander() const { return kind_ == Kind::extension && x_.is_zero(); }
    int rank() const { return is_line() ? 1 : 2; }
    const WeightType& weights() const { return y_.weights(); }

    /// Degree of a line bundle, twist parameter of an extension bundle.
    const LElement& twist() const { return y_; }
    /// Cuboid parameter; zero for line bundles.
    const LElement& cuboid() const { return x_; }

    Bundle twisted(const LElement& eta) const;

    /// "O(...)", "A(...)" for Auslander bundles, "E<...>(...)" otherwise.
    std::string str() const;

    friend auto operator<=>(const Bundle&, const Bundle&) = default;

private:
    Kind kind_ = Kind::line;
    LElement x_;
    LElement y_;
};

bool in_cuboid(const LElement& x);

class BundleSum {
public:
    BundleSum() = default;
    explicit BundleSum(WeightType wt) : wt_(std::move(wt)) {}
    BundleSum(WeightType wt, const std::vector<Bundle>& items);

    const WeightType& weights() const { return wt_; }
    void add(const Bundle& b, int multiplicity = 1);
    void add(const BundleSum& s);

    /// Distinct items with multiplicities, sorted.
    const std::vector<std::pair<Bundle, int>>& items() const { return items_; }
    std::vector<Bundle> distinct() const;
    int distinct_count() const { return static_cast<int>(items_.size()); }
    int total_count() const;
    bool contains(const Bundle& b) const;

    friend bool operator==(const BundleSum&, const BundleSum&) = default;

    /// Items joined by " + ", with "k*" prefixes for multiplicities.
    std::string str() const;

private:
    WeightType wt_;
    std::vector<std::pair<Bundle, int>> items_;
};

BundleSum twist_object(const BundleSum& s, const LElement& eta);
inline BundleSum tau(const BundleSum& s) { return twist_object(s, LElement::omega(s.weights())); }

/// Every item of s occurs in t (multiplicities ignored).
bool add_membership(const BundleSum& s, const BundleSum& t);

PCycle line_to_pcycle(const LElement& y);
PCycle ext_to_pcycle(const LElement& x, const LElement& y);
PCycle to_pcycle(const Bundle& b);
/// Direct sum of the items' cycles, with multiplicity.
PCycle to_pcycle(const BundleSum& s);

/// The cycle of X(eta) for X on X(p1,p2,p): pointwise twist by the base part
/// of eta, then the shift by its x3 coefficient.
PCycle twist_cycle(const PCycle& c, const LElement& eta);

enum class FamilyKind {
    cuboid,
    auslander_t1,
    auslander_t2,
    thm_t1k,
    thm_t2k,
    thm_t1k_source,  // the object on (2,p2,q+1) inserted into thm_t1k
    thm_t2k_source,  // the object on (2,p2,p3-q) inserted into thm_t2k
};

FamilyKind family_kind_from_string(const std::string& name);
std::string to_string(FamilyKind kind);

/// Summands of the named family on the target weight type `wt`. For the
/// *_source kinds `wt` is still the target (2,p2,p3); the result lives on the
/// smaller weight type.
BundleSum family(FamilyKind kind, const WeightType& wt, int q = 1, int k = 1);

}  // namespace wpl
