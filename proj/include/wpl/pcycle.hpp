#pragma once

// p-cycles over the two-weight base: E_0 -> E_1 -> ... -> E_{p-1} -> E_0(c),
// whose full rotation is multiplication by x2^p2 - x1^p1 (the ordinary
// point at lambda = 1). Vector bundles on X(p1,p2,p3) are the p3-cycles.

#include <string>
#include <vector>

#include "wpl/base_line.hpp"

namespace wpl {

class PCycle {
public:
    PCycle() = default;
    /// maps[i] : entries[i] -> entries[i+1], the last one into entries[0] + c.
    PCycle(WeightType base, std::vector<std::vector<LElement>> entries, std::vector<MonomialMatrix> maps);

    const WeightType& base() const { return base_; }
    int period() const { return static_cast<int>(entries_.size()); }
    int rank() const { return entries_.empty() ? 0 : static_cast<int>(entries_.front().size()); }
    const std::vector<std::vector<LElement>>& entries() const { return entries_; }
    const std::vector<MonomialMatrix>& maps() const { return maps_; }

    /// E_i for any integer i, using E_{i+p} = E_i(c).
    std::vector<LElement> entry(int i) const;
    /// x_i for any integer i, twisted consistently with entry().
    MonomialMatrix map(int i) const;

    /// Empty string when valid, otherwise the first violated condition.
    std::string validation_error() const;
    bool validate() const { return validation_error().empty(); }

    /// x_{p-1} after ... after x_0, an endomorphism E_0 -> E_0(c).
    MonomialMatrix wrap_product() const;

    friend bool operator==(const PCycle&, const PCycle&) = default;

    /// Aligned text table of entry degrees and maps.
    std::string render() const;

private:
    WeightType base_;
    std::vector<std::vector<LElement>> entries_;
    std::vector<MonomialMatrix> maps_;
};

/// The canonical map x2^p2 - x1^p1 on a sum of line bundles.
MonomialMatrix ordinary_point_map(const std::vector<LElement>& degrees);

/// Rotation by k steps: E'_i = E_{i+k}. shift(C, p) is the twist by c.
PCycle shift(const PCycle& c, int k);
/// Adds eta to every degree; maps keep their polynomials.
PCycle twist_pointwise(const PCycle& c, const LElement& eta);
/// Deletes E_j and composes the maps around it; j in [0, p-1].
PCycle reduce_at(const PCycle& c, int j);
/// Duplicates E_j with an identity map between the copies; j in [0, p-1].
PCycle insert_at(const PCycle& c, int j);
/// Summand-wise direct sum of cycles of equal period.
PCycle direct_sum(const PCycle& a, const PCycle& b);

}  // namespace wpl
