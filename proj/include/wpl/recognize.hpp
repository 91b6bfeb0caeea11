#pragma once

// Identifies a valid p-cycle of rank <= 2 as a catalog object or a sum of
// two line bundles. Candidates are read off the entry degrees; a candidate
// is accepted only if the hom solver exhibits an isomorphism, so nothing is
// guessed. Extension bundles with different parameters can be isomorphic,
// so the result is the full list of parameter sets in the cycle's
// isomorphism class.

#include <string>
#include <vector>

#include "wpl/catalog.hpp"
#include "wpl/hom.hpp"

namespace wpl {

struct Recognition {
    /// Sorted; all of them are isomorphic to the cycle.
    std::vector<BundleSum> matches;
    std::string detail;

    bool recognized() const { return !matches.empty(); }
    bool contains(const BundleSum& s) const;
    /// The smallest parameter set of the class.
    const BundleSum& value() const { return matches.front(); }
};

/// Determinant of a square matrix of homogeneous polynomials.
HomPoly determinant(const MonomialMatrix& m);

/// True when the chain map is invertible at every position.
bool is_isomorphism(const ChainMap& u);

/// Searches Hom(a, b) for an isomorphism using random combinations of the
/// basis (fixed seeds, so results are reproducible).
bool isomorphic(const PCycle& a, const PCycle& b);

/// The weight type (p1,p2,period) a cycle represents bundles on.
WeightType cycle_weights(const PCycle& c);

Recognition recognize(const PCycle& c);

}  // namespace wpl
