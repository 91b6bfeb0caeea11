#pragma once

// Tilting checks in the stable category of vector bundles: rigidity of a
// candidate object, the gluing conditions of a recollement step, replay of
// the cuboid induction, and the Gabriel quiver of the stable endomorphism
// algebra.

#include <string>
#include <vector>

#include "wpl/catalog.hpp"
#include "wpl/functor_calculus.hpp"
#include "wpl/hom.hpp"

namespace wpl {

inline constexpr int default_rigidity_window = 12;

/// WPL_RIGIDITY_WINDOW if set to a positive integer, else the default.
int rigidity_window_from_env();

struct RigidityCell {
    int source = 0;  // summand index
    int target = 0;
    int shift = 0;
    int dimension = 0;
    std::string method;  // "oracle" or "criterion"
};

struct GluingStep {
    std::string description;
    BundleSum computed;
    bool pass = false;
    std::string witness;
};

struct TiltingReport {
    BundleSum object;
    int window = default_rigidity_window;
    int cells_checked = 0;
    int boundary_cells_checked = 0;
    int exact_pairs = 0;             // Auslander pairs settled for all n
    std::vector<RigidityCell> nonzero_cells;
    int summand_count = 0;
    int expected_count = 0;
    std::vector<GluingStep> trace;
    bool pass = false;
    std::string witness;
    std::vector<std::string> notes;
};

/// Stable Hom(T_i, T_j[n]) for all summands and 0 < |n| <= window, plus the
/// exact criterion for pairs of Auslander bundles. Needs p1 = 2.
TiltingReport check_rigidity(const BundleSum& t, int window, StableHomCache* cache = nullptr);

/// j^# i_*(T') = psibar^{J_q + 1} psibar_{J_q^c}(T') must lie in add(T'').
/// T' lives on (p1,p2,q+1), T'' on (p1,p2,p3-q).
GluingStep check_add_condition(const BundleSum& t_prime, const BundleSum& t_second, int q, int p3);

struct Assembly {
    BundleSum object;
    std::vector<GluingStep> trace;
    bool pass = false;
    std::string witness;
};

/// T = psibar_{J_q^c}(T') + psibar_{J_q}(T'') on (p1,p2,p3). The gluing
/// condition is checked by add-membership, falling back to vanishing of
/// stable Hom(T'', j^# i_*(T')[n]) for 0 < |n| <= window.
Assembly assemble_recollement(const BundleSum& t_prime, const BundleSum& t_second, int q, int p3, int window,
                              StableHomCache* cache = nullptr);

/// Three-stage replay of the cuboid induction ending at `wt`.
struct CuboidTrace {
    std::vector<GluingStep> steps;
    BundleSum result;
    bool pass = false;
    std::string failed_step;
};

CuboidTrace verify_cuboid_induction(const WeightType& wt);

struct QuiverArrow {
    int source = 0;
    int target = 0;
    int multiplicity = 0;
};

struct Quiver {
    std::vector<Bundle> vertices;
    std::vector<int> vertex_multiplicity;
    std::vector<QuiverArrow> arrows;
    /// stable_dims[i][j] = dim stable Hom(T_i, T_j).
    std::vector<std::vector<int>> stable_dims;

    int arrow_count() const;
    std::string dot() const;
};

/// Arrows i -> j counted as dim rad(T_i,T_j) - dim rad^2(T_i,T_j) in the
/// stable category. Throws if some summand has stable End of dimension != 1.
Quiver endomorphism_quiver(const BundleSum& t);

}  // namespace wpl
