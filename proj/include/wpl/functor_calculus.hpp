#pragma once

// Reduction psi^j : X(p1,p2,p3) -> X(p1,p2,p3-1) and insertion
// psi_j : X(p1,p2,p3) -> X(p1,p2,p3+1) on catalog objects, in closed form
// and on cycles, for every integer j. Indices outside one period follow
// psi^{n*p + j} = shift^{-n} psi^j and psi_{n*p + j} = shift^{n} psi_j, with
// p the source period and the shift taken on the target.

#include <string>
#include <vector>

#include "wpl/catalog.hpp"
#include "wpl/recognize.hpp"

namespace wpl {

enum class Direction { reduce, insert };

std::string to_string(Direction d);

/// Target weight type of one step.
WeightType step_target(const WeightType& wt, Direction d);

BundleSum reduce_closed(const Bundle& b, int j);
BundleSum insert_closed(const Bundle& b, int j);
BundleSum apply_closed(const Bundle& b, int j, Direction d);
/// Summand by summand.
BundleSum apply_closed(const BundleSum& s, int j, Direction d);

/// Composite over an index sequence j_1 < ... < j_q. Reduction applies
/// j_q first (psi^{j_1} ... psi^{j_q}); insertion applies j_1 first
/// (psi_{j_q} ... psi_{j_1}).
BundleSum apply_sequence(const BundleSum& s, const std::vector<int>& indices, Direction d);

/// (1, ..., q).
std::vector<int> leading_indices(int q);
/// (q+1, ..., p-1).
std::vector<int> complement_indices(int q, int p);
/// Every index plus one.
std::vector<int> shifted_up(const std::vector<int>& indices);

/// Chain-level functor at an arbitrary integer index.
PCycle engine_apply(const PCycle& c, int j, Direction d);

struct Crosscheck {
    bool agree = false;
    BundleSum formula;
    Recognition engine;
    std::string detail;
};

/// Closed form against recognition of the chain-level result.
Crosscheck crosscheck(const Bundle& b, int j, Direction d);

}  // namespace wpl
