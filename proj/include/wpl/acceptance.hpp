#pragma once

// The reproduction suite: ten criteria, each a self-contained check with a
// pass/fail verdict and a one-line detail. Shared by the acceptance test
// binary and `wpl verify-paper`.

#include <string>
#include <vector>

#include "wpl/string_group.hpp"
#include "wpl/tilting.hpp"

namespace wpl {

struct AcceptanceOptions {
    /// Empty: each criterion uses its default weight types. Otherwise every
    /// criterion runs on these (criteria that do not apply are skipped).
    std::vector<WeightType> weights;
    /// Test hook: perturbs the closed-form reduction of line bundles inside
    /// the formula-vs-engine criterion, which must then fail.
    bool corrupt_formula = false;
    int window = default_rigidity_window;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
    double ms = 0;
};

inline constexpr int criterion_count = 10;

CriterionResult run_criterion(int id, const AcceptanceOptions& options);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

}  // namespace wpl
