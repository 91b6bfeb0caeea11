#pragma once

// Sparse exact elimination. Rows are sorted (column, value) lists; the
// echelon keeps one row per pivot column with a unit leading coefficient.

#include <cstddef>
#include <utility>
#include <vector>

#include "wpl/rational.hpp"

namespace wpl {

struct SparseEntry {
    int col;
    Rational val;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

using SparseVector = std::vector<SparseEntry>;

/// Sorts by column, merges duplicates and drops zeros.
void canonicalize(SparseVector& v);

/// a + factor * b for sorted vectors.
SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b);

class SparseEchelon {
public:
    explicit SparseEchelon(int ncols) : ncols_(ncols), pivot_row_(static_cast<std::size_t>(ncols), -1) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduces `v` against the current pivots and keeps the remainder if it
    /// is nonzero. Returns true when the rank grew.
    bool add(SparseVector v);

    /// True when `v` lies in the current row span.
    bool contains(SparseVector v) const;

    /// Basis of {x : row . x = 0 for every stored row}, one vector per free
    /// column, with a 1 in that column.
    std::vector<SparseVector> nullspace() const;

private:
    SparseVector reduce(SparseVector v) const;

    int ncols_;
    std::vector<SparseVector> rows_;
    std::vector<int> pivot_row_;
};

}  // namespace wpl
