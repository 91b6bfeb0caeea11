#include "wpl/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpl {

void canonicalize(SparseVector& v) {
    std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
    SparseVector out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!out.empty() && out.back().col == e.col) {
            out.back().val += e.val;
        } else {
            out.push_back(e);
        }
    }
    std::erase_if(out, [](const SparseEntry& e) { return e.val.is_zero(); });
    v = std::move(out);
}

SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b) {
    SparseVector out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].col < a[i].col) {
            out.push_back({b[j].col, factor * b[j].val});
            ++j;
        } else {
            Rational s = a[i].val + factor * b[j].val;
            if (!s.is_zero()) out.push_back({a[i].col, s});
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVector SparseEchelon::reduce(SparseVector v) const {
    // Leading columns strictly increase under each step, so this terminates.
    std::size_t pos = 0;
    while (pos < v.size()) {
        int r = pivot_row_[static_cast<std::size_t>(v[pos].col)];
        if (r < 0) {
            ++pos;
            continue;
        }
        Rational f = -v[pos].val;
        SparseVector head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pos));
        SparseVector tail(v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
        tail = axpy(tail, f, rows_[static_cast<std::size_t>(r)]);
        head.insert(head.end(), tail.begin(), tail.end());
        v = std::move(head);
    }
    return v;
}

bool SparseEchelon::add(SparseVector v) {
    for (const auto& e : v) {
        if (e.col < 0 || e.col >= ncols_) throw std::out_of_range("SparseEchelon: column out of range");
    }
    v = reduce(std::move(v));
    if (v.empty()) return false;
    // reduce() clears every pivot column, so the remainder's leading entry is new.
    Rational inv = Rational(1) / v.front().val;
    for (auto& e : v) e.val *= inv;
    pivot_row_[static_cast<std::size_t>(v.front().col)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

bool SparseEchelon::contains(SparseVector v) const { return reduce(std::move(v)).empty(); }

std::vector<SparseVector> SparseEchelon::nullspace() const {
    // Fully reduced rows, processed from the largest pivot column down.
    std::vector<int> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return rows_[static_cast<std::size_t>(a)].front().col > rows_[static_cast<std::size_t>(b)].front().col;
    });
    std::vector<SparseVector> reduced(rows_.size());
    for (int r : order) {
        SparseVector row = rows_[static_cast<std::size_t>(r)];
        std::size_t pos = 1;
        while (pos < row.size()) {
            int pr = pivot_row_[static_cast<std::size_t>(row[pos].col)];
            if (pr < 0) {
                ++pos;
                continue;
            }
            Rational f = -row[pos].val;
            SparseVector head(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(pos));
            SparseVector tail(row.begin() + static_cast<std::ptrdiff_t>(pos), row.end());
            tail = axpy(tail, f, reduced[static_cast<std::size_t>(pr)]);
            head.insert(head.end(), tail.begin(), tail.end());
            row = std::move(head);
        }
        reduced[static_cast<std::size_t>(r)] = std::move(row);
    }

    std::vector<SparseVector> basis;
    for (int f = 0; f < ncols_; ++f) {
        if (pivot_row_[static_cast<std::size_t>(f)] >= 0) continue;
        SparseVector x{{f, Rational(1)}};
        for (const auto& row : reduced) {
            for (const auto& e : row) {
                if (e.col == f) x.push_back({row.front().col, -e.val});
            }
        }
        canonicalize(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace wpl
