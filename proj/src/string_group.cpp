#include "wpl/string_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpl {

namespace {

using Raw = std::array<std::int64_t, 3>;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

WeightType::WeightType(std::initializer_list<int> weights) : WeightType(std::vector<int>(weights)) {}

WeightType::WeightType(const std::vector<int>& weights) {
    if (weights.empty() || weights.size() > 3) throw std::invalid_argument("weight type must have 1 to 3 weights");
    t_ = static_cast<int>(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 1) throw std::invalid_argument("weights must be >= 1");
        p_[i] = weights[i];
    }
}

WeightType WeightType::with_last(int p) const {
    std::vector<int> w(p_.begin(), p_.begin() + t_);
    w.back() = p;
    return WeightType(w);
}

WeightType WeightType::base() const {
    if (t_ != 3) throw std::invalid_argument("base() needs three weights");
    return WeightType{p_[0], p_[1]};
}

std::string WeightType::str() const {
    std::string s = "(";
    for (int i = 0; i < t_; ++i) {
        if (i) s += ",";
        s += std::to_string(p_[static_cast<std::size_t>(i)]);
    }
    return s + ")";
}

LElement LElement::normal_form(const WeightType& wt, const std::array<std::int64_t, 3>& raw, std::int64_t c_coeff) {
    LElement e;
    e.wt_ = wt;
    e.c_ = c_coeff;
    for (int i = 0; i < 3; ++i) {
        auto k = static_cast<std::size_t>(i);
        if (i >= wt.size()) {
            if (raw[k] != 0) throw std::invalid_argument("too many coefficients for weight type");
            continue;
        }
        std::int64_t p = wt[i];
        std::int64_t q = floor_div(raw[k], p);
        e.l_[k] = static_cast<int>(raw[k] - q * p);
        e.c_ += q;
    }
    return e;
}

LElement LElement::normal_form(const WeightType& wt, const std::vector<std::int64_t>& raw, std::int64_t c_coeff) {
    if (static_cast<int>(raw.size()) > wt.size()) throw std::invalid_argument("too many coefficients for weight type");
    std::array<std::int64_t, 3> a{0, 0, 0};
    std::copy(raw.begin(), raw.end(), a.begin());
    return normal_form(wt, a, c_coeff);
}

LElement LElement::zero(const WeightType& wt) { return normal_form(wt, Raw{0, 0, 0}, 0); }

LElement LElement::x(const WeightType& wt, int i) {
    if (i < 1 || i > wt.size()) throw std::out_of_range("generator index out of range");
    std::vector<std::int64_t> raw(static_cast<std::size_t>(wt.size()), 0);
    raw[static_cast<std::size_t>(i - 1)] = 1;
    return normal_form(wt, raw, 0);
}

LElement LElement::c(const WeightType& wt) { return normal_form(wt, Raw{0, 0, 0}, 1); }

LElement LElement::omega(const WeightType& wt) {
    std::vector<std::int64_t> raw(static_cast<std::size_t>(wt.size()), -1);
    return normal_form(wt, raw, wt.size() - 2);
}

LElement LElement::delta(const WeightType& wt) {
    if (wt.size() != 3) throw std::invalid_argument("delta needs three weights");
    return normal_form(wt, Raw{wt[0] - 2, wt[1] - 2, wt[2] - 2}, 0);
}

LElement LElement::xbar(const WeightType& wt, int i) { return x(wt, i) + omega(wt); }

void LElement::check_same(const LElement& o) const {
    if (wt_ != o.wt_) throw std::invalid_argument("weight type mismatch: " + wt_.str() + " vs " + o.wt_.str());
}

LElement LElement::operator-() const { return normal_form(wt_, Raw{-l_[0], -l_[1], -l_[2]}, -c_); }

LElement operator+(const LElement& a, const LElement& b) {
    a.check_same(b);
    return LElement::normal_form(a.wt_, Raw{a.l_[0] + b.l_[0], a.l_[1] + b.l_[1], a.l_[2] + b.l_[2]}, a.c_ + b.c_);
}

LElement operator*(std::int64_t n, const LElement& a) {
    return LElement::normal_form(a.wt_, Raw{n * a.l_[0], n * a.l_[1], n * a.l_[2]}, n * a.c_);
}

bool LElement::is_zero() const { return c_ == 0 && std::all_of(l_.begin(), l_.end(), [](int v) { return v == 0; }); }

LElement LElement::phi() const {
    if (wt_.size() != 3) throw std::invalid_argument("phi needs three weights");
    return normal_form(wt_.base(), Raw{l_[0], l_[1], 0}, c_);
}

LElement LElement::reweight(const WeightType& target) const {
    std::vector<std::int64_t> raw;
    for (int i = 0; i < wt_.size(); ++i) raw.push_back(l_[static_cast<std::size_t>(i)]);
    if (target.size() < wt_.size()) {
        for (int i = target.size(); i < wt_.size(); ++i) {
            if (raw[static_cast<std::size_t>(i)] != 0) throw std::invalid_argument("cannot drop a nonzero coefficient");
        }
        raw.resize(static_cast<std::size_t>(target.size()));
    }
    return normal_form(target, raw, c_);
}

std::string LElement::str() const {
    std::string s;
    auto term = [&s](std::int64_t k, const std::string& atom) {
        if (k == 0) return;
        if (s.empty()) {
            if (k < 0) s += "-";
        } else {
            s += k < 0 ? " - " : " + ";
        }
        const std::int64_t a = k < 0 ? -k : k;
        if (a != 1) s += std::to_string(a) + "*";
        s += atom;
    };
    for (int i = 0; i < wt_.size(); ++i) term(l_[static_cast<std::size_t>(i)], "x" + std::to_string(i + 1));
    term(c_, "c");
    return s.empty() ? "0" : s;
}

std::vector<LElement> enumerate_interval(const LElement& a, const LElement& b) {
    std::vector<LElement> out;
    LElement d = b - a;
    if (!d.is_effective()) return out;
    const WeightType& wt = a.weights();
    std::vector<std::int64_t> raw(static_cast<std::size_t>(wt.size()), 0);
    // Every offset e = xi - a with 0 <= e <= d has c_coeff in [0, c_coeff(d)].
    for (std::int64_t l = 0; l <= d.c_coeff(); ++l) {
        std::vector<int> res(static_cast<std::size_t>(wt.size()), 0);
        while (true) {
            for (std::size_t i = 0; i < res.size(); ++i) raw[i] = res[i];
            LElement e = LElement::normal_form(wt, raw, l);
            if ((d - e).is_effective()) out.push_back(a + e);
            std::size_t k = 0;
            while (k < res.size() && ++res[k] == wt[static_cast<int>(k)]) res[k++] = 0;
            if (k == res.size()) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wpl
