#include "wpl/base_line.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wpl {

LElement Monomial::degree(const WeightType& base) const { return LElement::normal_form(base, std::vector<std::int64_t>{e1, e2}, 0); }

std::string Monomial::str() const {
    return coeff.str() + " * x1^" + std::to_string(e1) + " * x2^" + std::to_string(e2);
}

std::vector<Monomial> y_hom_basis(const LElement& a, const LElement& b) {
    LElement d = b - a;
    std::vector<Monomial> out;
    const WeightType& wt = d.weights();
    for (int s = 0; s < basis_size(d); ++s) {
        out.push_back({Rational(1), d.residue(0) + s * wt[0],
                       d.residue(1) + static_cast<int>(d.c_coeff() - s) * wt[1]});
    }
    return out;
}

HomPoly HomPoly::scalar(const WeightType& base, const Rational& q) { return basis_element(LElement::zero(base), 0, q); }

HomPoly HomPoly::basis_element(const LElement& degree, int s, const Rational& q) {
    if (s < 0 || s >= basis_size(degree)) throw std::out_of_range("monomial index out of range for degree");
    HomPoly p(degree);
    if (!q.is_zero()) p.terms_.emplace_back(s, q);
    return p;
}

HomPoly HomPoly::monomial(const WeightType& base, int e1, int e2, const Rational& q) {
    if (e1 < 0 || e2 < 0) throw std::invalid_argument("negative exponent");
    LElement d = LElement::normal_form(base, std::vector<std::int64_t>{e1, e2}, 0);
    return basis_element(d, (e1 - d.residue(0)) / base[0], q);
}

Rational HomPoly::coeff(int s) const {
    for (const auto& [k, q] : terms_) {
        if (k == s) return q;
    }
    return {};
}

std::pair<int, int> HomPoly::exponents(int s) const {
    const WeightType& wt = degree_.weights();
    return {degree_.residue(0) + s * wt[0], degree_.residue(1) + static_cast<int>(degree_.c_coeff() - s) * wt[1]};
}

std::vector<Monomial> HomPoly::monomials() const {
    std::vector<Monomial> out;
    for (const auto& [s, q] : terms_) {
        auto [e1, e2] = exponents(s);
        out.push_back({q, e1, e2});
    }
    return out;
}

namespace {

std::vector<std::pair<int, Rational>> merge(const std::vector<std::pair<int, Rational>>& a, const Rational& fb,
                                            const std::vector<std::pair<int, Rational>>& b) {
    std::vector<std::pair<int, Rational>> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, fb * b[j].second);
            ++j;
        } else {
            Rational s = a[i].second + fb * b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

HomPoly operator+(const HomPoly& a, const HomPoly& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("adding polynomials of different degrees");
    HomPoly r(a.degree_);
    r.terms_ = merge(a.terms_, Rational(1), b.terms_);
    return r;
}

HomPoly operator-(const HomPoly& a, const HomPoly& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("subtracting polynomials of different degrees");
    HomPoly r(a.degree_);
    r.terms_ = merge(a.terms_, Rational(-1), b.terms_);
    return r;
}

HomPoly operator*(const Rational& q, const HomPoly& a) {
    HomPoly r(a.degree_);
    if (q.is_zero()) return r;
    r.terms_ = a.terms_;
    for (auto& t : r.terms_) t.second *= q;
    return r;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    HomPoly r(a.degree_ + b.degree_);
    if (a.is_zero() || b.is_zero()) return r;
    int carry = (a.degree_.residue(0) + b.degree_.residue(0)) / a.degree_.weights()[0];
    std::vector<std::pair<int, Rational>> acc;
    for (const auto& [s, qa] : a.terms_) {
        for (const auto& [t, qb] : b.terms_) acc.emplace_back(carry + s + t, qa * qb);
    }
    std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& t : acc) {
        if (!r.terms_.empty() && r.terms_.back().first == t.first) {
            r.terms_.back().second += t.second;
        } else {
            r.terms_.push_back(t);
        }
    }
    std::erase_if(r.terms_, [](const auto& t) { return t.second.is_zero(); });
    return r;
}

std::string HomPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& m : monomials()) {
        if (!s.empty()) s += " + ";
        s += m.str();
    }
    return s;
}

MonomialMatrix::MonomialMatrix(std::vector<LElement> source, std::vector<LElement> target)
    : source_(std::move(source)), target_(std::move(target)) {
    entries_.reserve(source_.size() * target_.size());
    for (const auto& t : target_) {
        for (const auto& s : source_) entries_.emplace_back(t - s);
    }
}

MonomialMatrix MonomialMatrix::identity(const std::vector<LElement>& degrees) {
    MonomialMatrix m(degrees, degrees);
    for (int i = 0; i < m.rows(); ++i) {
        m.entries_[m.index(i, i)] = HomPoly::scalar(degrees[static_cast<std::size_t>(i)].weights(), 1);
    }
    return m;
}

void MonomialMatrix::set(int i, int j, HomPoly p) {
    if (p.degree() != target_[static_cast<std::size_t>(i)] - source_[static_cast<std::size_t>(j)]) {
        throw std::invalid_argument("entry degree does not match target - source");
    }
    entries_[index(i, j)] = std::move(p);
}

MonomialMatrix MonomialMatrix::twisted(const LElement& eta) const {
    MonomialMatrix m = *this;
    m.source_ = twist_by(source_, eta);
    m.target_ = twist_by(target_, eta);
    return m;
}

std::string MonomialMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows(); ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols(); ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

MonomialMatrix compose(const MonomialMatrix& g, const MonomialMatrix& f) {
    if (g.source() != f.target()) throw std::invalid_argument("compose: degree sequences do not match");
    MonomialMatrix r(f.source(), g.target());
    for (int i = 0; i < g.rows(); ++i) {
        for (int j = 0; j < f.cols(); ++j) {
            HomPoly acc = r.at(i, j);
            for (int k = 0; k < g.cols(); ++k) {
                const HomPoly& a = g.at(i, k);
                const HomPoly& b = f.at(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                acc = acc + a * b;
            }
            r.set(i, j, std::move(acc));
        }
    }
    return r;
}

std::vector<LElement> twist_by(const std::vector<LElement>& degrees, const LElement& eta) {
    std::vector<LElement> out;
    out.reserve(degrees.size());
    for (const auto& d : degrees) out.push_back(d + eta);
    return out;
}

std::vector<LElement> twist_c(const std::vector<LElement>& degrees) {
    if (degrees.empty()) return {};
    return twist_by(degrees, LElement::c(degrees.front().weights()));
}

std::pair<MonomialMatrix, int> unit_split(const MonomialMatrix& m) {
    MonomialMatrix cur = m;
    int splits = 0;
    while (true) {
        int pi = -1;
        int pj = -1;
        for (int j = 0; j < cur.cols() && pi < 0; ++j) {
            for (int i = 0; i < cur.rows(); ++i) {
                if (cur.at(i, j).is_unit()) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi < 0) return {cur, splits};
        Rational inv = Rational(1) / cur.at(pi, pj).coeff(0);
        std::vector<LElement> src;
        std::vector<LElement> tgt;
        for (int j = 0; j < cur.cols(); ++j) {
            if (j != pj) src.push_back(cur.source()[static_cast<std::size_t>(j)]);
        }
        for (int i = 0; i < cur.rows(); ++i) {
            if (i != pi) tgt.push_back(cur.target()[static_cast<std::size_t>(i)]);
        }
        MonomialMatrix next(src, tgt);
        int ni = 0;
        for (int i = 0; i < cur.rows(); ++i) {
            if (i == pi) continue;
            int nj = 0;
            for (int j = 0; j < cur.cols(); ++j) {
                if (j == pj) continue;
                // Schur complement of the unit entry.
                HomPoly v = cur.at(i, j);
                const HomPoly& col = cur.at(i, pj);
                const HomPoly& row = cur.at(pi, j);
                if (!col.is_zero() && !row.is_zero()) v = v - inv * (col * row);
                next.set(ni, nj, std::move(v));
                ++nj;
            }
            ++ni;
        }
        cur = std::move(next);
        ++splits;
    }
}

}  // namespace wpl
