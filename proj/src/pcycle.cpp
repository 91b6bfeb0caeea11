#include "wpl/pcycle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wpl {

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }

}  // namespace

PCycle::PCycle(WeightType base, std::vector<std::vector<LElement>> entries, std::vector<MonomialMatrix> maps)
    : base_(std::move(base)), entries_(std::move(entries)), maps_(std::move(maps)) {
    if (entries_.empty()) throw std::invalid_argument("a cycle needs period >= 1");
    if (entries_.size() != maps_.size()) throw std::invalid_argument("a cycle needs one map per entry");
}

std::vector<LElement> PCycle::entry(int i) const {
    int n = floor_div(i, period());
    const auto& e = entries_[static_cast<std::size_t>(i - n * period())];
    return n == 0 ? e : twist_by(e, n * LElement::c(base_));
}

MonomialMatrix PCycle::map(int i) const {
    int n = floor_div(i, period());
    const auto& m = maps_[static_cast<std::size_t>(i - n * period())];
    return n == 0 ? m : m.twisted(n * LElement::c(base_));
}

MonomialMatrix ordinary_point_map(const std::vector<LElement>& degrees) {
    MonomialMatrix m(degrees, twist_c(degrees));
    for (int i = 0; i < m.rows(); ++i) {
        const WeightType& wt = degrees[static_cast<std::size_t>(i)].weights();
        m.set(i, i, HomPoly::monomial(wt, 0, wt[1]) - HomPoly::monomial(wt, wt[0], 0));
    }
    return m;
}

MonomialMatrix PCycle::wrap_product() const {
    MonomialMatrix acc = maps_.front();
    for (std::size_t i = 1; i < maps_.size(); ++i) acc = compose(maps_[i], acc);
    return acc;
}

std::string PCycle::validation_error() const {
    const int p = period();
    for (int i = 0; i < p; ++i) {
        const auto& m = maps_[static_cast<std::size_t>(i)];
        if (m.source() != entries_[static_cast<std::size_t>(i)]) {
            return "map " + std::to_string(i) + " has the wrong source";
        }
        if (m.target() != entry(i + 1)) return "map " + std::to_string(i) + " has the wrong target";
        for (const auto& d : entries_[static_cast<std::size_t>(i)]) {
            if (d.weights() != base_) return "entry " + std::to_string(i) + " has the wrong weight type";
        }
    }
    if (wrap_product() != ordinary_point_map(entries_.front())) {
        return "full rotation is not x2^p2 - x1^p1 times the identity";
    }
    return {};
}

std::string PCycle::render() const {
    std::ostringstream os;
    std::size_t width = 0;
    std::vector<std::string> cells;
    for (const auto& e : entries_) {
        std::string s;
        for (const auto& d : e) s += (s.empty() ? "O(" : " + O(") + d.str() + ")";
        width = std::max(width, s.size());
        cells.push_back(s);
    }
    for (int i = 0; i < period(); ++i) {
        std::string label = "E" + std::to_string(i);
        os << label << std::string(4 - std::min<std::size_t>(3, label.size()), ' ') << cells[static_cast<std::size_t>(i)]
           << std::string(width - cells[static_cast<std::size_t>(i)].size() + 2, ' ') << "x" << i << " = "
           << maps_[static_cast<std::size_t>(i)].str() << "\n";
    }
    return os.str();
}

PCycle shift(const PCycle& c, int k) {
    std::vector<std::vector<LElement>> entries;
    std::vector<MonomialMatrix> maps;
    for (int i = 0; i < c.period(); ++i) {
        entries.push_back(c.entry(i + k));
        maps.push_back(c.map(i + k));
    }
    return {c.base(), std::move(entries), std::move(maps)};
}

PCycle twist_pointwise(const PCycle& c, const LElement& eta) {
    std::vector<std::vector<LElement>> entries;
    std::vector<MonomialMatrix> maps;
    for (int i = 0; i < c.period(); ++i) {
        entries.push_back(twist_by(c.entries()[static_cast<std::size_t>(i)], eta));
        maps.push_back(c.maps()[static_cast<std::size_t>(i)].twisted(eta));
    }
    return {c.base(), std::move(entries), std::move(maps)};
}

PCycle reduce_at(const PCycle& c, int j) {
    const int p = c.period();
    if (p < 2) throw std::invalid_argument("reduce_at needs period >= 2");
    if (j < 0 || j >= p) throw std::out_of_range("reduce_at index outside [0, p-1]");
    std::vector<std::vector<LElement>> entries;
    std::vector<MonomialMatrix> maps;
    if (j == 0) {
        for (int i = 1; i < p; ++i) entries.push_back(c.entry(i));
        for (int i = 1; i < p - 1; ++i) maps.push_back(c.map(i));
        maps.push_back(compose(c.map(p), c.map(p - 1)));
    } else {
        for (int i = 0; i < p; ++i) {
            if (i == j) continue;
            entries.push_back(c.entry(i));
            if (i == j - 1) {
                maps.push_back(compose(c.map(j), c.map(j - 1)));
            } else {
                maps.push_back(c.map(i));
            }
        }
    }
    return {c.base(), std::move(entries), std::move(maps)};
}

PCycle insert_at(const PCycle& c, int j) {
    const int p = c.period();
    if (j < 0 || j >= p) throw std::out_of_range("insert_at index outside [0, p-1]");
    std::vector<std::vector<LElement>> entries;
    std::vector<MonomialMatrix> maps;
    for (int i = 0; i < p; ++i) {
        entries.push_back(c.entry(i));
        if (i == j) {
            maps.push_back(MonomialMatrix::identity(c.entry(i)));
            entries.push_back(c.entry(i));
        }
        maps.push_back(c.map(i));
    }
    return {c.base(), std::move(entries), std::move(maps)};
}

PCycle direct_sum(const PCycle& a, const PCycle& b) {
    if (a.period() != b.period() || a.base() != b.base()) throw std::invalid_argument("direct_sum: cycles differ in shape");
    std::vector<std::vector<LElement>> entries;
    std::vector<MonomialMatrix> maps;
    for (int i = 0; i < a.period(); ++i) {
        auto e = a.entry(i);
        auto eb = b.entry(i);
        e.insert(e.end(), eb.begin(), eb.end());
        entries.push_back(e);
    }
    for (int i = 0; i < a.period(); ++i) {
        auto tgt = i + 1 < a.period() ? entries[static_cast<std::size_t>(i + 1)] : twist_c(entries.front());
        MonomialMatrix m(entries[static_cast<std::size_t>(i)], tgt);
        const auto ma = a.map(i);
        const auto mb = b.map(i);
        for (int r = 0; r < ma.rows(); ++r) {
            for (int s = 0; s < ma.cols(); ++s) m.set(r, s, ma.at(r, s));
        }
        for (int r = 0; r < mb.rows(); ++r) {
            for (int s = 0; s < mb.cols(); ++s) m.set(ma.rows() + r, ma.cols() + s, mb.at(r, s));
        }
        maps.push_back(std::move(m));
    }
    return {a.base(), std::move(entries), std::move(maps)};
}

}  // namespace wpl
