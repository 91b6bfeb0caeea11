#include "wpl/catalog.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace wpl {

bool in_cuboid(const LElement& x) {
    if (x.weights().size() != 3 || x.c_coeff() != 0) return false;
    for (int i = 0; i < 3; ++i) {
        if (x.residue(i) > x.weights()[i] - 2) return false;
    }
    return true;
}

Bundle Bundle::line(LElement degree) {
    Bundle b;
    b.kind_ = Kind::line;
    b.x_ = LElement::zero(degree.weights());
    b.y_ = std::move(degree);
    return b;
}

Bundle Bundle::extension(LElement x, LElement y) {
    if (x.weights() != y.weights()) throw std::invalid_argument("extension bundle: weight type mismatch");
    if (!in_cuboid(x)) {
        throw std::invalid_argument("extension bundle parameter " + x.str() + " is outside the cuboid 0 <= x <= delta of " +
                                    x.weights().str());
    }
    Bundle b;
    b.kind_ = Kind::extension;
    b.x_ = std::move(x);
    b.y_ = std::move(y);
    return b;
}

Bundle Bundle::auslander(LElement y) {
    LElement zero = LElement::zero(y.weights());
    return extension(zero, std::move(y));
}

Bundle Bundle::twisted(const LElement& eta) const {
    Bundle b = *this;
    b.y_ += eta;
    return b;
}

std::string Bundle::str() const {
    if (is_line()) return "O(" + y_.str() + ")";
    if (is_auslander()) return "A(" + y_.str() + ")";
    return "E<" + x_.str() + ">(" + y_.str() + ")";
}

BundleSum::BundleSum(WeightType wt, const std::vector<Bundle>& items) : wt_(std::move(wt)) {
    for (const auto& b : items) add(b);
}

void BundleSum::add(const Bundle& b, int multiplicity) {
    if (b.weights() != wt_) throw std::invalid_argument("bundle sum: weight type mismatch");
    if (multiplicity <= 0) return;
    auto it = std::lower_bound(items_.begin(), items_.end(), b,
                               [](const std::pair<Bundle, int>& e, const Bundle& v) { return e.first < v; });
    if (it != items_.end() && it->first == b) {
        it->second += multiplicity;
    } else {
        items_.insert(it, {b, multiplicity});
    }
}

void BundleSum::add(const BundleSum& s) {
    for (const auto& [b, m] : s.items_) add(b, m);
}

std::vector<Bundle> BundleSum::distinct() const {
    std::vector<Bundle> out;
    for (const auto& e : items_) out.push_back(e.first);
    return out;
}

int BundleSum::total_count() const {
    int n = 0;
    for (const auto& e : items_) n += e.second;
    return n;
}

bool BundleSum::contains(const Bundle& b) const {
    return std::any_of(items_.begin(), items_.end(), [&](const auto& e) { return e.first == b; });
}

std::string BundleSum::str() const {
    if (items_.empty()) return "0";
    std::string s;
    for (const auto& [b, m] : items_) {
        if (!s.empty()) s += " + ";
        if (m > 1) s += std::to_string(m) + "*";
        s += b.str();
    }
    return s;
}

BundleSum twist_object(const BundleSum& s, const LElement& eta) {
    BundleSum out(s.weights());
    for (const auto& [b, m] : s.items()) out.add(b.twisted(eta), m);
    return out;
}

bool add_membership(const BundleSum& s, const BundleSum& t) {
    if (s.weights() != t.weights()) throw std::invalid_argument("add_membership: weight type mismatch");
    return std::all_of(s.items().begin(), s.items().end(), [&](const auto& e) { return t.contains(e.first); });
}

PCycle line_to_pcycle(const LElement& y) {
    const WeightType& wt = y.weights();
    if (wt.size() != 3) throw std::invalid_argument("line_to_pcycle needs three weights");
    const WeightType base = wt.base();
    const int p = wt[2];
    const int step = p - y.residue(2) - 1;
    const LElement lo = y.phi();
    const LElement hi = lo + LElement::c(base);
    std::vector<std::vector<LElement>> entries;
    std::vector<MonomialMatrix> maps;
    for (int i = 0; i < p; ++i) entries.push_back({i <= step ? lo : hi});
    for (int i = 0; i < p; ++i) {
        const auto& src = entries[static_cast<std::size_t>(i)];
        if (i == step) {
            maps.push_back(ordinary_point_map(src));
        } else {
            maps.push_back(MonomialMatrix::identity(src));
        }
    }
    return {base, std::move(entries), std::move(maps)};
}

PCycle ext_to_pcycle(const LElement& x, const LElement& y) {
    if (!in_cuboid(x)) throw std::invalid_argument("ext_to_pcycle: parameter outside the cuboid");
    if (x.weights() != y.weights()) throw std::invalid_argument("ext_to_pcycle: weight type mismatch");
    const WeightType& wt = x.weights();
    const WeightType base = wt.base();
    const int p1 = wt[0];
    const int p2 = wt[1];
    const int p = wt[2];
    const int l1 = x.residue(0);
    const int l2 = x.residue(1);
    const int s = p - x.residue(2) - 1;
    auto deg = [&](std::int64_t a1, std::int64_t a2, std::int64_t c) {
        return LElement::normal_form(base, std::vector<std::int64_t>{a1, a2}, c);
    };
    const std::vector<LElement> first{deg(-1, l2, 0), deg(l1, -1, 0)};
    const std::vector<LElement> middle{deg(-1, -1, 1), deg(l1, l2, 0)};
    const std::vector<LElement> last = twist_c(first);

    std::vector<std::vector<LElement>> entries;
    for (int i = 0; i < p; ++i) entries.push_back(i == 0 ? first : (i <= s ? middle : last));

    auto mono = [&](int e1, int e2, int sign) { return HomPoly::monomial(base, e1, e2, Rational(sign)); };
    std::vector<MonomialMatrix> maps;
    for (int i = 0; i < p; ++i) {
        const auto& src = entries[static_cast<std::size_t>(i)];
        if (i == 0) {
            MonomialMatrix m(first, middle);
            m.set(0, 0, mono(0, p2 - l2 - 1, 1));
            m.set(0, 1, mono(p1 - l1 - 1, 0, -1));
            m.set(1, 0, mono(l1 + 1, 0, 1));
            m.set(1, 1, mono(0, l2 + 1, -1));
            maps.push_back(std::move(m));
        } else if (i == s) {
            MonomialMatrix m(middle, last);
            m.set(0, 0, mono(0, l2 + 1, 1));
            m.set(0, 1, mono(p1 - l1 - 1, 0, -1));
            m.set(1, 0, mono(l1 + 1, 0, 1));
            m.set(1, 1, mono(0, p2 - l2 - 1, -1));
            maps.push_back(std::move(m));
        } else {
            maps.push_back(MonomialMatrix::identity(src));
        }
    }
    PCycle c(base, std::move(entries), std::move(maps));
    return shift(twist_pointwise(c, y.phi()), y.residue(2));
}

PCycle to_pcycle(const Bundle& b) {
    return b.is_line() ? line_to_pcycle(b.twist()) : ext_to_pcycle(b.cuboid(), b.twist());
}

PCycle to_pcycle(const BundleSum& s) {
    if (s.items().empty()) throw std::invalid_argument("to_pcycle: empty sum");
    std::optional<PCycle> acc;
    for (const auto& [b, m] : s.items()) {
        for (int i = 0; i < m; ++i) acc = acc ? direct_sum(*acc, to_pcycle(b)) : to_pcycle(b);
    }
    return *acc;
}

PCycle twist_cycle(const PCycle& c, const LElement& eta) {
    if (eta.weights() != WeightType{c.base()[0], c.base()[1], c.period()}) {
        throw std::invalid_argument("twist_cycle: twist does not match the cycle's weight type");
    }
    return shift(twist_pointwise(c, eta.phi()), eta.residue(2));
}

FamilyKind family_kind_from_string(const std::string& name) {
    static const std::vector<std::pair<std::string, FamilyKind>> names{
        {"cuboid", FamilyKind::cuboid},
        {"auslander-T1", FamilyKind::auslander_t1},
        {"auslander-T2", FamilyKind::auslander_t2},
        {"thmB-T1k", FamilyKind::thm_t1k},
        {"thmB-T2k", FamilyKind::thm_t2k},
        {"thmB-T1k-source", FamilyKind::thm_t1k_source},
        {"thmB-T2k-source", FamilyKind::thm_t2k_source},
    };
    for (const auto& [n, k] : names) {
        if (n == name) return k;
    }
    throw std::invalid_argument("unknown family: " + name);
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::cuboid: return "cuboid";
        case FamilyKind::auslander_t1: return "auslander-T1";
        case FamilyKind::auslander_t2: return "auslander-T2";
        case FamilyKind::thm_t1k: return "thmB-T1k";
        case FamilyKind::thm_t2k: return "thmB-T2k";
        case FamilyKind::thm_t1k_source: return "thmB-T1k-source";
        case FamilyKind::thm_t2k_source: return "thmB-T2k-source";
    }
    return "?";
}

namespace {

BundleSum cuboid_family(const WeightType& wt) {
    BundleSum out(wt);
    for (int a = 0; a <= wt[0] - 2; ++a) {
        for (int b = 0; b <= wt[1] - 2; ++b) {
            for (int c = 0; c <= wt[2] - 2; ++c) {
                LElement x = LElement::normal_form(wt, std::vector<std::int64_t>{a, b, c}, 0);
                out.add(Bundle::extension(x, LElement::zero(wt)));
            }
        }
    }
    return out;
}

// Auslander bundles E(i*xbar_k + j*xbar_3 + shift) for i in [i0, i1], j in [0, p2-2].
void add_auslander_grid(BundleSum& out, const WeightType& wt, int k, int i0, int i1, const LElement& offset) {
    for (int i = i0; i <= i1; ++i) {
        for (int j = 0; j <= wt[1] - 2; ++j) {
            out.add(Bundle::auslander(i * LElement::xbar(wt, k) + j * LElement::xbar(wt, 3) + offset));
        }
    }
}

}  // namespace

BundleSum family(FamilyKind kind, const WeightType& wt, int q, int k) {
    if (wt.size() != 3) throw std::invalid_argument("families need three weights");
    for (int i = 0; i < 3; ++i) {
        if (wt[i] < 2) throw std::invalid_argument("families need all weights >= 2");
    }
    if (kind == FamilyKind::cuboid) return cuboid_family(wt);
    if (wt[0] != 2) throw std::invalid_argument(to_string(kind) + " needs weight type (2,p2,p3)");
    const int p3 = wt[2];
    const LElement x3 = LElement::x(wt, 3);
    const LElement c = LElement::c(wt);
    if (kind == FamilyKind::auslander_t1 || kind == FamilyKind::auslander_t2) {
        BundleSum out(wt);
        add_auslander_grid(out, wt, kind == FamilyKind::auslander_t1 ? 2 : 1, 0, p3 - 2, LElement::zero(wt));
        return out;
    }
    if (q < 1 || q > p3 - 2) throw std::invalid_argument("q must satisfy 1 <= q <= p3-2");
    if (k != 1 && k != 2) throw std::invalid_argument("k must be 1 or 2");
    switch (kind) {
        case FamilyKind::thm_t1k: {
            BundleSum out(wt);
            add_auslander_grid(out, wt, k, 0, q - 1, c - x3);
            return out;
        }
        case FamilyKind::thm_t2k: {
            BundleSum out(wt);
            const LElement offset = c - (q + 1) * x3;
            for (int j = 0; j <= wt[1] - 2; ++j) {
                out.add(Bundle::extension(q * x3, j * LElement::xbar(wt, 3) + offset));
            }
            add_auslander_grid(out, wt, k, 1, p3 - q - 2, offset);
            return out;
        }
        case FamilyKind::thm_t1k_source: {
            const WeightType small = wt.with_last(q + 1);
            BundleSum out(small);
            add_auslander_grid(out, small, k, 0, q - 1, q * LElement::x(small, 3));
            return out;
        }
        case FamilyKind::thm_t2k_source: {
            const WeightType small = wt.with_last(p3 - q);
            BundleSum out(small);
            add_auslander_grid(out, small, k, 0, p3 - q - 2, (p3 - q - 1) * LElement::x(small, 3));
            return out;
        }
        default: break;
    }
    throw std::invalid_argument("unhandled family");
}

}  // namespace wpl
