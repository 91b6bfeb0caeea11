#include "wpl/functor_calculus.hpp"

#include <stdexcept>

namespace wpl {

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }

// Catalog objects on the target keep their coefficients, renormalized.
struct Moved {
    WeightType target;
    LElement x;    // cuboid parameter, reweighted
    LElement y;    // twist, reweighted
    LElement x3;   // generator x3 of the target
};

Moved move_params(const Bundle& b, const WeightType& target) {
    return {target, b.cuboid().reweight(target), b.twist().reweight(target), LElement::x(target, 3)};
}

BundleSum single(const Bundle& b) { return BundleSum(b.weights(), {b}); }

}  // namespace

std::string to_string(Direction d) { return d == Direction::reduce ? "reduce" : "insert"; }

WeightType step_target(const WeightType& wt, Direction d) {
    if (wt.size() != 3) throw std::invalid_argument("functors need three weights");
    if (d == Direction::reduce) {
        if (wt[2] < 2) throw std::invalid_argument("reduction needs p3 >= 2");
        return wt.with_last(wt[2] - 1);
    }
    return wt.with_last(wt[2] + 1);
}

BundleSum reduce_closed(const Bundle& b, int j) {
    const WeightType& wt = b.weights();
    const WeightType target = step_target(wt, Direction::reduce);
    const int p = wt[2];
    const int k3 = b.twist().residue(2);
    const Moved m = move_params(b, target);
    const LElement c = LElement::c(target);
    const LElement x1 = LElement::x(target, 1);
    const LElement x2 = LElement::x(target, 2);

    if (b.is_line()) {
        const int n = floor_div(j, p);
        const int r = j - n * p;
        const LElement twist = -n * m.x3;
        return single(Bundle::line(r < p - k3 ? m.y + twist : m.y - m.x3 + twist));
    }

    // Window (-k3, p - k3].
    const int n = floor_div(j + k3 - 1, p);
    const int r = j - n * p;
    const int l3 = b.cuboid().residue(2);
    const LElement twist = -n * m.x3;
    const LElement y = m.y + twist;
    if (l3 == 0 && r == p - k3) {
        return BundleSum(target, {Bundle::line(c - x1 - x2 - m.x3 + y), Bundle::line(m.x + y - m.x3)});
    }
    if (l3 == p - 2 && r == 1 - k3) {
        const int l1 = b.cuboid().residue(0);
        const int l2 = b.cuboid().residue(1);
        return BundleSum(target, {Bundle::line(c - x1 + l2 * x2 - m.x3 + y), Bundle::line(c + l1 * x1 - x2 - m.x3 + y)});
    }
    if (r < p - l3 - k3) return single(Bundle::extension(m.x, y));
    return single(Bundle::extension(m.x - m.x3, y));
}

BundleSum insert_closed(const Bundle& b, int j) {
    const WeightType& wt = b.weights();
    const WeightType target = step_target(wt, Direction::insert);
    const int p = wt[2];
    const int k3 = b.twist().residue(2);
    const Moved m = move_params(b, target);

    if (b.is_line()) {
        const int n = floor_div(j, p);
        const int r = j - n * p;
        const LElement twist = n * m.x3;
        return single(Bundle::line(r < p - k3 ? m.y + twist : m.y + m.x3 + twist));
    }
    const int n = floor_div(j + k3 - 1, p);
    const int r = j - n * p;
    const int l3 = b.cuboid().residue(2);
    const LElement y = m.y + n * m.x3;
    if (r < p - l3 - k3) return single(Bundle::extension(m.x, y));
    return single(Bundle::extension(m.x + m.x3, y));
}

BundleSum apply_closed(const Bundle& b, int j, Direction d) {
    return d == Direction::reduce ? reduce_closed(b, j) : insert_closed(b, j);
}

BundleSum apply_closed(const BundleSum& s, int j, Direction d) {
    BundleSum out(step_target(s.weights(), d));
    for (const auto& [b, mult] : s.items()) {
        const BundleSum part = apply_closed(b, j, d);
        for (const auto& [pb, pm] : part.items()) out.add(pb, pm * mult);
    }
    return out;
}

BundleSum apply_sequence(const BundleSum& s, const std::vector<int>& indices, Direction d) {
    for (std::size_t i = 1; i < indices.size(); ++i) {
        if (indices[i] <= indices[i - 1]) throw std::invalid_argument("index sequence must be strictly increasing");
    }
    BundleSum cur = s;
    if (d == Direction::reduce) {
        for (auto it = indices.rbegin(); it != indices.rend(); ++it) cur = apply_closed(cur, *it, d);
    } else {
        for (int j : indices) cur = apply_closed(cur, j, d);
    }
    return cur;
}

std::vector<int> leading_indices(int q) {
    std::vector<int> out;
    for (int i = 1; i <= q; ++i) out.push_back(i);
    return out;
}

std::vector<int> complement_indices(int q, int p) {
    std::vector<int> out;
    for (int i = q + 1; i <= p - 1; ++i) out.push_back(i);
    return out;
}

std::vector<int> shifted_up(const std::vector<int>& indices) {
    std::vector<int> out;
    for (int j : indices) out.push_back(j + 1);
    return out;
}

PCycle engine_apply(const PCycle& c, int j, Direction d) {
    const int p = c.period();
    const int n = floor_div(j, p);
    const int r = j - n * p;
    if (d == Direction::reduce) return shift(reduce_at(c, r), -n);
    return shift(insert_at(c, r), n);
}

Crosscheck crosscheck(const Bundle& b, int j, Direction d) {
    Crosscheck out;
    out.formula = apply_closed(b, j, d);
    out.engine = recognize(engine_apply(to_pcycle(b), j, d));
    if (!out.engine.recognized()) {
        out.detail = "engine result not recognized: " + out.engine.detail;
        return out;
    }
    out.agree = out.engine.contains(out.formula);
    if (!out.agree) out.detail = "formula " + out.formula.str() + " but engine " + out.engine.value().str();
    return out;
}

}  // namespace wpl
