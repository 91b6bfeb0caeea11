#include "wpl/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace wpl {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), message_(message), position_(position) {}

namespace {

constexpr std::int64_t max_literal = 1000000000;

class Cursor {
public:
    explicit Cursor(const std::string& text) : s_(text) {}

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip();
        return pos_ >= s_.size();
    }
    bool accept(const std::string& token) {
        skip();
        if (s_.compare(pos_, token.size(), token) != 0) return false;
        pos_ += token.size();
        return true;
    }
    void expect(const std::string& token) {
        if (!accept(token)) fail("expected '" + token + "'");
    }
    bool peek_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    std::int64_t integer() {
        skip();
        std::int64_t v = 0;
        const char* first = s_.data() + pos_;
        const auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), v);
        if (ec != std::errc() || ptr == first) fail("expected an integer");
        if (v > max_literal) fail("integer too large");
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }
    // Longest identifier made of letters and digits.
    std::string word() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }
    std::size_t pos() const { return pos_; }
    void reset(std::size_t p) { pos_ = p; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

std::optional<LElement> atom(const std::string& name, const WeightType& wt) {
    if (name == "x1") return LElement::x(wt, 1);
    if (name == "x2") return LElement::x(wt, 2);
    if (name == "x3") return LElement::x(wt, 3);
    if (name == "c") return LElement::c(wt);
    if (name == "w") return LElement::omega(wt);
    if (name == "xb1") return LElement::xbar(wt, 1);
    if (name == "xb2") return LElement::xbar(wt, 2);
    if (name == "xb3") return LElement::xbar(wt, 3);
    if (name == "d") return LElement::delta(wt);
    return std::nullopt;
}

LElement term(Cursor& in, const WeightType& wt) {
    if (in.peek_digit()) {
        const std::int64_t k = in.integer();
        if (!in.accept("*")) return k * LElement::c(wt);
        const std::size_t at = in.pos();
        const auto a = atom(in.word(), wt);
        if (!a) {
            in.reset(at);
            in.fail("expected x1, x2, x3, c, w, xb1, xb2, xb3 or d");
        }
        return k * *a;
    }
    const std::size_t at = in.pos();
    const auto a = atom(in.word(), wt);
    if (!a) {
        in.reset(at);
        in.fail("expected a term");
    }
    return *a;
}

LElement lelement(Cursor& in, const WeightType& wt) {
    const bool negate = in.accept("-");
    LElement v = term(in, wt);
    if (negate) v = -v;
    for (;;) {
        const std::size_t at = in.pos();
        if (in.accept("+")) {
            // A '+' followed by a bundle ends the element (sums of bundles).
            const std::size_t after = in.pos();
            if (in.peek_digit()) {
                in.integer();
                in.accept("*");
            }
            const std::string w = in.word();
            in.reset(after);
            if (w == "O" || w == "A" || w == "E") {
                in.reset(at);
                return v;
            }
            v += term(in, wt);
        } else if (in.accept("-")) {
            v -= term(in, wt);
        } else {
            return v;
        }
    }
}

Bundle bundle(Cursor& in, const WeightType& wt) {
    const std::size_t at = in.pos();
    const std::string head = in.word();
    if (head == "O" || head == "A") {
        in.expect("(");
        const LElement y = lelement(in, wt);
        in.expect(")");
        return head == "O" ? Bundle::line(y) : Bundle::auslander(y);
    }
    if (head == "E") {
        LElement x = LElement::zero(wt);
        LElement y = LElement::zero(wt);
        std::size_t x_at = in.pos();
        const bool has_x = in.accept("<");
        if (has_x) {
            x_at = in.pos();
            x = lelement(in, wt);
            in.expect(">");
        }
        if (in.accept("(")) {
            y = lelement(in, wt);
            in.expect(")");
        }
        try {
            return Bundle::extension(x, y);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), x_at);
        }
    }
    in.reset(at);
    in.fail("expected O(..), A(..), E<..>(..) or E");
}

WeightType weight(Cursor& in) {
    in.expect("(");
    std::vector<int> p;
    do {
        const std::int64_t v = in.integer();
        if (v < 2 || v > 1000) in.fail("weights must lie in [2, 1000]");
        p.push_back(static_cast<int>(v));
    } while (in.accept(","));
    in.expect(")");
    if (p.size() != 3) in.fail("expected three weights");
    return WeightType(p);
}

}  // namespace

WeightType parse_weight(const std::string& text) {
    Cursor in(text);
    WeightType wt = weight(in);
    if (!in.at_end()) in.fail("unexpected trailing input");
    return wt;
}

LElement parse_lelement(const std::string& text, const WeightType& wt) {
    Cursor in(text);
    LElement v = lelement(in, wt);
    if (!in.at_end()) in.fail("unexpected trailing input");
    return v;
}

Bundle parse_bundle(const std::string& text, const WeightType& wt) {
    Cursor in(text);
    Bundle b = bundle(in, wt);
    if (!in.at_end()) in.fail("unexpected trailing input");
    return b;
}

BundleSum parse_bundle_sum(const std::string& text, const WeightType& wt) {
    Cursor in(text);
    BundleSum out(wt);
    do {
        int mult = 1;
        if (in.peek_digit()) {
            const std::int64_t k = in.integer();
            if (k < 1 || k > 1000) in.fail("multiplicity must lie in [1, 1000]");
            mult = static_cast<int>(k);
            in.expect("*");
        }
        out.add(bundle(in, wt), mult);
    } while (in.accept("+") || in.accept("\xE2\x8A\x95"));
    if (!in.at_end()) in.fail("unexpected trailing input");
    return out;
}

std::pair<std::string, WeightType> split_located(const std::string& text) {
    const std::size_t at = text.rfind('@');
    if (at == std::string::npos) throw ParseError("missing '@ (p1,p2,p3)'", text.size());
    try {
        return {text.substr(0, at), parse_weight(text.substr(at + 1))};
    } catch (const ParseError& e) {
        throw ParseError("bad weight type: " + e.message(), at + 1 + e.position());
    }
}

BundleSum parse_located(const std::string& text) {
    const auto [expr, wt] = split_located(text);
    return parse_bundle_sum(expr, wt);
}

}  // namespace wpl
