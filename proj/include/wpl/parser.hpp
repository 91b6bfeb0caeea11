#pragma once

// Text syntax for weight types, L-elements and bundle sums.
//
//   weight  := '(' INT ',' INT ',' INT ')'
//   lelt    := ['-'] term (('+' | '-') term)*  |  '0'
//   term    := INT '*' atom | atom | INT
//   atom    := x1 | x2 | x3 | c | w | xb1 | xb2 | xb3 | d
//   bundle  := [INT '*'] ( 'O(' lelt ')' | 'A(' lelt ')' | 'E<' lelt '>' ['(' lelt ')']
//                        | 'E' ['(' lelt ')'] )
//   sum     := bundle (('+' | '⊕') bundle)*
//   located := sum '@' weight
//
// A bare integer term means that many copies of c. `E` and `E(y)` are the
// Auslander bundle. Everything is brought to normal form.

#include <stdexcept>
#include <string>
#include <utility>

#include "wpl/catalog.hpp"

namespace wpl {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t position_;
};

WeightType parse_weight(const std::string& text);
LElement parse_lelement(const std::string& text, const WeightType& wt);
Bundle parse_bundle(const std::string& text, const WeightType& wt);
BundleSum parse_bundle_sum(const std::string& text, const WeightType& wt);

/// "expr @ (p1,p2,p3)" split at the last '@'.
std::pair<std::string, WeightType> split_located(const std::string& text);
BundleSum parse_located(const std::string& text);

}  // namespace wpl
