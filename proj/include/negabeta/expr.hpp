#ifndef NEGABETA_EXPR_HPP
#define NEGABETA_EXPR_HPP

#include <string>

#include "negabeta/algebraic.hpp"

namespace negabeta {

// Evaluates an arithmetic expression over Q(theta) for the given ground
// field; 'b' names the generator theta. Grammar, with whitespace free
// between tokens:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := ('+' | '-')* primary
//   primary := number | 'b' | '(' expr ')'
//   number  := digits ('.' digits)? | digits
//
// Decimal literals are exact rationals (0.25 is 1/4), '/' is field division
// (OutOfDomain on a zero divisor), and any leftover input is a ParseError.
FieldElement parse_value(const std::string& text, const AlgebraicRealPtr& field);

// Exact coefficient form over the power basis, e.g. "7 + 3*b", "1 - 1/2*b",
// "2*b^2". Rationals are in lowest terms; zero terms are dropped; the zero
// element renders as "0".
std::string coefficient_string(const FieldElement& x);

// x rounded to `digits` decimal places (ties away from zero), rendered with
// exactly that many fraction digits: decimal_string(beta of plus:1,1, 6) is
// "1.618034".
std::string decimal_string(const FieldElement& x, int digits);

} // namespace negabeta

#endif
