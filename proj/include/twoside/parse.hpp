#pragma once

// Small recursive-descent parser for hand-written algebraic expressions.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := rational | variable | '(' expr ')'
//
// Whitespace is ignored. Juxtaposition (implicit multiplication) is rejected.

#include <string>

namespace twoside {

class BiPoly;
class RatFunc;

// Variables x and y; division only by nonzero constants.
BiPoly parse_bipoly_expr(const std::string& text);

// Single variable `var`; division by any nonzero rational function.
RatFunc parse_rational_function(const std::string& text, char var);

}  // namespace twoside
