#pragma once

// Grammar (whitespace insignificant):
//   equation := expr ('=' expr)?
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := ('+' | '-') factor | atom ('^' posint)?
//   atom     := rational | 'n' | 's(n)' | 's(n+' posint ')' | '(' expr ')'
//   rational := digits ('/' digits)?

#include "ratrec/difference.hpp"

#include <string_view>

namespace ratrec {

/// "lhs = rhs" is read as lhs - rhs. Throws SyntaxError, NegativeShiftError
/// or UnknownSymbol, each carrying the byte offset of the offending token.
DiffPoly parse_equation(std::string_view text);

}  // namespace ratrec
