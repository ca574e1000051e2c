#pragma once

// Element expressions:
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := coeff ['*'] [mono ['/' integer]] | mono ['/' integer]
//   mono     := 'x' ['^' exponent]
//   exponent := rational | '(' rational [',' rational] ')'
//   coeff    := rational | 'gauss' '(' rational ',' rational ')'
//   fraction := expr '/' expr, sides optionally parenthesized
// Whitespace is ignored.

#include <string_view>

#include "semilab/localization.hpp"

namespace semilab {

/// Parses into the ambient representation of `inst`; membership is not
/// implied. Throws SyntaxError (with position), DimensionMismatch, RingMismatch.
Poly parse_element(std::string_view text, const SemidomainInstance& inst);
/// As above with an explicit ring and exponent dimension.
Poly parse_poly(std::string_view text, Ring ring, std::size_t dim);
/// "num/den", or a bare expression meaning expr/1.
Fraction parse_fraction(std::string_view text, const LocalizedSemidomain& loc);
/// Rational or dimension-2 exponent text such as "5/6" or "(2,4)".
Exp parse_exponent(std::string_view text);

}  // namespace semilab
