#pragma once

#include <string>

#include "glab/fq.hpp"
#include "glab/poly.hpp"
#include "glab/rational.hpp"

namespace glab {

/// Names available to the polynomial grammar.  `inner` is the rational base
/// variable (x, or t for curve coefficients), `outer` the extension variable
/// (y); `gen` names a multiplicative generator of F_q* for writing
/// coefficients outside the prime subfield, empty when none is declared.
struct ParseContext {
  FqFieldPtr field;
  std::string inner = "x";
  std::string outer = "y";
  std::string gen;
};

/// Grammar (whitespace-insensitive, no parentheses):
///   expr   := ['-'] term { ('+'|'-') term }
///   term   := factor { '*' factor }
///   factor := atom ['^' nat]
///   atom   := nat | name
/// A name must be the inner variable, the outer variable, or the declared
/// generator.  Errors carry the offending position.
Poly<Poly<FqElem>> parse_bivariate(const std::string& text, const ParseContext& ctx);

/// Same grammar restricted to the inner variable.
Poly<FqElem> parse_univariate(const std::string& text, const ParseContext& ctx);

/// Canonical form: fully expanded monomials, outer exponents descending then
/// inner descending, coefficients reduced to 0..p-1 (or generator powers),
/// unit coefficients omitted, joined with " + ".
std::string poly_str(const Poly<FqElem>& p, const ParseContext& ctx);
std::string poly_str(const Poly<Poly<FqElem>>& p, const ParseContext& ctx);

/// Integer-coefficient polynomials (zeta numerators, L-polynomials) print
/// with natural signs: "7*T^2 - 4*T + 1".
std::string poly_str_signed(const Poly<BigInt>& p, const std::string& var);

}  // namespace glab
