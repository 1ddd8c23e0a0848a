#pragma once

#include <string>
#include <string_view>

#include "nok/param_polynomial.hpp"

namespace nok {

/// Parses an arithmetic expression over "t" and the declared parameter
/// into an exact ParamPolynomial.
///
/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor | '/' INT)*
///   factor := base ('^' NONNEG_INT)?
///   base   := INT | IDENT | '(' expr ')'
/// Division is only by integer literals (so by rationals, via p/q).
/// Unknown identifiers, negative or fractional exponents and division by
/// zero are reported as ParseError with the offending position.
ParamPolynomial parse_expr(std::string_view text, std::string_view param_name);

/// Canonical rendering, reparseable by parse_expr: descending powers of t,
/// then of the parameter. parse . print . parse is the identity.
std::string expr_to_string(const ParamPolynomial& p, std::string_view param_name);

} // namespace nok
