#pragma once

#include <string>
#include <vector>

#include "modloci/polynomial.hpp"

namespace modloci {

/// Parses and normalizes a polynomial expression over the declared
/// variables.  Accepted grammar: terms joined by `+`/`-`; a term is
/// `[coeff][*var[^exp]]...` with `coeff` a decimal integer or `a/b`;
/// parenthesized subexpressions and `^` powers of them are also accepted.
/// Whitespace is insignificant.
///
/// Throws UnknownVariable, NegativeExponent, ParseError.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

std::vector<Polynomial> parse_polynomial_list(const std::string& text,
                                              const std::vector<std::string>& vars);

}  // namespace modloci
