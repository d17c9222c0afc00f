#pragma once

#include <string>
#include <string_view>

#include "toricdeg/polynomial.hpp"
#include "toricdeg/term_order.hpp"

namespace toricdeg {

/// Grammar:
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := [coeff '*'] factor ('*' factor)* | coeff
///   factor := ident ['^' uint]
///   coeff  := int ['/' uint]
/// Whitespace is ignored. Throws SyntaxError or UnknownVariable.
Polynomial parse_polynomial(std::string_view text, const Vars& vars);

/// Terms in descending `order`, e.g. "-x^3 + x*z^2 + y^2*z". The zero polynomial is "0".
std::string format_polynomial(const Polynomial& p, const TermOrder& order);
/// Same with degrevlex on the declared variable order.
std::string format_polynomial(const Polynomial& p);

std::string format_monomial(const Exponent& e, const VarList& vars);

}  // namespace toricdeg
