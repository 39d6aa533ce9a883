#pragma once

#include <string>
#include <string_view>

#include "freepi/freealg.hpp"

namespace freepi {

/// Whether the bare literal "0" (the printed form of the zero polynomial)
/// is accepted as a whole input. Every other constant is always rejected.
enum class ZeroLiteral { Accept, Reject };

/// Grammar, whitespace insensitive:
///   poly   := ["-"] term (("+" | "-") term)*
///   term   := [coeff "*"] factor ("*" factor)*
///   factor := var ["^" nat]
///   var    := "x" nat
///   coeff  := nat ["/" nat]
/// Throws ParseError with a byte offset on malformed input.
Polynomial parse(std::string_view text, ZeroLiteral zero = ZeroLiteral::Accept);

/// Canonical text: degree-lex term order, coefficient 1 omitted, exact
/// fractions, "0" for the zero polynomial.
std::string print(const Polynomial& f);

}  // namespace freepi
