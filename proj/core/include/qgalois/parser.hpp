#pragma once

#include <string>

#include "qgalois/word.hpp"

namespace qg {

// Parses an algebra expression into a word over named generators.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := ('-')* base ('^' integer)?
//   base   := integer | identifier | '(' expr ')'
//
// Identifiers q, q<k> (deformation parameters) and z<m> (the primitive m-th
// root of unity) are scalars; every other identifier is a generator letter.
// '/' and negative exponents require a scalar divisor/base, except that a
// single generator x raised to a negative power becomes the letter "x^-1";
// the evaluation context must supply an image for it.
Word parse_element(const std::string& text); // throws ParseError

} // namespace qg
