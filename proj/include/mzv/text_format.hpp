#pragma once

#include "mzv/poly.hpp"

#include <string>
#include <string_view>

namespace mzv {

// Text syntax shared by the CLI and tests.
//
//   word         [xy]*           "1" or "" is the empty word
//   composition  see Composition::parse; "()" or "" is the empty composition
//   polynomial   term (('+'|'-') term)*     term = [coeff '*'] monomial
//
// A bare integer term in the xy alphabet is a multiple of the unit. In the z
// alphabet a bare term is always a composition, so constants need an explicit
// monomial: "3*()".
//
// Serialization lists terms in CanonicalOrder, omits unit coefficients and
// prints the zero polynomial as "0".

std::string to_string(const WordPoly& p);
std::string to_string(const ZPoly& p);

WordPoly parse_wordpoly(std::string_view text);
ZPoly parse_zpoly(std::string_view text);

}  // namespace mzv
