#pragma once

#include <string>
#include <string_view>

#include "typecalc/type_algebra.hpp"

namespace typecalc {

/// "num/den", e.g. "1/2"; zero renders as "0/1".
std::string frac_str(FracQZ x);

/// Comma-separated entry list, e.g. "1/2, 1/2"; empty type renders as "".
std::string type_str(const AutType& t);

/// Parses a type literal "a/b, c/d, ...".  Whitespace-insensitive; plain
/// integers are accepted as fractions over 1; entries are canonicalized and
/// the result is validated.  The empty literal is the empty type.
AutType parse_type(std::string_view lit);

/// Parses "n" or "n/d" into an exact rational.
Rational parse_rational(std::string_view text);

}  // namespace typecalc
