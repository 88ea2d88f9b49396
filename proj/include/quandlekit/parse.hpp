#pragma once

#include <string_view>

#include "quandlekit/laurent.hpp"
#include "quandlekit/tmodule.hpp"

namespace quandlekit {

/// Parses sums of terms `[+|-] [coeff [*]] t[^exp]`, e.g. "t^2+t+1",
/// "2*t^-1 - 3". Whitespace is ignored. Throws ParseError.
LaurentPoly parse_polynomial(std::string_view text);

/// Parses "n; p1; p2; ..." into a normalized presentation. The modulus must
/// be a positive integer. Throws ParseError.
IdealPresentation parse_ideal(std::string_view text);

}  // namespace quandlekit
