#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qdom {

// Exact rational in canonical form (gcd(|num|, den) = 1, den >= 1).
using Coefficient = mpq_class;

// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Coefficient& c);

// Accepts "n" or "n/d" with an optional sign; canonicalizes.
Coefficient parse_coefficient(std::string_view text);

inline bool is_integer(const Coefficient& c) { return c.get_den() == 1; }

}  // namespace qdom
