#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace facering {

using Integer = mpz_class;
using Rational = mpq_class;

/// Always emits "num/den", including for integers ("3/1").
std::string rational_to_fraction_string(const Rational& q);

/// Accepts "p", "-p" or "p/q"; throws ParseError otherwise or on q == 0.
Rational parse_rational(std::string_view text);

}  // namespace facering
