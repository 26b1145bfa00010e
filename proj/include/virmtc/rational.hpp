#pragma once

#include <gmpxx.h>

#include <string>

namespace virmtc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Always "num/den", zero is "0/1".
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

/// Representative of r mod 1 in [0,1).
Rational frac_part(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace virmtc
