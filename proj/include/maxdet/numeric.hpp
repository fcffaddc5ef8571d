#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace maxdet {

using Integer = mpz_class;
using Rational = mpq_class;

Integer ipow(const Integer& base, unsigned long exponent);
Integer ipow(long base, unsigned long exponent);

// Floor of the square root; m must be non-negative.
Integer isqrt(const Integer& m);
std::optional<Integer> exact_sqrt(const Integer& m);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// sqrt(x) rounded half-to-even at `digits` decimal places. x >= 0.
std::string sqrt_decimal(const Rational& x, unsigned digits);

// Non-negative residue of a mod m (m > 0).
inline long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace maxdet
