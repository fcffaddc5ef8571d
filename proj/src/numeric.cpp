#include "maxdet/numeric.hpp"

#include "maxdet/errors.hpp"

namespace maxdet {

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer ipow(long base, unsigned long exponent) { return ipow(Integer(base), exponent); }

Integer isqrt(const Integer& m) {
  if (m < 0) throw InvalidArgument("isqrt of a negative integer");
  Integer out;
  mpz_sqrt(out.get_mpz_t(), m.get_mpz_t());
  return out;
}

std::optional<Integer> exact_sqrt(const Integer& m) {
  if (m < 0 || !mpz_perfect_square_p(m.get_mpz_t())) return std::nullopt;
  return isqrt(m);
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

std::string sqrt_decimal(const Rational& x, unsigned digits) {
  Rational v = x;
  v.canonicalize();
  if (v < 0) throw InvalidArgument("square root of a negative rational");

  // t = floor(10^d * sqrt(num/den)), then round by comparing 4A with (2t+1)^2 B.
  const Integer a = v.get_num() * ipow(10, 2ul * digits);
  const Integer& b = v.get_den();
  Integer t = isqrt(Integer(a / b));
  const Integer half = 2 * t + 1;
  const int cmp = ::cmp(Integer(4 * a), Integer(half * half * b));
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(t.get_mpz_t()))) t += 1;

  std::string s = t.get_str();
  if (digits == 0) return s;
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return s;
}

}  // namespace maxdet
