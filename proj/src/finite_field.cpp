#include "maxdet/finite_field.hpp"

#include <string>

#include "maxdet/errors.hpp"

namespace maxdet {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exponent) {
    if (exponent & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : small) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;

  // Miller-Rabin with the first twelve primes as witnesses is exact below 2^64.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : small) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p == 2 || !is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
}

int quadratic_character(std::uint64_t x, const PrimeModulus& p) {
  const std::uint64_t q = p.value();
  if (x >= q) throw InvalidArgument("quadratic_character: residue out of range");
  if (x == 0) return 0;
  return powmod(x, (q - 1) / 2, q) == 1 ? 1 : -1;
}

CoreMatrix::CoreMatrix(PrimeModulus p, std::vector<std::int8_t> first_row)
    : p_(p), first_row_(std::move(first_row)) {
  if (first_row_.size() != p_.value()) throw DimensionMismatch("core first row length must equal p");
}

ZMatrix CoreMatrix::to_zmatrix() const {
  return ZMatrix::generate(order(), order(), [&](std::size_t i, std::size_t j) { return Integer((*this)(i, j)); });
}

CoreMatrix paley_core(const PrimeModulus& p) {
  const std::uint64_t q = p.value();
  check_size_guard(q, "paley core");
  // Entry (i, j) is chi(i - j); the first row holds chi(-t) at column t.
  std::vector<std::int8_t> row(q);
  for (std::uint64_t t = 0; t < q; ++t) row[t] = static_cast<std::int8_t>(quadratic_character((q - t) % q, p));
  return CoreMatrix(p, std::move(row));
}

SignMatrix shifted_core(const PrimeModulus& p) {
  if (p.residue_mod4() != 3) {
    throw InvalidArgument("shifted core needs p = 3 mod 4, got " + std::to_string(p.value()));
  }
  const CoreMatrix q = paley_core(p);
  return SignMatrix::generate(q.order(), q.order(),
                              [&](std::size_t i, std::size_t j) { return i == j ? -1 : q(i, j); });
}

}  // namespace maxdet
