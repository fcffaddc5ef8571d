#pragma once

#include <cstdint>
#include <vector>

#include "maxdet/sign_matrix.hpp"
#include "maxdet/zmatrix.hpp"

namespace maxdet {

// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

class PrimeModulus {
 public:
  // Throws InvalidArgument unless p is an odd prime.
  explicit PrimeModulus(std::uint64_t p);
  std::uint64_t value() const noexcept { return p_; }
  unsigned residue_mod4() const noexcept { return static_cast<unsigned>(p_ % 4); }

 private:
  std::uint64_t p_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
int quadratic_character(std::uint64_t x, const PrimeModulus& p);

// p x p matrix chi(x - y) with entries in {-1, 0, +1}.
class CoreMatrix {
 public:
  CoreMatrix(PrimeModulus p, std::vector<std::int8_t> first_row);
  const PrimeModulus& modulus() const noexcept { return p_; }
  std::size_t order() const noexcept { return first_row_.size(); }
  // Circulant: depends only on (j - i) mod p.
  int operator()(std::size_t i, std::size_t j) const noexcept {
    const std::size_t n = first_row_.size();
    return first_row_[(j + n - i) % n];
  }
  ZMatrix to_zmatrix() const;

 private:
  PrimeModulus p_;
  std::vector<std::int8_t> first_row_;
};

CoreMatrix paley_core(const PrimeModulus& p);

// C = Q - I for p = 3 mod 4.
SignMatrix shifted_core(const PrimeModulus& p);

}  // namespace maxdet
