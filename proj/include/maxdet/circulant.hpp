#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "maxdet/sign_matrix.hpp"

namespace maxdet {

using SignVector = std::vector<std::int8_t>;

// PAF_X(j) = sum_i x_i x_{(i + j) mod k}.
long periodic_autocorrelation(const SignVector& x, std::size_t j);
long vector_sum(const SignVector& x);

// Circulant with first row x: entry (i, j) = x[(j - i) mod k].
SignMatrix circulant(const SignVector& x);

// First rows of circulants R, S with RR^T + SS^T = (2k - 2)I + 2J.
class CirculantPair {
 public:
  // Throws InvalidArgument when the lengths differ or the PAF identity fails.
  CirculantPair(SignVector first_row_r, SignVector first_row_s);

  std::size_t k() const noexcept { return r_row_.size(); }
  const SignVector& first_row_r() const noexcept { return r_row_; }
  const SignVector& first_row_s() const noexcept { return s_row_; }
  long r() const noexcept { return r_; }
  long s() const noexcept { return s_; }

  // (R, S) as the two rows of a 2 x k sign matrix, the on-disk layout.
  SignMatrix as_rows() const;
  static CirculantPair from_rows(const SignMatrix& rows);

  bool operator==(const CirculantPair& other) const = default;
  // Lexicographic on (R, S), with -1 ordered before +1.
  bool operator<(const CirculantPair& other) const;

 private:
  SignVector r_row_;
  SignVector s_row_;
  long r_ = 0;
  long s_ = 0;
};

// Failure reason when x, y violate PAF_x(j) + PAF_y(j) = 2, or empty.
std::string pair_identity_violation(const SignVector& x, const SignVector& y);

}  // namespace maxdet
