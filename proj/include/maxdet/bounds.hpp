#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "maxdet/numeric.hpp"
#include "maxdet/partition.hpp"

namespace maxdet {

// All bounds are carried squared: they bound det(M M^T).
enum class BoundKind { Hadamard, Barba, EhlichWojtas, EhlichSmooth, EhlichPartition };

std::string_view bound_kind_name(BoundKind kind);
// Accepts the CLI spellings: hadamard, barba, ew, ehlich, ehlich-partition.
std::optional<BoundKind> parse_bound_kind(std::string_view name);

struct BoundValue {
  BoundKind kind;
  long n = 0;
  Rational gram_bound;
  std::string attainable_note;
  // For n = 3 mod 4 both values are attached: Barba, and Ehlich (the smooth
  // form for n >= 63, the optimal-partition value for 7 <= n < 63).
  std::optional<Rational> barba_gram_bound;
  std::optional<Rational> ehlich_gram_bound;
  std::optional<Partition> partition;  // set for EhlichPartition
};

Integer hadamard_bound_sq(long n);
Integer barba_bound_sq(long n);
// Unsquared: (2n - 2)(n - 2)^((n - 2)/2) for n = 2 mod 4.
Integer ew_bound(long n);

// det of the Ehlich-block matrix with the given block sizes:
// (n - 3)^(n - s) (prod a_i - sum r_i prod_{j != i} a_j), a_i = n - 3 + 4 r_i.
Integer ehlich_partition_det(long n, const Partition& partition);

struct OptimalPartition {
  Partition partition;
  Integer value;
};

// Balanced partition into f(n) parts: f = 5 for n = 7, 6 for 15..55, 7 from
// 63 on; at n = 11 (5 or 6) and n = 59 (6 or 7) the larger value wins.
OptimalPartition ehlich_optimal_partition(long n);
// Maximum over all partitions of n into at most max_parts parts (0 = any).
// Ties keep the partition enumerated first (largest parts first).
OptimalPartition ehlich_partition_max_exhaustive(long n, std::size_t max_parts = 0, unsigned threads = 1);

// (4 * 11^6 / 7^7) n (n - 1)^6 (n - 3)^(n - 7), for n = 3 mod 4, n >= 63.
Rational ehlich_smooth_bound(long n);

// The table convention: Hadamard for n = 0 mod 4, Barba for odd n except
// n = 3 mod 4 with n >= 63 (smooth Ehlich), Ehlich-Wojtas for n = 2 mod 4.
BoundValue bound_for(long n);
// A specific bound; throws InvalidArgument when it does not apply to n.
BoundValue bound_of_kind(long n, BoundKind kind);

std::string ratio_decimal(const Integer& det_sq, const Rational& bound_sq, unsigned digits = 4);

// "45·22^22" style factored form of the squared bound.
std::string bound_sq_text(const BoundValue& bound);
// Factored form of the unsquared bound, as printed in the table:
// "√45·22^11", "μ·63^(1/2)·62^3·60^28".
std::string bound_root_text(const BoundValue& bound);

}  // namespace maxdet
