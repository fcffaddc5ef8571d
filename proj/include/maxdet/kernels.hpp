#pragma once

// Hot inner loops with a scalar reference and vectorized variants. The public
// entry points dispatch to the best variant the CPU supports; the per-variant
// namespaces are exposed so tests can compare them directly.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace maxdet::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
// Variant used by the dispatching entry points. Starts at the best available
// one unless MAXDET_ISA=scalar is set.
Isa active_isa();
void set_active_isa(Isa isa);

// Inner product of two +-1 vectors of length n.
std::int64_t sign_dot(const std::int8_t* a, const std::int8_t* b, std::size_t n);

// Autocorrelation profile of bit-packed sign rows (bit i set means x_i = -1),
// for row length 1 <= k <= 31. For lags j = 1..k/2 the defect
// d_j = popcount(x ^ rot_j(x)) is even and PAF(j) = k - 2 d_j; the key packs
// d_j / 2 into bits [4(j-1), 4j).
std::uint64_t paf_key(std::uint32_t mask, unsigned k);
void paf_keys(std::span<const std::uint32_t> masks, unsigned k, std::span<std::uint64_t> keys);

namespace scalar {
std::int64_t sign_dot(const std::int8_t* a, const std::int8_t* b, std::size_t n);
void paf_keys(std::span<const std::uint32_t> masks, unsigned k, std::span<std::uint64_t> keys);
}  // namespace scalar

#if defined(MAXDET_HAVE_AVX2)
namespace avx2 {
std::int64_t sign_dot(const std::int8_t* a, const std::int8_t* b, std::size_t n);
void paf_keys(std::span<const std::uint32_t> masks, unsigned k, std::span<std::uint64_t> keys);
}  // namespace avx2
#endif

}  // namespace maxdet::kernels
