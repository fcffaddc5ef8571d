#include <bit>

#include "maxdet/errors.hpp"
#include "maxdet/kernels.hpp"

namespace maxdet::kernels {

std::uint64_t paf_key(std::uint32_t mask, unsigned k) {
  const std::uint32_t full = k == 32 ? ~0u : ((1u << k) - 1u);
  const std::uint32_t x = mask & full;
  std::uint64_t key = 0;
  for (unsigned j = 1; j <= k / 2; ++j) {
    const std::uint32_t rot = ((x >> j) | (x << (k - j))) & full;
    const unsigned defect = static_cast<unsigned>(std::popcount(x ^ rot));
    key |= static_cast<std::uint64_t>(defect / 2) << (4 * (j - 1));
  }
  return key;
}

namespace scalar {

std::int64_t sign_dot(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void paf_keys(std::span<const std::uint32_t> masks, unsigned k, std::span<std::uint64_t> keys) {
  if (k == 0 || k > 31) throw InvalidArgument("paf_keys: row length must be in [1, 31]");
  if (keys.size() < masks.size()) throw DimensionMismatch("paf_keys: output too short");
  for (std::size_t i = 0; i < masks.size(); ++i) keys[i] = paf_key(masks[i], k);
}

}  // namespace scalar
}  // namespace maxdet::kernels
