#include <immintrin.h>

#include <bit>

#include "maxdet/errors.hpp"
#include "maxdet/kernels.hpp"

namespace maxdet::kernels::avx2 {

std::int64_t sign_dot(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
  // Equal entries contribute +1, unequal -1: dot = 2 * equal - n.
  std::int64_t equal = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const auto bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
    equal += std::popcount(bits);
  }
  std::int64_t tail = 0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return 2 * equal - static_cast<std::int64_t>(n - n % 32) + tail;
}

namespace {

inline __m256i popcount_epi32(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  const __m256i pairs = _mm256_maddubs_epi16(bytes, _mm256_set1_epi8(1));
  return _mm256_madd_epi16(pairs, _mm256_set1_epi16(1));
}

}  // namespace

void paf_keys(std::span<const std::uint32_t> masks, unsigned k, std::span<std::uint64_t> keys) {
  if (k == 0 || k > 31) throw InvalidArgument("paf_keys: row length must be in [1, 31]");
  if (keys.size() < masks.size()) throw DimensionMismatch("paf_keys: output too short");

  const __m256i full = _mm256_set1_epi32(static_cast<int>((1u << k) - 1u));
  const unsigned lags = k / 2;
  std::size_t i = 0;
  for (; i + 8 <= masks.size(); i += 8) {
    const __m256i x =
        _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks.data() + i)), full);
    __m256i key_lo = _mm256_setzero_si256();
    __m256i key_hi = _mm256_setzero_si256();
    for (unsigned j = 1; j <= lags; ++j) {
      const __m256i right = _mm256_srl_epi32(x, _mm_cvtsi32_si128(static_cast<int>(j)));
      const __m256i left = _mm256_sll_epi32(x, _mm_cvtsi32_si128(static_cast<int>(k - j)));
      const __m256i rot = _mm256_and_si256(_mm256_or_si256(right, left), full);
      const __m256i half = _mm256_srli_epi32(popcount_epi32(_mm256_xor_si256(x, rot)), 1);
      const unsigned shift = 4 * ((j - 1) % 8);
      const __m256i placed = _mm256_sll_epi32(half, _mm_cvtsi32_si128(static_cast<int>(shift)));
      if (j <= 8) key_lo = _mm256_or_si256(key_lo, placed);
      else key_hi = _mm256_or_si256(key_hi, placed);
    }
    // Interleave the 32-bit halves into eight 64-bit keys in lane order.
    const __m256i a = _mm256_unpacklo_epi32(key_lo, key_hi);  // keys 0,1 | 4,5
    const __m256i b = _mm256_unpackhi_epi32(key_lo, key_hi);  // keys 2,3 | 6,7
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(keys.data() + i), _mm256_permute2x128_si256(a, b, 0x20));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(keys.data() + i + 4), _mm256_permute2x128_si256(a, b, 0x31));
  }
  for (; i < masks.size(); ++i) keys[i] = paf_key(masks[i], k);
}

}  // namespace maxdet::kernels::avx2
