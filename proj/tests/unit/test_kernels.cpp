#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "maxdet/kernels.hpp"
#include "oracles.hpp"

using namespace maxdet;

namespace {

std::vector<std::int8_t> random_signs(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::int8_t> v(n);
  for (auto& x : v) x = (rng() & 1) ? -1 : 1;
  return v;
}

std::vector<std::int8_t> unpack(std::uint32_t mask, unsigned k) {
  std::vector<std::int8_t> v(k);
  for (unsigned i = 0; i < k; ++i) v[i] = (mask >> i & 1) ? -1 : 1;
  return v;
}

std::uint64_t key_from_paf(std::uint32_t mask, unsigned k) {
  const auto x = unpack(mask, k);
  std::uint64_t key = 0;
  for (unsigned j = 1; j <= k / 2; ++j) {
    const long d = (static_cast<long>(k) - oracle::naive_paf(x, j)) / 2;
    key |= static_cast<std::uint64_t>(d / 2) << (4 * (j - 1));
  }
  return key;
}

}  // namespace

TEST_CASE("scalar sign_dot against a plain sum") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n < 200; ++n) {
    const auto a = random_signs(rng, n);
    const auto b = random_signs(rng, n);
    std::int64_t want = 0;
    for (std::size_t i = 0; i < n; ++i) want += a[i] * b[i];
    CHECK(kernels::scalar::sign_dot(a.data(), b.data(), n) == want);
    CHECK(kernels::sign_dot(a.data(), b.data(), n) == want);
  }
}

TEST_CASE("scalar paf keys against autocorrelation") {
  std::mt19937_64 rng(12);
  for (unsigned k = 1; k <= 31; ++k) {
    std::vector<std::uint32_t> masks(50);
    for (auto& m : masks) m = static_cast<std::uint32_t>(rng()) & ((k == 32 ? 0u : (1u << k)) - 1u);
    std::vector<std::uint64_t> keys(masks.size());
    kernels::scalar::paf_keys(masks, k, keys);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      INFO("k = " << k << " mask = " << masks[i]);
      CHECK(keys[i] == key_from_paf(masks[i], k));
      CHECK(kernels::paf_key(masks[i], k) == keys[i]);
    }
  }
}

#if defined(MAXDET_HAVE_AVX2)
TEST_CASE("avx2 kernels match scalar") {
  if (!kernels::isa_available(kernels::Isa::Avx2)) return;
  std::mt19937_64 rng(13);
  for (std::size_t n = 0; n < 600; n += (n < 80 ? 1 : 37)) {
    const auto a = random_signs(rng, n);
    const auto b = random_signs(rng, n);
    CHECK(kernels::avx2::sign_dot(a.data(), b.data(), n) == kernels::scalar::sign_dot(a.data(), b.data(), n));
  }
  for (unsigned k = 1; k <= 31; ++k) {
    for (std::size_t count : {0u, 1u, 7u, 8u, 9u, 64u, 1001u}) {
      std::vector<std::uint32_t> masks(count);
      for (auto& m : masks) m = static_cast<std::uint32_t>(rng()) & ((1u << k) - 1u);
      std::vector<std::uint64_t> want(count), got(count);
      kernels::scalar::paf_keys(masks, k, want);
      kernels::avx2::paf_keys(masks, k, got);
      INFO("k = " << k << " count = " << count);
      CHECK(got == want);
    }
  }
}
#endif

TEST_CASE("dispatch") {
  const kernels::Isa saved = kernels::active_isa();
  CHECK(kernels::isa_available(kernels::Isa::Scalar));
  kernels::set_active_isa(kernels::Isa::Scalar);
  CHECK(kernels::active_isa() == kernels::Isa::Scalar);
  const std::int8_t a[3] = {1, -1, 1};
  CHECK(kernels::sign_dot(a, a, 3) == 3);
  if (kernels::isa_available(kernels::Isa::Avx2)) {
    kernels::set_active_isa(kernels::Isa::Avx2);
    CHECK(kernels::active_isa() == kernels::Isa::Avx2);
  }
  kernels::set_active_isa(saved);
  CHECK(kernels::isa_name(kernels::Isa::Scalar) == "scalar");
}
