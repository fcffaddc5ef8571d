#include <atomic>
#include <cstdlib>
#include <string>

#include "maxdet/errors.hpp"
#include "maxdet/kernels.hpp"

namespace maxdet::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(MAXDET_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("MAXDET_ISA")) {
    if (std::string(env) == "scalar") return Isa::Scalar;
  }
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  if (isa == Isa::Scalar) return true;
  static const bool avx2 = cpu_has_avx2();
  return avx2;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw InvalidArgument("instruction set '" + std::string(isa_name(isa)) + "' is not available");
  }
  current().store(isa, std::memory_order_relaxed);
}

std::int64_t sign_dot(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
#if defined(MAXDET_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::sign_dot(a, b, n);
#endif
  return scalar::sign_dot(a, b, n);
}

void paf_keys(std::span<const std::uint32_t> masks, unsigned k, std::span<std::uint64_t> keys) {
#if defined(MAXDET_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::paf_keys(masks, k, keys);
#endif
  scalar::paf_keys(masks, k, keys);
}

}  // namespace maxdet::kernels
