#include "vchow/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "vchow/error.hpp"

namespace vchow::simd {

namespace {

void check_args(std::span<const uint32_t> coeffs, uint32_t p) {
  if (p < 2 || p > kMaxKernelPrime) fail(ErrorCode::kInvalidArgument, "kernel prime out of range");
  if (coeffs.empty()) fail(ErrorCode::kInvalidArgument, "kernel polynomial is empty");
}

}  // namespace

Isa detected_isa() {
#if VCHOW_HAVE_AVX2_KERNELS
  static const Isa isa = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma") ? Isa::kAvx2 : Isa::kScalar;
  return isa;
#else
  return Isa::kScalar;
#endif
}

Isa active_isa() {
  const char* forced = std::getenv("VCHOW_SIMD");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return Isa::kScalar;
  return detected_isa();
}

const char* isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

namespace scalar {

void eval_poly_mod_p(std::span<const uint32_t> coeffs, uint32_t p, std::span<const uint32_t> xs,
                     std::span<uint32_t> out) {
  const uint64_t m = p;
  for (size_t i = 0; i < xs.size(); ++i) {
    const uint64_t x = xs[i];
    uint64_t acc = coeffs.back();
    for (size_t k = coeffs.size() - 1; k-- > 0;) acc = (acc * x + coeffs[k]) % m;
    out[i] = static_cast<uint32_t>(acc);
  }
}

int64_t character_sum(std::span<const uint32_t> coeffs, uint32_t p, std::span<const int32_t> chi) {
  const uint64_t m = p;
  int64_t sum = 0;
  for (uint64_t x = 0; x < m; ++x) {
    uint64_t acc = coeffs.back();
    for (size_t k = coeffs.size() - 1; k-- > 0;) acc = (acc * x + coeffs[k]) % m;
    sum += chi[acc];
  }
  return sum;
}

}  // namespace scalar

void eval_poly_mod_p(std::span<const uint32_t> coeffs, uint32_t p, std::span<const uint32_t> xs,
                     std::span<uint32_t> out) {
  check_args(coeffs, p);
  if (out.size() < xs.size()) fail(ErrorCode::kInvalidArgument, "kernel output span too small");
#if VCHOW_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::kAvx2) return avx2::eval_poly_mod_p(coeffs, p, xs, out);
#endif
  scalar::eval_poly_mod_p(coeffs, p, xs, out);
}

int64_t character_sum(std::span<const uint32_t> coeffs, uint32_t p, std::span<const int32_t> chi) {
  check_args(coeffs, p);
  if (chi.size() < p) fail(ErrorCode::kInvalidArgument, "character table shorter than p");
#if VCHOW_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::kAvx2) return avx2::character_sum(coeffs, p, chi);
#endif
  return scalar::character_sum(coeffs, p, chi);
}

}  // namespace vchow::simd
