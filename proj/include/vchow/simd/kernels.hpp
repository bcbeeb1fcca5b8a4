#pragma once
// Data-parallel prime-field kernels used by point counting.
//
// Every entry point has a scalar reference implementation and an AVX2
// variant; the dispatching functions pick one at runtime from CPUID. Setting
// VCHOW_SIMD=scalar in the environment forces the reference path.

#include <cstdint>
#include <span>

namespace vchow::simd {

enum class Isa { kScalar, kAvx2 };

/// Largest prime for which the kernels are exact (products must fit a double mantissa).
inline constexpr uint32_t kMaxKernelPrime = 1u << 21;

Isa detected_isa();
Isa active_isa();
const char* isa_name(Isa isa);

/// out[i] = f(xs[i]) mod p, where coeffs[k] is the coefficient of x^k (all < p).
void eval_poly_mod_p(std::span<const uint32_t> coeffs, uint32_t p, std::span<const uint32_t> xs,
                     std::span<uint32_t> out);

/// Sum of chi[f(x)] over x = 0..p-1. chi has length p.
int64_t character_sum(std::span<const uint32_t> coeffs, uint32_t p, std::span<const int32_t> chi);

namespace scalar {
void eval_poly_mod_p(std::span<const uint32_t> coeffs, uint32_t p, std::span<const uint32_t> xs,
                     std::span<uint32_t> out);
int64_t character_sum(std::span<const uint32_t> coeffs, uint32_t p, std::span<const int32_t> chi);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
#define VCHOW_HAVE_AVX2_KERNELS 1
namespace avx2 {
// Callers must check detected_isa() == Isa::kAvx2 first.
void eval_poly_mod_p(std::span<const uint32_t> coeffs, uint32_t p, std::span<const uint32_t> xs,
                     std::span<uint32_t> out);
int64_t character_sum(std::span<const uint32_t> coeffs, uint32_t p, std::span<const int32_t> chi);
}  // namespace avx2
#else
#define VCHOW_HAVE_AVX2_KERNELS 0
#endif

}  // namespace vchow::simd
