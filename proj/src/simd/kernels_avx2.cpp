#include "vchow/simd/kernels.hpp"

#if VCHOW_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace vchow::simd::avx2 {

namespace {

// Values stay below 2^43, so doubles hold them exactly; the float quotient is
// off by at most one and is corrected with two compares.
__attribute__((target("avx2,fma"))) inline __m256d reduce(__m256d a, __m256d p, __m256d invp) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(a, invp));
  __m256d r = _mm256_fnmadd_pd(q, p, a);
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), p));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  return r;
}

__attribute__((target("avx2,fma"))) inline __m256d horner(const uint32_t* c, size_t n, __m256d x,
                                                           __m256d p, __m256d invp) {
  __m256d acc = _mm256_set1_pd(static_cast<double>(c[n - 1]));
  for (size_t k = n - 1; k-- > 0;) {
    acc = _mm256_fmadd_pd(acc, x, _mm256_set1_pd(static_cast<double>(c[k])));
    acc = reduce(acc, p, invp);
  }
  return acc;
}

uint32_t horner_scalar(const uint32_t* c, size_t n, uint64_t x, uint64_t p) {
  uint64_t acc = c[n - 1];
  for (size_t k = n - 1; k-- > 0;) acc = (acc * x + c[k]) % p;
  return static_cast<uint32_t>(acc);
}

}  // namespace

__attribute__((target("avx2,fma"))) void eval_poly_mod_p(std::span<const uint32_t> coeffs,
                                                          uint32_t p,
                                                          std::span<const uint32_t> xs,
                                                          std::span<uint32_t> out) {
  const uint32_t* c = coeffs.data();
  const size_t n = coeffs.size();
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d invp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  size_t i = 0;
  for (; i + 4 <= xs.size(); i += 4) {
    __m128i xi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(xs.data() + i));
    __m256d x = _mm256_cvtepi32_pd(xi);
    __m256d r = horner(c, n, x, vp, invp);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out.data() + i), _mm256_cvttpd_epi32(r));
  }
  for (; i < xs.size(); ++i) out[i] = horner_scalar(c, n, xs[i], p);
}

__attribute__((target("avx2,fma"))) int64_t character_sum(std::span<const uint32_t> coeffs,
                                                           uint32_t p,
                                                           std::span<const int32_t> chi) {
  const uint32_t* c = coeffs.data();
  const size_t n = coeffs.size();
  const int* table = reinterpret_cast<const int*>(chi.data());
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d invp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d step = _mm256_set1_pd(8.0);
  __m256d x0 = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  __m256d x1 = _mm256_setr_pd(4.0, 5.0, 6.0, 7.0);
  __m128i acc0 = _mm_setzero_si128();
  __m128i acc1 = _mm_setzero_si128();
  uint32_t x = 0;
  // Per-lane partial sums stay below p <= 2^21, so 32-bit accumulators are safe.
  for (; x + 8 <= p; x += 8) {
    __m128i i0 = _mm256_cvttpd_epi32(horner(c, n, x0, vp, invp));
    __m128i i1 = _mm256_cvttpd_epi32(horner(c, n, x1, vp, invp));
    acc0 = _mm_add_epi32(acc0, _mm_i32gather_epi32(table, i0, 4));
    acc1 = _mm_add_epi32(acc1, _mm_i32gather_epi32(table, i1, 4));
    x0 = _mm256_add_pd(x0, step);
    x1 = _mm256_add_pd(x1, step);
  }
  alignas(16) int32_t lanes[8];
  _mm_store_si128(reinterpret_cast<__m128i*>(lanes), acc0);
  _mm_store_si128(reinterpret_cast<__m128i*>(lanes + 4), acc1);
  int64_t sum = 0;
  for (int32_t v : lanes) sum += v;
  for (; x < p; ++x) sum += chi[horner_scalar(c, n, x, p)];
  return sum;
}

}  // namespace vchow::simd::avx2

#endif
