#include <immintrin.h>

#include "f1zeta/kernels.hpp"

namespace f1zeta::kernels::avx2 {

// Products f*s < 2^52 are exact in double precision, so the remainder can
// be formed with one floor and one fused multiply-subtract.
void submul_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len) {
  const __m256d vf = _mm256_set1_pd(static_cast<double>(f));
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d s = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
    __m256d d = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
    __m256d prod = _mm256_mul_pd(vf, s);
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, pinv));
    __m256d r = _mm256_fnmadd_pd(q, vp, prod);
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    __m256d res = _mm256_sub_pd(d, r);
    res = _mm256_add_pd(res, _mm256_and_pd(_mm256_cmp_pd(res, zero, _CMP_LT_OQ), vp));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(res));
  }
  scalar::submul_mod(dst + i, src + i, f, p, len - i);
}

void axpy_i32(std::int32_t* dst, const std::int32_t* src, std::int32_t f, std::size_t len) {
  const __m256i vf = _mm256_set1_epi32(f);
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi32(d, _mm256_mullo_epi32(s, vf)));
  }
  scalar::axpy_i32(dst + i, src + i, f, len - i);
}

}  // namespace f1zeta::kernels::avx2
