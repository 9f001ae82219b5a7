#include "ffroots/kernels.hpp"

#include <immintrin.h>

namespace ffroots::kernels::detail {

// Four lanes per step in double precision: with p < 2^26 the value
// xn + a*xs stays below 2^53, so the product, the quotient estimate and the
// FMA remainder are all exact integers and one correction step suffices.
void negated_affine_row_avx2(const std::uint32_t* xn, const std::uint32_t* xs, std::uint32_t a, std::uint32_t p,
                             std::uint32_t* out, std::size_t len) noexcept {
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256d va = _mm256_set1_pd(static_cast<double>(a));
    const __m256d zero = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m128i n4 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(xn + i));
        const __m128i s4 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(xs + i));
        const __m256d t = _mm256_fmadd_pd(va, _mm256_cvtepi32_pd(s4), _mm256_cvtepi32_pd(n4));
        const __m256d quot = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
        __m256d r = _mm256_fnmadd_pd(quot, vp, t);
        r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
        r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
        __m256d neg = _mm256_sub_pd(vp, r);
        neg = _mm256_andnot_pd(_mm256_cmp_pd(neg, vp, _CMP_EQ_OQ), neg);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), _mm256_cvttpd_epi32(neg));
    }
    negated_affine_row_scalar(xn + i, xs + i, a, p, out + i, len - i);
}

} // namespace ffroots::kernels::detail
