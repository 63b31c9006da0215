#include "qchrom/kernels.hpp"

#ifdef QCHROM_HAVE_AVX2_TU

#include <immintrin.h>

#include <bit>

// This TU is compiled with -mavx2 -mfma and must only be entered when the
// dispatcher has confirmed cpuid support.

namespace qchrom::kern {
namespace {

// Nibble-LUT byte popcount (Mula), partial sums widened via psadbw.
inline __m256i popcount_bytes_to_u64(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                  _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::size_t hsum_u64(__m256i acc) {
    alignas(32) u64 lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

std::size_t popcount_words_avx2(const u64* a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcount_bytes_to_u64(v));
    }
    std::size_t s = hsum_u64(acc);
    for (; i < n; ++i) s += static_cast<std::size_t>(std::popcount(a[i]));
    return s;
}

std::size_t and_popcount_avx2(const u64* a, const u64* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount_bytes_to_u64(_mm256_and_si256(va, vb)));
    }
    std::size_t s = hsum_u64(acc);
    for (; i < n; ++i) s += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return s;
}

void and_into_avx2(u64* dst, const u64* a, const u64* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_into_avx2(u64* dst, const u64* a, const u64* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] | b[i];
}

void andnot_into_avx2(u64* dst, const u64* a, const u64* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // andnot computes ~first & second
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(vb, va));
    }
    for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

cplx cdot_avx2(const cplx* a, const cplx* b, std::size_t n) {
    // lane layout per 256-bit vector: [re0, im0, re1, im1]
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    const __m256d conj_sign = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        // re: ar*br + ai*bi accumulated pairwise
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        // im: ar*bi - ai*br, via swapped-and-negated b lanes
        __m256d vbsw = _mm256_permute_pd(vb, 0x5);               // [bi, br, bi, br]
        vbsw = _mm256_xor_pd(vbsw, conj_sign);                   // [bi, -br, bi, -br]
        acc_im = _mm256_fmadd_pd(va, vbsw, acc_im);
    }
    alignas(32) double lr[4], li[4];
    _mm256_store_pd(lr, acc_re);
    _mm256_store_pd(li, acc_im);
    double re = (lr[0] + lr[1]) + (lr[2] + lr[3]);
    double im = (li[0] + li[1]) + (li[2] + li[3]);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable t{
        popcount_words_avx2, and_popcount_avx2, and_into_avx2,
        or_into_avx2,        andnot_into_avx2,  cdot_avx2,
        "avx2"};
    return t;
}

}  // namespace qchrom::kern

#endif  // QCHROM_HAVE_AVX2_TU
