#include "qchrom/kernels.hpp"

#include <bit>

namespace qchrom::kern {
namespace {

std::size_t popcount_words_scalar(const u64* a, std::size_t n) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<std::size_t>(std::popcount(a[i]));
    return s;
}

std::size_t and_popcount_scalar(const u64* a, const u64* b, std::size_t n) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return s;
}

void and_into_scalar(u64* dst, const u64* a, const u64* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_into_scalar(u64* dst, const u64* a, const u64* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

void andnot_into_scalar(u64* dst, const u64* a, const u64* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

cplx cdot_scalar(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        // conj(a)*b expanded; keeps the accumulation order obvious
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{
        popcount_words_scalar, and_popcount_scalar, and_into_scalar,
        or_into_scalar,        andnot_into_scalar,  cdot_scalar,
        "scalar"};
    return t;
}

}  // namespace qchrom::kern
