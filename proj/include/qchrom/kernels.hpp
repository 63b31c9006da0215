#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

// Low-level data-parallel kernels behind the solvers and verifiers.
// Every kernel has a scalar reference implementation; on x86_64 an AVX2
// variant is selected at runtime when cpuid reports support. The active
// backend can be forced (tests, debugging) via force_backend() or the
// QCHROM_KERNELS environment variable ("scalar" or "avx2").

namespace qchrom::kern {

using u64 = std::uint64_t;
using cplx = std::complex<double>;

struct KernelTable {
    std::size_t (*popcount_words)(const u64*, std::size_t);
    std::size_t (*and_popcount)(const u64*, const u64*, std::size_t);
    void (*and_into)(u64*, const u64*, const u64*, std::size_t);
    void (*or_into)(u64*, const u64*, const u64*, std::size_t);
    void (*andnot_into)(u64*, const u64*, const u64*, std::size_t);
    cplx (*cdot)(const cplx*, const cplx*, std::size_t);
    const char* name;
};

const KernelTable& scalar_table();
#ifdef QCHROM_HAVE_AVX2_TU
const KernelTable& avx2_table();
#endif

// Active backend. "auto" re-runs detection.
const KernelTable& active();
void force_backend(std::string_view name);
std::string_view backend_name();
bool avx2_available();

inline std::size_t popcount_words(const u64* a, std::size_t n) { return active().popcount_words(a, n); }
inline std::size_t and_popcount(const u64* a, const u64* b, std::size_t n) { return active().and_popcount(a, b, n); }
inline void and_into(u64* dst, const u64* a, const u64* b, std::size_t n) { active().and_into(dst, a, b, n); }
inline void or_into(u64* dst, const u64* a, const u64* b, std::size_t n) { active().or_into(dst, a, b, n); }
// dst = a & ~b
inline void andnot_into(u64* dst, const u64* a, const u64* b, std::size_t n) { active().andnot_into(dst, a, b, n); }
// sum conj(a[i]) * b[i]
inline cplx cdot(const cplx* a, const cplx* b, std::size_t n) { return active().cdot(a, b, n); }

}  // namespace qchrom::kern
