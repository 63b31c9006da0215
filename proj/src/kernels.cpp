#include "qchrom/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "qchrom/errors.hpp"

namespace qchrom::kern {
namespace {

const KernelTable* detect() {
#ifdef QCHROM_HAVE_AVX2_TU
    if (const char* env = std::getenv("QCHROM_KERNELS")) {
        std::string v(env);
        if (v == "scalar") return &scalar_table();
        if (v == "avx2") return &avx2_table();
        // unknown value falls through to detection
    }
    if (__builtin_cpu_supports("avx2")) return &avx2_table();
#else
    if (const char* env = std::getenv("QCHROM_KERNELS")) {
        (void)env;
    }
#endif
    return &scalar_table();
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

const KernelTable& active() {
    const KernelTable* t = g_active.load(std::memory_order_acquire);
    if (!t) {
        t = detect();
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

void force_backend(std::string_view name) {
    if (name == "scalar") {
        g_active.store(&scalar_table(), std::memory_order_release);
        return;
    }
    if (name == "avx2") {
#ifdef QCHROM_HAVE_AVX2_TU
        if (avx2_available()) {
            g_active.store(&avx2_table(), std::memory_order_release);
            return;
        }
#endif
        throw InvalidInput("avx2 kernels not available on this machine");
    }
    if (name == "auto") {
        g_active.store(detect(), std::memory_order_release);
        return;
    }
    throw InvalidInput("unknown kernel backend: " + std::string(name));
}

std::string_view backend_name() { return active().name; }

bool avx2_available() {
#ifdef QCHROM_HAVE_AVX2_TU
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

}  // namespace qchrom::kern
