#pragma once

#include <cstdint>

namespace qchrom {

// splitmix64 (Steele, Lea, Flood 2014). Chosen as the single PRNG of the
// project because its output is a pure function of the 64-bit seed with no
// platform-dependent state, which makes random-graph experiments bit
// reproducible everywhere. Experiment records carry the algorithm name.
inline constexpr const char* kRngAlgorithm = "splitmix64";

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1), 53-bit mantissa, exactly reproducible
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [0, bound) by rejection; bound > 0
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

  private:
    std::uint64_t state_;
};

}  // namespace qchrom
