#pragma once

#include <cmath>
#include <cstdint>

namespace ustblocks {

/// SplitMix64 used as a counter-based generator: output i is mix(key + i*gamma).
/// Splitting derives an independent stream key from (key, stream index), so
/// parallel workers can draw from disjoint streams deterministically.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Independent stream for worker `idx` of a run seeded with `seed`.
    static SplitMix64 stream(uint64_t seed, uint64_t idx) {
        return SplitMix64(mix(seed ^ mix(idx + 0x632be59bd9b4e019ULL)));
    }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        const uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % bound;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

  private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace ustblocks
