#pragma once

#include <cstdint>

namespace padic {

/// Algorithm identifier recorded in every report that used randomness.
inline constexpr const char* kRngAlgorithmId = "splitmix64-counter-v1";

/// Counter-based generator: every draw is a pure function of
/// (seed, sample_index, draw_counter), so sample streams are independent of
/// worker scheduling and can be replayed individually.
class SampleRng {
  public:
    SampleRng(std::uint64_t seed, std::uint64_t sample_index)
        : state_(mix(seed + 0x9E3779B97F4A7C15ull) ^
                 mix(sample_index * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform value in [0, bound) by rejection from the smallest enclosing
    /// power-of-two range; exact, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        std::uint64_t v;
        do {
            v = next_u64() & mask;
        } while (v >= bound);
        return v;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace padic
