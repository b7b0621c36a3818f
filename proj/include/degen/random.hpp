#pragma once

#include <cstdint>
#include <random>

namespace degen {

/// Seeded 64-bit generator with platform-independent bounded draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound > 0. Multiply-shift mapping, identical on every platform.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * bound) >> 64);
    }

    /// Uniform double in [0, 1) from 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace degen
