// Seeded random number helpers. All randomness in the library flows through
// this wrapper; the raw mt19937_64 stream is fixed by the standard and the
// derived draws below avoid std::uniform_*_distribution, whose output is
// implementation-defined. Equal seeds therefore give equal results on every
// platform and toolchain.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace spansub {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t u64() { return engine_(); }

    // Uniform draw from {0, ..., bound - 1}; bound must be positive. The
    // modulo bias is below 2^-50 for every bound used in this project.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    // Uniform double in [0, 1) with 53 random bits.
    double real01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Fisher-Yates shuffle with draws from this stream.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace spansub
