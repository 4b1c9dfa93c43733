// Seeded random source used for test-vector generation, noise injection and
// pair sampling. The core generator is the 32-bit Mersenne Twister (mt19937),
// which the C++ standard pins bit-exactly; the distributions are hand-rolled
// here because std::uniform_int_distribution is not portable across standard
// libraries.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace bchsynth {

class Rng {
public:
    explicit Rng(std::uint32_t seed) : gen_(seed) {}

    std::uint32_t next_u32() { return gen_(); }

    // uniform draw from [0, bound) by rejection; bound > 0
    std::uint32_t below(std::uint32_t bound)
    {
        const std::uint32_t limit = UINT32_MAX - UINT32_MAX % bound;
        for (;;) {
            const std::uint32_t v = next_u32();
            if (v < limit)
                return v % bound;
        }
    }

    // true with probability p, one 32-bit draw per call
    bool bernoulli(double p)
    {
        const auto threshold = static_cast<std::uint64_t>(std::llround(p * 4294967296.0));
        if (threshold >= 0x100000000ull)
            return true;
        return next_u32() < threshold;
    }

private:
    std::mt19937 gen_;
};

}  // namespace bchsynth
