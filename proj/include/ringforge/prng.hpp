#ifndef RINGFORGE_PRNG_HPP
#define RINGFORGE_PRNG_HPP

#include <cmath>
#include <cstdint>

#include "ringforge/errors.hpp"

namespace ringforge {

// SplitMix64 generator. A single 64-bit word of state, the same output
// sequence on every platform, and cheap enough to give every mask or
// training run its own generator.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform draw in [lo, hi); returns lo exactly when lo == hi.
    double uniform(double lo, double hi) {
        if (lo > hi) throw ValidationError("prng: uniform range has lo > hi");
        return lo + (hi - lo) * std::ldexp(static_cast<double>(next_u64()), -64);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

// One SplitMix64 output for a given seed without constructing a generator.
// Used for seed derivation and the deterministic validation split.
inline std::uint64_t splitmix64_once(std::uint64_t seed) {
    return Prng(seed).next_u64();
}

} // namespace ringforge

#endif
