#pragma once

#include "kdiv/rational.hpp"

#include <cstdint>

namespace kdiv::exact {

/// Seeded 64-bit multiplicative congruential generator.
///
///   state <- state * 0xf1357aea2e62a9c5  (mod 2^64)
///
/// The multiplier is from Steele & Vigna, "Computationally easy, spectrally
/// good multipliers for congruential pseudorandom number generators" (2021).
/// An MCG needs an odd state, so the seed is mapped to 2*seed + 1.  The
/// generator is fully specified here so that identical seeds reproduce
/// identical streams across platforms and releases.
class Mcg64 {
public:
    static constexpr std::uint64_t kMultiplier = 0xf1357aea2e62a9c5ULL;

    explicit Mcg64(std::uint64_t seed) : state_(2 * seed + 1) {
        // One warm-up step decouples trivially related seeds.
        next();
    }

    std::uint64_t next() {
        state_ *= kMultiplier;
        return state_;
    }

    /// Uniform-ish draw in [0, n); n > 0.  Defined as next() % n so streams
    /// are reproducible from the specification alone.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

/// Small random rational: numerator in [-max_num, max_num], denominator in
/// [1, max_den].
inline Rational random_rational(Mcg64& rng, long max_num = 9, long max_den = 9) {
    return Rational(rng.range(-max_num, max_num), rng.range(1, max_den));
}

inline Rational random_nonzero_rational(Mcg64& rng, long max_num = 9, long max_den = 9) {
    for (;;) {
        Rational r = random_rational(rng, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

}  // namespace kdiv::exact
