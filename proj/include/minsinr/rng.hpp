// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace minsinr {

/// Deterministic random source used by every stochastic component.
///
/// Wraps std::mt19937_64 (whose output sequence for a given seed is fully
/// specified by the C++ standard) and maps raw 64-bit words to doubles with
/// an explicit shift-and-scale, because the std distribution adaptors are
/// implementation-defined and would break trace reproducibility across
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Raw 64-bit word; every other draw funnels through here.
    std::uint64_t next_u64() {
        ++draws_;
        return gen_();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [a, b).
    double uniform(double a, double b) {
        return a + (b - a) * uniform();
    }

    /// Standard normal via the Box-Muller transform. Consumes two draws;
    /// no caching of the second value, so the draw count stays predictable.
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        // Guard the log against u1 == 0.
        u1 = std::max(u1, 0x1.0p-53);
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    /// Number of raw words consumed so far. Lets tests assert that a code
    /// path did or did not consult the generator.
    std::uint64_t draw_count() const { return draws_; }

    /// Independent stream for worker k, derived with a splitmix64 hop so
    /// streams do not overlap for any (seed, k) pair in practice.
    static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t k) {
        std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
    std::uint64_t draws_ = 0;
};

} // namespace minsinr
