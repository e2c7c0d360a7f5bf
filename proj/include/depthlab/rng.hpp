// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>

#include "depthlab/errors.hpp"

namespace depthlab {

/// splitmix64 finalizer. Used both as the stream generator and to derive
/// independent substream keys from (seed, tag, index) tuples, so replications
/// and bootstrap iterations can run in any order with identical results.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic, platform-independent random stream (splitmix64).
///
/// std::normal_distribution and friends are implementation-defined, so every
/// variate here is generated by an explicit, fixed algorithm: byte-identical
/// output is part of the CLI contract.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(mix64(seed ^ 0x6A09E667F3BCC909ULL)) {}

    /// Independent substream keyed by up to three tags. Rng(seed).substream(a,b)
    /// depends only on (seed, a, b), never on draw history.
    static Rng substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                         std::uint64_t c = 0) {
        std::uint64_t k = mix64(seed);
        k = mix64(k ^ mix64(a ^ 0x243F6A8885A308D3ULL));
        k = mix64(k ^ mix64(b ^ 0x13198A2E03707344ULL));
        k = mix64(k ^ mix64(c ^ 0xA4093822299F31D0ULL));
        return Rng(k);
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe for log().
    double uniform01_open() { return 1.0 - uniform01(); }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// +1 or -1 with equal probability.
    int rademacher() { return (next_u64() >> 63) ? 1 : -1; }

    /// Standard normal via Box-Muller (cosine branch); consumes exactly two
    /// uniforms per variate.
    double gaussian() {
        double u1 = uniform01_open();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double exponential() { return -std::log(uniform01_open()); }

    /// Gamma(shape, 1) via Marsaglia-Tsang, with the usual power boost for
    /// shape < 1.
    double gamma(double shape) {
        if (!(shape > 0.0)) throw DomainError("gamma: shape must be positive");
        if (shape < 1.0) {
            double g = gamma(shape + 1.0);
            return g * std::pow(uniform01_open(), 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = gaussian();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            double u = uniform01_open();
            if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

  private:
    std::uint64_t state_;
};

/// A derived 64-bit seed for handing to components that take a seed rather
/// than a stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    return Rng::substream(seed, a, b, c).next_u64();
}

/// Fixed substream tags, one per consumer, so streams never collide.
namespace stream_tag {
inline constexpr std::uint64_t directions = 0x01;
inline constexpr std::uint64_t median_refine = 0x02;
inline constexpr std::uint64_t bootstrap_signs = 0x03;
inline constexpr std::uint64_t bootstrap_median = 0x04;
inline constexpr std::uint64_t study_sample = 0x05;
inline constexpr std::uint64_t study_test = 0x06;
inline constexpr std::uint64_t sampler = 0x07;
inline constexpr std::uint64_t alpha_probe = 0x08;
inline constexpr std::uint64_t sequence_draw = 0x09;
}  // namespace stream_tag

}  // namespace depthlab
