#pragma once
#include <cstdint>
#include <cmath>

namespace ginitree {

// Counter-style splittable generator: a SplitMix64 core whose additive
// constant (gamma) is derived from the stream id, as in Java's
// SplittableRandom. Identical (seed, stream) pairs give identical draw
// sequences on every platform; distinct streams get distinct gammas and
// therefore distinct orbits.
class RandomSource {
public:
    using result_type = std::uint64_t;

    RandomSource() : RandomSource(0, 0) {}
    RandomSource(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream) {
        state_ = mix64(seed + 0x9E3779B97F4A7C15ull * (stream + 1));
        gamma_ = mix_gamma(mix64(seed ^ 0x6A09E667F3BCC909ull) + stream);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ull; }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next() {
        state_ += gamma_;
        return mix64(state_);
    }
    result_type operator()() { return next(); }

    // uniform in [0,1), 53-bit resolution
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, n), unbiased via rejection
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    double exponential(double rate) {
        return -std::log1p(-next_double()) / rate;
    }

    // Inversion (product of uniforms) for small lambda, Hormann's PTRS
    // transformed rejection above. The cutover is pinned at 30 so draw
    // sequences are reproducible.
    std::uint64_t poisson(double lambda) {
        if (lambda <= 0.0) return 0;
        if (lambda <= 30.0) return poisson_inversion(lambda);
        return poisson_ptrs(lambda);
    }

private:
    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // MurmurHash3-style avalanche, then force odd and enough bit flips
    // (Steele, Lea & Flood's gamma conditioning).
    static std::uint64_t mix_gamma(std::uint64_t z) {
        z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDull;
        z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ull;
        z = (z ^ (z >> 33)) | 1ull;
        int n = __builtin_popcountll(z ^ (z >> 1));
        return (n < 24) ? z ^ 0xAAAAAAAAAAAAAAAAull : z;
    }

    std::uint64_t poisson_inversion(double lambda) {
        const double limit = std::exp(-lambda);
        std::uint64_t k = 0;
        double prod = next_double();
        while (prod > limit) {
            ++k;
            prod *= next_double();
        }
        return k;
    }

    std::uint64_t poisson_ptrs(double lambda) {
        const double b = 0.931 + 2.53 * std::sqrt(lambda);
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double vr = 0.9277 - 3.6224 / (b - 2.0);
        const double log_lambda = std::log(lambda);
        for (;;) {
            double u = next_double() - 0.5;
            double v = next_double();
            double us = 0.5 - std::fabs(u);
            double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
            if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
            if (k < 0.0 || (us < 0.013 && v > us)) continue;
            if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
                k * log_lambda - lambda - std::lgamma(k + 1.0)) {
                return static_cast<std::uint64_t>(k);
            }
        }
    }

    std::uint64_t state_;
    std::uint64_t gamma_;
    std::uint64_t seed_;
    std::uint64_t stream_;
};

}  // namespace ginitree
