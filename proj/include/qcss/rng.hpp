#pragma once

#include <cmath>
#include <cstdint>

namespace qcss {

// Seeded, splittable deterministic generator: xoshiro256++ with splitmix64
// state expansion. One stream per trial; split(i) derives the stream for
// trial index i so that results are reproducible and order-independent.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {
        std::uint64_t x = seed;
        for (auto& word : s_) word = splitmix64(x);
    }

    Rng split(std::uint64_t stream) const {
        // Child seed is seed + index; splitmix state expansion decorrelates
        // adjacent indices.
        return Rng(seed_ + stream);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    int coin_pm() { return (next_u64() & 1u) ? -1 : +1; }

    std::uint64_t next_below(std::uint64_t n) {
        // Rejection-free modulo is fine at our scales; bias < 2^-40 for n < 2^24.
        return next_u64() % n;
    }

    // Number of failures before the next success of a Bernoulli(p) process.
    // Used to skip runs of error-free sites when p is small.
    std::uint64_t geometric_skip(double p) {
        if (p <= 0.0) return ~std::uint64_t{0};
        if (p >= 1.0) return 0;
        double u = next_double();
        while (u <= 0.0) u = next_double();
        return static_cast<std::uint64_t>(std::log(u) / std::log1p(-p));
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::uint64_t s_[4] = {};
    std::uint64_t base_mix_ = 0;
};

}  // namespace qcss
