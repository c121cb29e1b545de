#pragma once

#include <cstdint>
#include <span>

namespace aos {

/// xoshiro256++ generator seeded through splitmix64.
///
/// Hand-rolled so that draws are bit-identical across platforms and standard
/// libraries; std::* distributions make no such promise. Every stochastic
/// component of the library (arrivals, weight transitions, schedulers) pulls
/// from an Rng, and simulations derive one independent stream per node plus
/// one for the scheduler from a single master seed.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& w : state_) w = splitmix64(x);
    }

    /// Independent substream `stream_id` of a master seed. Streams with
    /// different ids are decorrelated by an extra splitmix64 scramble.
    static Rng stream(uint64_t master_seed, uint64_t stream_id) {
        uint64_t x = master_seed;
        uint64_t h = splitmix64(x);
        return Rng(h ^ (0x9E3779B97F4A7C15ull * (stream_id + 0x632BE59BD9B4E019ull)));
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    /// Unbiased uniform integer in [0, n). Rejection sampling, n >= 1.
    uint64_t uniform_below(uint64_t n) {
        const uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    /// Draw an index from a probability vector by walking the cumulative sum.
    int sample_categorical(std::span<const double> probs) {
        const double u = next_double();
        double acc = 0.0;
        for (size_t i = 0; i + 1 < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(probs.size()) - 1;
    }

private:
    static uint64_t splitmix64(uint64_t& x) {
        x += 0x9E3779B97F4A7C15ull;
        uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t state_[4];
};

}  // namespace aos
