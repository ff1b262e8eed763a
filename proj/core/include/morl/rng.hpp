#ifndef MORL_RNG_HPP
#define MORL_RNG_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace morl {

/// Deterministic 64-bit generator (xoshiro256**) with splitmix64 seeding.
///
/// All randomness in the library flows through this class so that runs are
/// reproducible bit-for-bit across platforms; the standard <random>
/// distributions are implementation-defined and are deliberately not used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : state_) s = splitmix64(x);
    }

    /// Derives an independent stream from (seed, stream id) without sharing
    /// state with any other stream.
    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
        std::uint64_t x = seed;
        std::uint64_t a = splitmix64(x);
        x ^= 0x9e3779b97f4a7c15ULL * (stream_id + 1);
        return Rng(a ^ splitmix64(x));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). Unbiased via rejection.
    std::uint64_t uniform_int(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("uniform_int: n must be positive");
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    /// Samples an index from an unnormalized non-negative weight vector by
    /// CDF inversion. The last positive entry absorbs rounding slack.
    int categorical(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        if (!(total > 0.0)) throw std::invalid_argument("categorical: weights must have positive mass");
        double u = uniform() * total;
        int last_positive = 0;
        for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
            if (weights[i] > 0.0) last_positive = i;
            u -= weights[i];
            if (u < 0.0) return i;
        }
        return last_positive;
    }

    /// Standard normal via Box-Muller (one value per call; no caching so the
    /// draw count stays predictable).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace morl

#endif  // MORL_RNG_HPP
