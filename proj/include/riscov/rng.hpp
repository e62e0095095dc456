#ifndef RISCOV_RNG_HPP
#define RISCOV_RNG_HPP

#include <cmath>
#include <cstdint>

namespace riscov {

// Counter-derived random streams: stream(master, index) expands the pair
// through SplitMix64 into xoshiro256++ state, so any trial can be generated
// independently of execution order or worker count.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : master_seed_(master_seed) {
        std::uint64_t x = master_seed ^ (stream_index * 0x9E3779B97F4A7C15ULL);
        for (auto& word : state_) word = splitmix64(x);
        // avoid the all-zero state (master==0, index==0 cannot reach it, but
        // keep the guard cheap and unconditional)
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
            state_[0] = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t master_seed() const { return master_seed_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform on [0,1) with 53 random bits
    double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Poisson sample; Knuth's product method below the threshold, Hormann's
    // PTRS transformed rejection above it.
    std::uint64_t poisson(double mean) {
        if (mean <= 0.0) return 0;
        if (mean <= 30.0) {
            const double limit = std::exp(-mean);
            std::uint64_t k = 0;
            double p = uniform01();
            while (p > limit) {
                ++k;
                p *= uniform01();
            }
            return k;
        }
        return poisson_ptrs(mean);
    }

    // Unit-mean Nakagami power gain: Gamma(shape m, scale 1/m) for integer m,
    // sampled as the normalized log of a product of m uniforms.
    double gamma_unit_mean(int m) {
        double prod = 1.0;
        for (int i = 0; i < m; ++i) prod *= positive_uniform();
        return -std::log(prod) / m;
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }
    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double positive_uniform() {
        double u;
        do { u = uniform01(); } while (u == 0.0);
        return u;
    }

    std::uint64_t poisson_ptrs(double mean) {
        const double slam = std::sqrt(mean);
        const double loglam = std::log(mean);
        const double b = 0.931 + 2.53 * slam;
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double v_r = 0.9277 - 3.6224 / (b - 2.0);
        for (;;) {
            const double u = uniform01() - 0.5;
            const double v = uniform01();
            const double us = 0.5 - std::abs(u);
            const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
            if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
            if (kf < 0.0 || (us < 0.013 && v > us)) continue;
            if (std::log(v) + std::log(inv_alpha) -
                    std::log(a / (us * us) + b) <=
                kf * loglam - mean - std::lgamma(kf + 1.0))
                return static_cast<std::uint64_t>(kf);
        }
    }

    std::uint64_t state_[4];
    std::uint64_t master_seed_;
};

} // namespace riscov

#endif
