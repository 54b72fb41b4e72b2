#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace docuforge {

// xoshiro256++ with splitmix64 seeding. The standard <random> engines are
// portable but the distributions are not, and training checkpoints must
// replay bit-exactly, so all randomness in the project goes through this.
class Rng {
  public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& w : s_) w = splitmix64(x);
    }

    // Independent substream for (seed, stream), e.g. one per dataset image.
    static Rng derive(uint64_t seed, uint64_t stream) {
        uint64_t x = seed;
        uint64_t a = splitmix64(x);
        uint64_t y = stream + 0x9e3779b97f4a7c15ULL;
        uint64_t b = splitmix64(y);
        return Rng(a ^ (b + 0x2545f4914f6cdd1dULL));
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller; consumes two uniforms per call, keeps no cached state.
    double normal(double mean = 0.0, double stddev = 1.0) {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Uniform integer in [0, n), rejection sampled.
    uint64_t randint(uint64_t n) {
        if (n == 0) return 0;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    bool coin() { return (next() >> 63) != 0; }

    std::array<uint64_t, 4> state() const { return s_; }
    void set_state(const std::array<uint64_t, 4>& s) { s_ = s; }

  private:
    static uint64_t splitmix64(uint64_t& x) {
        uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<uint64_t, 4> s_{};
};

}  // namespace docuforge
