#pragma once

// Deterministic randomness. All draws go through explicit algorithms
// (rejection sampling, Fisher-Yates) on top of mt19937_64 so that seeded
// results are reproducible across standard libraries and platforms;
// std::uniform_int_distribution and std::shuffle are implementation-defined.

#include <cstdint>
#include <random>
#include <vector>

namespace mmcc {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, bound), bound >= 1. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t threshold = (0ULL - bound) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = gen_();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Deterministic substream seed for (base, stream) pairs.
    static std::uint64_t derive(std::uint64_t base, std::uint64_t stream) {
        return splitmix64(base ^ splitmix64(stream + 0x51ed270b7a3fca2dULL));
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace mmcc
