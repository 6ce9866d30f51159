// random.hpp - Seed mixing and portable uniform draws.
#ifndef HQP_RANDOM_HPP
#define HQP_RANDOM_HPP

#include <cstdint>
#include <random>

namespace hqp::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent stream id from a base seed and a stream index.
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed * 0x9e3779b97f4a7c15ULL ^ splitmix64(stream));
}

// mt19937_64 wrapper with distribution-free draws so that sequences are
// identical across standard library implementations.
class Prng {
  public:
    explicit Prng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform integer in [0, bound), bound >= 1. Rejection against modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform real in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool coin() { return (gen_() & 1u) != 0; }

  private:
    std::mt19937_64 gen_;
};

} // namespace hqp::rng

#endif
