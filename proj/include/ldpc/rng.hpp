#ifndef LDPC_RNG_HPP
#define LDPC_RNG_HPP

#include <cstdint>

namespace ldpc {

// splitmix64 step; used for seeding and for stream splitting.
inline constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Stream splitting: trial/worker t of a run with a given master seed draws from
// an independent generator seeded with derive_seed(master, t). Constant time,
// identical regardless of how trials are scheduled across threads.
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master + 0x9e3779b97f4a7c15ull * (stream + 1);
    return splitmix64(s);
}

// xoshiro256** seeded through splitmix64. Self-contained so that sampled
// configurations are bit-identical across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        for (auto& word : state_) word = splitmix64(seed);
    }

    std::uint64_t next_u64() {
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

    // Uniform in [0, bound) by rejection; unbiased.
    std::uint64_t bounded(std::uint64_t bound) {
        const std::uint64_t threshold = (~bound + 1) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4] = {};
};

}  // namespace ldpc

#endif
