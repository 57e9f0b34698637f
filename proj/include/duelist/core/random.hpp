#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace duelist::core {

/// SplitMix64 step generator, used to expand 64-bit seeds into full
/// xoshiro state and to derive independent sub-stream seeds.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

/// One-step SplitMix64 hash of a 64-bit value.
inline std::uint64_t splitmix_hash(std::uint64_t x) {
    return SplitMix64(x).next();
}

/// Deterministic random stream backed by xoshiro256**.
///
/// The generator identity is pinned: a given seed produces the same draw
/// sequence on every platform and build, so populations, duel outcomes and
/// full traces replay bit-for-bit. Instances are single-owner; never share
/// one stream across threads.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_)
            word = sm.next();
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5ULL, 7) * 9ULL;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
    }

    /// True with probability p. Always consumes exactly one draw.
    bool next_bernoulli(double p) { return next_unit() < p; }

    /// Unbiased uniform integer in [0, bound). bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x < threshold);
        return x % bound;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_;
};

/// Seed for a named sub-stream of a run seed. Lets one run own several
/// independent streams (e.g. population init vs. operator draws) so that
/// two algorithms given the same seed build identical initial populations.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_tag) {
    return splitmix_hash(seed ^ splitmix_hash(stream_tag));
}

/// Fisher-Yates permutation of 0..n-1 drawn from the stream.
inline std::vector<std::size_t> shuffled_indices(std::size_t n, RandomStream& rng) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(order[i - 1], order[j]);
    }
    return order;
}

} // namespace duelist::core
