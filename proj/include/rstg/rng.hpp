#pragma once

#include <cstdint>

namespace rstg {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// xoshiro256** keyed by (master_seed, stream_index). Every trial owns its own
// stream, so results do not depend on the order trials are scheduled in.
// Output is bit-identical across platforms: no std:: distributions are used.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : master_(master_seed), stream_(stream_index) {
        std::uint64_t sm = master_seed;
        std::uint64_t key = splitmix64(sm);
        std::uint64_t mix = key ^ (stream_index * 0xD1B54A32D192ED03ull);
        std::uint64_t seeder = splitmix64(mix);
        for (auto& w : s_) w = splitmix64(seeder);
    }

    std::uint64_t master_seed() const { return master_; }
    std::uint64_t stream_index() const { return stream_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on the grid {k * 2^-53 : 0 <= k < 2^53}, a subset of [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound), bound > 0 (Lemire's rejection method).
    std::uint64_t below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t master_;
    std::uint64_t stream_;
    std::uint64_t s_[4];
};

}  // namespace rstg
