#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace pilegame {

/// One splitmix64 output for state `x` (the state is advanced once first).
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}
    constexpr std::uint64_t next() {
        std::uint64_t out = splitmix64(state_);
        state_ += 0x9e3779b97f4a7c15ULL;
        return out;
    }

private:
    std::uint64_t state_;
};

/*
 * xoshiro256** (Blackman & Vigna), seeded by four consecutive splitmix64
 * outputs of the user seed.
 */
class Xoshiro256ss {
public:
    using result_type = std::uint64_t;

    explicit constexpr Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    static constexpr Xoshiro256ss from_state(const std::array<std::uint64_t, 4>& s) {
        Xoshiro256ss g(0);
        g.s_ = s;
        return g;
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    constexpr result_type operator()() { return next(); }

    constexpr std::uint64_t next() {
        const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = std::rotl(s_[3], 45);
        return result;
    }

    /*
     * Uniform on {1..m}: draw the top bit_width(m-1) bits and reject values
     * >= m.  m == 1 returns 1 without consuming output.
     */
    constexpr std::uint64_t draw_uniform(std::uint64_t m) {
        if (m <= 1) return 1;
        const int bits = std::bit_width(m - 1);
        for (;;) {
            std::uint64_t x = next() >> (64 - bits);
            if (x < m) return x + 1;
        }
    }

    constexpr const std::array<std::uint64_t, 4>& state() const { return s_; }

private:
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace pilegame
