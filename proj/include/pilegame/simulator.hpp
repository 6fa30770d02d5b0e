#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pilegame/rng.hpp"

namespace pilegame {

enum class Player : char { R = 'R', D = 'D' };

struct Move {
    Player player;
    std::uint64_t removed;
    std::uint64_t remaining;

    friend bool operator==(const Move&, const Move&) = default;
};

struct GameTranscript {
    std::uint64_t initial_n = 0;
    std::vector<Move> moves;
    Player winner = Player::R;
    std::uint64_t r_steps = 0;
};

/// Anything that yields a uniform draw on {1..m}.
template <typename S>
concept DrawSource = requires(S& s, std::uint64_t m) {
    { s.draw_uniform(m) } -> std::convertible_to<std::uint64_t>;
};

namespace detail {

struct NoRecord {
    void operator()(Player, std::uint64_t, std::uint64_t) const {}
};

// Plays one game from the rules; returns (winner, number of R moves).
template <DrawSource Source, typename Record>
std::pair<Player, std::uint64_t> play(std::uint64_t n, Source& src, Record&& record) {
    if (n == 0) throw std::invalid_argument("play_game requires a pile of at least 1");
    std::uint64_t pile = n;
    std::uint64_t r_steps = 0;
    for (;;) {
        const std::uint64_t k = src.draw_uniform(pile);
        if (k < 1 || k > pile) throw std::logic_error("draw source returned value outside {1..m}");
        pile -= k;
        ++r_steps;
        record(Player::R, k, pile);
        if (pile == 0) return {Player::R, r_steps};

        pile -= 1;
        record(Player::D, 1, pile);
        if (pile == 0) return {Player::D, r_steps};
    }
}

}  // namespace detail

template <DrawSource Source>
GameTranscript play_game(std::uint64_t n, Source& src) {
    GameTranscript t;
    t.initial_n = n;
    auto [winner, steps] = detail::play(n, src, [&t](Player p, std::uint64_t removed, std::uint64_t remaining) {
        t.moves.push_back(Move{p, removed, remaining});
    });
    t.winner = winner;
    t.r_steps = steps;
    return t;
}

struct SimResult {
    std::uint64_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t d_wins = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double ci_level = 0.99;
    double mean_r_steps = 0.0;
    double sd_r_steps = 0.0;  // sample standard deviation of r_steps
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

/// Seed of worker `i`'s private stream.
constexpr std::uint64_t worker_seed(std::uint64_t seed, unsigned i) { return splitmix64(seed ^ (std::uint64_t{i} + 1)); }

/// Two-sided normal quantile for the supported levels {0.90, 0.95, 0.99, 0.999}.
double z_for_level(double ci_level);

std::pair<double, double> wilson_interval(std::uint64_t wins, std::uint64_t trials, double ci_level);

/*
 * Plays `trials` games split into `workers` contiguous blocks, each driven
 * by its own stream, and merges the counts.  Output depends only on the
 * arguments; `parallel = false` runs the same partition on one thread.
 */
SimResult run_trials(std::uint64_t n, std::uint64_t trials, std::uint64_t seed, unsigned workers = 1,
                     double ci_level = 0.99, bool parallel = true);

}  // namespace pilegame
