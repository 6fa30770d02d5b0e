#include "pilegame/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <thread>

namespace pilegame {

namespace {

struct LevelZ {
    double level;
    double z;
};

constexpr std::array<LevelZ, 4> kZTable{{
    {0.90, 1.6448536269514722},
    {0.95, 1.959963984540054},
    {0.99, 2.5758293035489004},
    {0.999, 3.2905267314919255},
}};

struct BlockStats {
    std::uint64_t games = 0;
    std::uint64_t d_wins = 0;
    std::uint64_t steps = 0;
    std::uint64_t steps_sq = 0;

    BlockStats& operator+=(const BlockStats& o) {
        games += o.games;
        d_wins += o.d_wins;
        steps += o.steps;
        steps_sq += o.steps_sq;
        return *this;
    }
};

BlockStats run_block(std::uint64_t n, std::uint64_t games, std::uint64_t stream_seed) {
    Xoshiro256ss rng(stream_seed);
    BlockStats s;
    s.games = games;
    for (std::uint64_t g = 0; g < games; ++g) {
        auto [winner, steps] = detail::play(n, rng, detail::NoRecord{});
        if (winner == Player::D) ++s.d_wins;
        s.steps += steps;
        s.steps_sq += steps * steps;
    }
    return s;
}

}  // namespace

double z_for_level(double ci_level) {
    for (const auto& e : kZTable)
        if (std::fabs(e.level - ci_level) < 1e-12) return e.z;
    throw std::invalid_argument("unsupported ci level " + std::to_string(ci_level) +
                                " (supported: 0.90, 0.95, 0.99, 0.999)");
}

std::pair<double, double> wilson_interval(std::uint64_t wins, std::uint64_t trials, double ci_level) {
    if (trials == 0) throw std::invalid_argument("wilson_interval requires trials >= 1");
    if (wins > trials) throw std::invalid_argument("wilson_interval: wins exceed trials");
    const double z = z_for_level(ci_level);
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(wins) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));

    double low = wins == 0 ? 0.0 : std::clamp(center - half, 0.0, p);
    double high = wins == trials ? 1.0 : std::clamp(center + half, p, 1.0);
    return {low, high};
}

SimResult run_trials(std::uint64_t n, std::uint64_t trials, std::uint64_t seed, unsigned workers, double ci_level,
                     bool parallel) {
    if (n == 0) throw std::invalid_argument("run_trials requires n >= 1");
    if (trials == 0) throw std::invalid_argument("run_trials requires trials >= 1");
    if (workers == 0) throw std::invalid_argument("run_trials requires workers >= 1");
    z_for_level(ci_level);  // reject unsupported levels before doing any work

    std::vector<BlockStats> blocks(workers);
    auto block_size = [&](unsigned i) { return trials / workers + (i < trials % workers ? 1 : 0); };

    if (parallel && workers > 1) {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned i = 0; i < workers; ++i)
            threads.emplace_back([&, i] { blocks[i] = run_block(n, block_size(i), worker_seed(seed, i)); });
    } else {
        for (unsigned i = 0; i < workers; ++i) blocks[i] = run_block(n, block_size(i), worker_seed(seed, i));
    }

    BlockStats total;
    for (const auto& b : blocks) total += b;

    SimResult r;
    r.n = n;
    r.trials = trials;
    r.d_wins = total.d_wins;
    r.p_hat = static_cast<double>(total.d_wins) / static_cast<double>(trials);
    std::tie(r.ci_low, r.ci_high) = wilson_interval(total.d_wins, trials, ci_level);
    r.ci_level = ci_level;
    const double t = static_cast<double>(trials);
    r.mean_r_steps = static_cast<double>(total.steps) / t;
    if (trials > 1) {
        double var = (static_cast<double>(total.steps_sq) - t * r.mean_r_steps * r.mean_r_steps) / (t - 1.0);
        r.sd_r_steps = std::sqrt(std::max(var, 0.0));
    }
    r.seed = seed;
    r.workers = workers;
    return r;
}

}  // namespace pilegame
