#include "pilegame/oracle.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace pilegame {

namespace {

enum class Turn { R, D };

struct NodeValue {
    Rational d_win;  // probability D wins from this node
    Rational steps;  // expected R moves still to come
};

void check_weights(const Rational& total, std::size_t pile) {
    if (total != Rational(1))
        throw std::logic_error("branch weights at R node with pile " + std::to_string(pile) + " sum to " +
                               total.to_string());
}

class MemoEvaluator {
public:
    NodeValue eval(std::size_t pile, Turn turn) {
        auto key = std::make_pair(pile, turn);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        NodeValue v = turn == Turn::R ? eval_r(pile) : eval_d(pile);
        cache_.emplace(key, v);
        return v;
    }

private:
    NodeValue eval_r(std::size_t pile) {
        const Rational w(1, static_cast<long>(pile));
        Rational total(0);
        NodeValue v{Rational(0), Rational(0)};
        for (std::size_t k = 1; k <= pile; ++k) {
            total += w;
            if (k == pile) {
                v.steps += w;  // R clears and wins
                continue;
            }
            NodeValue child = eval(pile - k, Turn::D);
            v.d_win += w * child.d_win;
            v.steps += w * (Rational(1) + child.steps);
        }
        check_weights(total, pile);
        return v;
    }

    NodeValue eval_d(std::size_t pile) {
        if (pile == 1) return {Rational(1), Rational(0)};
        return eval(pile - 1, Turn::R);
    }

    std::map<std::pair<std::size_t, Turn>, NodeValue> cache_;
};

// Depth-first over every play; each leaf contributes weight and weight * r_moves.
class PathEnumerator {
public:
    void walk(std::size_t pile, Turn turn, const Rational& weight, long r_moves) {
        if (turn == Turn::D) {
            if (pile == 1) {
                leaf(weight, r_moves, true);
                return;
            }
            walk(pile - 1, Turn::R, weight, r_moves);
            return;
        }
        const Rational branch(1, static_cast<long>(pile));
        Rational total(0);
        for (std::size_t k = 1; k <= pile; ++k) {
            total += branch;
            const Rational w = weight * branch;
            if (k == pile)
                leaf(w, r_moves + 1, false);
            else
                walk(pile - k, Turn::D, w, r_moves + 1);
        }
        check_weights(total, pile);
    }

    Rational d_win{0};
    Rational steps{0};
    Rational mass{0};

private:
    void leaf(const Rational& w, long r_moves, bool d_wins) {
        mass += w;
        if (d_wins) d_win += w;
        steps += w * Rational(r_moves);
    }
};

void check_limit(std::size_t n, OracleMode mode) {
    const std::size_t limit = oracle_depth_limit(mode);
    if (n > limit)
        throw std::out_of_range("oracle: n=" + std::to_string(n) + " exceeds depth limit " + std::to_string(limit));
}

}  // namespace

std::size_t oracle_depth_limit(OracleMode mode) {
    return mode == OracleMode::memoized ? kOracleMaxMemoized : kOracleMaxExhaustive;
}

OracleResult oracle_evaluate(std::size_t n, OracleMode mode) {
    check_limit(n, mode);
    if (n == 0) return OracleResult{0, ExactProb(Rational(1)), Rational(0)};

    if (mode == OracleMode::memoized) {
        MemoEvaluator ev;
        NodeValue v = ev.eval(n, Turn::R);
        return OracleResult{n, ExactProb(v.d_win), v.steps};
    }
    PathEnumerator pe;
    pe.walk(n, Turn::R, Rational(1), 0);
    if (pe.mass != Rational(1)) throw std::logic_error("oracle: leaf probabilities sum to " + pe.mass.to_string());
    return OracleResult{n, ExactProb(pe.d_win), pe.steps};
}

ExactProb oracle_win_prob(std::size_t n, OracleMode mode) { return oracle_evaluate(n, mode).d_win_prob; }

Rational oracle_expected_steps(std::size_t n, OracleMode mode) {
    if (n == 0) throw std::invalid_argument("oracle_expected_steps requires n >= 1");
    return oracle_evaluate(n, mode).expected_r_steps;
}

}  // namespace pilegame
