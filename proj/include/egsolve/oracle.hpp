/*
 * Copyright 2026 The egsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EGSOLVE_ORACLE_HPP
#define EGSOLVE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <egsolve/arena.hpp>
#include <egsolve/weight.hpp>

namespace eg {

enum class Valuation : std::uint8_t { MeanPayoff, Energy, EnergyPlus, EnergyMinus };

/**
 * An infinite weight word given as prefix followed by a repeated cycle.
 * Weights are finite or +inf; the cycle must be nonempty.
 */
struct UltimatelyPeriodicWord {
    std::vector<Weight> prefix;
    std::vector<Weight> cycle;
};

/// Mean payoff of an ultimately periodic word: the cycle average, exact.
struct MeanPayoffValue {
    bool infinite = false;    // +inf (an infinite weight occurs in the word)
    std::int64_t num = 0;
    std::int64_t den = 1;     // > 0

    int sign() const { return infinite ? 1 : (num > 0) - (num < 0); }
    double as_double() const;
    friend bool operator==(const MeanPayoffValue&, const MeanPayoffValue&);
};

MeanPayoffValue evaluate_mp(const UltimatelyPeriodicWord& word);

/// Energy-style valuations of an ultimately periodic word:
///  - Energy: sup of the prefix sums; +inf iff the cycle sum is positive,
///    otherwise one cycle copy after the prefix realises the sup.
///  - EnergyPlus: sum of the weights before the first negative one.
///  - EnergyMinus: sum of the weights before the first positive one,
///    in [-inf, 0].
/// MeanPayoff is served by evaluate_mp; passing it here throws.
Weight evaluate(const UltimatelyPeriodicWord& word, Valuation which);

/**
 * Least fixed point of the energy lifting f(v) = opt over edges vv' of
 * max(0, w(vv') + f(v')), min for Min vertices and max for Max vertices,
 * by round-robin sweeps with values capped at (n-1)*W + 1. Capped entries
 * are reported as +inf. Works on arbitrary validated arenas, simple or
 * not. Deliberately naive; this is the ground truth the solver is checked
 * against.
 */
std::vector<Weight> value_iteration_en(const Arena& arena);

/// Product over one player's vertices of their out-degrees; saturates at
/// the given limit. Used to decide whether brute force is feasible.
std::uint64_t strategy_count(const Arena& arena, Player player, std::uint64_t cap);

/**
 * Exhaustive ground truth: enumerate all positional strategy pairs, follow
 * each induced ultimately periodic play, evaluate, and take min over Min
 * strategies of max over Max strategies. Throws ValueError when the
 * strategy-pair count exceeds pair_limit.
 */
std::vector<Weight> brute_force_value(const Arena& arena, Valuation which,
                                      std::uint64_t pair_limit = 1'000'000);
std::vector<Weight> brute_force_en(const Arena& arena, std::uint64_t pair_limit = 1'000'000);

/// Exact mean-payoff values by strategy-pair enumeration.
std::vector<MeanPayoffValue> brute_force_mp(const Arena& arena,
                                            std::uint64_t pair_limit = 1'000'000);

/// An energy-optimal positional Min strategy found by enumeration: its
/// worst-case play value matches the game value at every vertex.
Strategy brute_force_optimal_min_strategy(const Arena& arena,
                                          std::uint64_t pair_limit = 1'000'000);

struct StrategyCounterexample {
    std::uint32_t vertex;
    Weight achieved;
    Weight claimed;
};

/**
 * Checks a strategy against claimed energy values: the strategy player's
 * vertices keep only the chosen edge, the opponent keeps everything, and
 * value iteration on that one-player game must confirm every claim
 * (achieved <= claimed for a Min strategy, >= for a Max strategy).
 */
std::optional<StrategyCounterexample> verify_strategy(
    const Arena& arena, const Strategy& strategy,
    const std::vector<std::pair<std::uint32_t, Weight>>& claimed);

} // namespace eg

#endif
