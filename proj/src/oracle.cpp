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

#include <egsolve/oracle.hpp>

#include <algorithm>
#include <numeric>

namespace eg {

double MeanPayoffValue::as_double() const {
    if (infinite) return std::numeric_limits<double>::infinity();
    return static_cast<double>(num) / static_cast<double>(den);
}

bool operator==(const MeanPayoffValue& a, const MeanPayoffValue& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    // both stored in lowest terms with positive denominator
    return a.num == b.num && a.den == b.den;
}

MeanPayoffValue evaluate_mp(const UltimatelyPeriodicWord& word) {
    if (word.cycle.empty()) throw ValueError("word cycle must be nonempty");
    MeanPayoffValue mp;
    for (Weight w : word.prefix)
        if (!w.finite()) mp.infinite = true;
    std::int64_t sum = 0;
    for (Weight w : word.cycle) {
        if (!w.finite()) {
            mp.infinite = true;
            return mp;
        }
        sum = checked_add(sum, w.value());
    }
    if (mp.infinite) return mp;
    std::int64_t den = static_cast<std::int64_t>(word.cycle.size());
    std::int64_t g = std::gcd(sum < 0 ? -sum : sum, den);
    if (g == 0) g = 1;
    mp.num = sum / g;
    mp.den = den / g;
    return mp;
}

namespace {

void check_word(const UltimatelyPeriodicWord& word) {
    if (word.cycle.empty()) throw ValueError("word cycle must be nonempty");
    for (Weight w : word.prefix)
        if (w.is_minus_inf()) throw ValueError("words admit finite and +inf weights only");
    for (Weight w : word.cycle)
        if (w.is_minus_inf()) throw ValueError("words admit finite and +inf weights only");
}

// Sum of the weights strictly before the first weight matching `stop`; the
// whole-word sum if no weight ever matches. Shared by the EnergyPlus scan
// and its EnergyMinus mirror.
Weight scan_until(const UltimatelyPeriodicWord& word, bool positive_stops) {
    auto stops = [positive_stops](Weight w) {
        return positive_stops ? w.positive() : w.negative();
    };
    Weight sum(0);
    for (Weight w : word.prefix) {
        if (stops(w)) return sum;
        sum += w;
    }
    Weight cycle_sum(0);
    for (Weight w : word.cycle) {
        if (stops(w)) return sum;
        sum += w;
        cycle_sum += w;
    }
    // No stopping weight anywhere: the word's sum is the series limit.
    if (cycle_sum.is_zero()) return sum - cycle_sum; // all-zero cycle; undo the copy
    return cycle_sum.positive() ? Weight::infinity() : Weight::minus_infinity();
}

} // namespace

Weight evaluate(const UltimatelyPeriodicWord& word, Valuation which) {
    check_word(word);
    switch (which) {
    case Valuation::EnergyPlus:
        return scan_until(word, /*positive_stops=*/false);
    case Valuation::EnergyMinus:
        return scan_until(word, /*positive_stops=*/true);
    case Valuation::Energy: {
        Weight cycle_sum(0);
        for (Weight w : word.cycle) cycle_sum += w;
        if (cycle_sum.positive()) return Weight::infinity();
        // Non-positive cycle sum: later cycle copies only lower the prefix
        // sums, so the sup is reached within prefix plus one cycle copy.
        Weight best(0), sum(0);
        for (Weight w : word.prefix) {
            sum += w;
            best = max(best, sum);
        }
        for (Weight w : word.cycle) {
            sum += w;
            best = max(best, sum);
        }
        return best;
    }
    case Valuation::MeanPayoff:
        throw ValueError("use evaluate_mp for mean payoff");
    }
    throw ValueError("unknown valuation");
}

// ---------------------------------------------------------------------------
// Value iteration
// ---------------------------------------------------------------------------

std::vector<Weight> value_iteration_en(const Arena& arena) {
    const std::uint32_t n = static_cast<std::uint32_t>(arena.vertex_count());
    if (n == 0) return {};
    // Finite energy values are at most (n-1)*W; one unit of slack
    // distinguishes "at the bound" from "diverging".
    const std::int64_t cap =
        checked_add(checked_mul(static_cast<std::int64_t>(n) - 1, arena.max_abs_weight()), 1);

    std::vector<std::int64_t> f(n, 0);
    auto lift = [&](std::uint32_t e) -> std::int64_t {
        const Edge& edge = arena.edge(e);
        if (edge.weight.is_plus_inf()) return cap;
        if (edge.weight.is_minus_inf()) return 0;
        std::int64_t c = checked_add(edge.weight.value(), f[edge.dst]);
        return std::min(cap, std::max<std::int64_t>(0, c));
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t v = 0; v < n; ++v) {
            auto out = arena.out_edges(v);
            if (out.empty()) throw ValueError("value iteration requires a sinkless arena");
            std::int64_t best = lift(out[0]);
            for (std::size_t i = 1; i < out.size(); ++i) {
                std::int64_t c = lift(out[i]);
                best = arena.owner(v) == Player::Min ? std::min(best, c) : std::max(best, c);
            }
            if (best != f[v]) {
                f[v] = best;
                changed = true;
            }
        }
    }

    std::vector<Weight> result(n);
    for (std::uint32_t v = 0; v < n; ++v)
        result[v] = f[v] >= cap ? Weight::infinity() : Weight(f[v]);
    return result;
}

// ---------------------------------------------------------------------------
// Brute force over positional strategies
// ---------------------------------------------------------------------------

namespace {

// Mixed-radix enumeration of one player's positional strategies: an edge
// choice per owned vertex.
struct StrategyEnumerator {
    const Arena& arena;
    std::vector<std::uint32_t> vertices; // owned, ascending
    std::vector<std::uint32_t> digit;    // index into out_edges(v)

    StrategyEnumerator(const Arena& a, Player p) : arena(a) {
        for (std::uint32_t v = 0; v < a.vertex_count(); ++v)
            if (a.owner(v) == p) vertices.push_back(v);
        digit.assign(vertices.size(), 0);
    }

    std::uint32_t edge_for(std::uint32_t i) const {
        return arena.out_edges(vertices[i])[digit[i]];
    }

    bool advance() {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (++digit[i] < arena.out_degree(vertices[i])) return true;
            digit[i] = 0;
        }
        return false;
    }
};

// The play from v when both players follow their fixed choices; positional,
// hence ultimately periodic.
UltimatelyPeriodicWord induced_play(const Arena& arena, const std::vector<std::uint32_t>& choice,
                                    std::uint32_t v) {
    const std::uint32_t n = static_cast<std::uint32_t>(arena.vertex_count());
    std::vector<std::int32_t> seen_at(n, -1);
    std::vector<Weight> weights;
    std::uint32_t at = v;
    while (seen_at[at] < 0) {
        seen_at[at] = static_cast<std::int32_t>(weights.size());
        const Edge& e = arena.edge(choice[at]);
        weights.push_back(e.weight);
        at = e.dst;
    }
    UltimatelyPeriodicWord word;
    auto cycle_start = weights.begin() + seen_at[at];
    word.prefix.assign(weights.begin(), cycle_start);
    word.cycle.assign(cycle_start, weights.end());
    return word;
}

template <typename Value, typename Evaluate, typename Better>
std::vector<Value> brute_force(const Arena& arena, std::uint64_t pair_limit, Evaluate&& eval,
                               Better&& better, std::vector<std::uint32_t>* optimal_min_out) {
    const std::uint32_t n = static_cast<std::uint32_t>(arena.vertex_count());
    if (auto v = arena.validate(); !v.empty()) throw ValueError("invalid arena: " + v.front().message);

    const std::uint64_t pairs = checked_mul(
        static_cast<std::int64_t>(strategy_count(arena, Player::Min, pair_limit)),
        static_cast<std::int64_t>(strategy_count(arena, Player::Max, pair_limit)));
    if (pairs > pair_limit)
        throw ValueError("strategy-pair count exceeds the brute-force limit");

    std::vector<Value> best_of_min;
    std::vector<std::uint32_t> choice(n);

    StrategyEnumerator min_enum(arena, Player::Min);
    do {
        for (std::size_t i = 0; i < min_enum.vertices.size(); ++i)
            choice[min_enum.vertices[i]] = min_enum.edge_for(i);

        // Max's best response per vertex against this Min strategy.
        std::vector<Value> worst;
        StrategyEnumerator max_enum(arena, Player::Max);
        do {
            for (std::size_t i = 0; i < max_enum.vertices.size(); ++i)
                choice[max_enum.vertices[i]] = max_enum.edge_for(i);
            std::vector<Value> now(n);
            for (std::uint32_t v = 0; v < n; ++v) now[v] = eval(induced_play(arena, choice, v));
            if (worst.empty()) {
                worst = std::move(now);
            } else {
                for (std::uint32_t v = 0; v < n; ++v)
                    if (better(worst[v], now[v])) worst[v] = now[v]; // Max improves upward
            }
        } while (max_enum.advance());

        if (best_of_min.empty()) {
            best_of_min = worst;
        } else {
            for (std::uint32_t v = 0; v < n; ++v)
                if (better(worst[v], best_of_min[v])) best_of_min[v] = worst[v];
        }
        if (optimal_min_out) {
            // Record the strategy whenever it attains the running optimum
            // everywhere. An optimal positional strategy exists, processing
            // it settles the optimum, so the last recording is optimal.
            bool attains = true;
            for (std::uint32_t v = 0; v < n && attains; ++v)
                attains = !better(worst[v], best_of_min[v]) && !better(best_of_min[v], worst[v]);
            if (attains) {
                optimal_min_out->assign(n, Strategy::kNoChoice);
                for (std::size_t i = 0; i < min_enum.vertices.size(); ++i)
                    (*optimal_min_out)[min_enum.vertices[i]] = min_enum.edge_for(i);
            }
        }
    } while (min_enum.advance());

    return best_of_min;
}

} // namespace

std::uint64_t strategy_count(const Arena& arena, Player player, std::uint64_t cap) {
    std::uint64_t count = 1;
    for (std::uint32_t v = 0; v < arena.vertex_count(); ++v) {
        if (arena.owner(v) != player) continue;
        count *= std::max<std::uint64_t>(1, arena.out_degree(v));
        if (count >= cap) return cap;
    }
    return count;
}

std::vector<Weight> brute_force_value(const Arena& arena, Valuation which,
                                      std::uint64_t pair_limit) {
    if (which == Valuation::MeanPayoff)
        throw ValueError("use brute_force_mp for mean payoff");
    return brute_force<Weight>(
        arena, pair_limit, [which](const UltimatelyPeriodicWord& w) { return evaluate(w, which); },
        [](Weight current, Weight candidate) { return current < candidate; }, nullptr);
}

std::vector<Weight> brute_force_en(const Arena& arena, std::uint64_t pair_limit) {
    return brute_force_value(arena, Valuation::Energy, pair_limit);
}

std::vector<MeanPayoffValue> brute_force_mp(const Arena& arena, std::uint64_t pair_limit) {
    auto better = [](const MeanPayoffValue& cur, const MeanPayoffValue& cand) {
        if (cur.infinite || cand.infinite) return !cur.infinite && cand.infinite;
        // cand > cur as fractions, cross-multiplied (denominators positive)
        return checked_mul(cand.num, cur.den) > checked_mul(cur.num, cand.den);
    };
    return brute_force<MeanPayoffValue>(
        arena, pair_limit, [](const UltimatelyPeriodicWord& w) { return evaluate_mp(w); }, better,
        nullptr);
}

Strategy brute_force_optimal_min_strategy(const Arena& arena, std::uint64_t pair_limit) {
    std::vector<std::uint32_t> choices;
    brute_force<Weight>(
        arena, pair_limit,
        [](const UltimatelyPeriodicWord& w) { return evaluate(w, Valuation::Energy); },
        [](Weight current, Weight candidate) { return current < candidate; }, &choices);
    Strategy s(Player::Min, arena.vertex_count());
    s.choice = std::move(choices);
    return s;
}

// ---------------------------------------------------------------------------
// Strategy verification
// ---------------------------------------------------------------------------

std::optional<StrategyCounterexample> verify_strategy(
    const Arena& arena, const Strategy& strategy,
    const std::vector<std::pair<std::uint32_t, Weight>>& claimed) {
    if (!strategy.total_for(arena)) throw ValueError("strategy is not total for its player");

    // One-player game: the strategy player keeps only the chosen edge.
    Arena restricted;
    for (std::uint32_t v = 0; v < arena.vertex_count(); ++v) restricted.add_vertex(arena.owner(v));
    for (std::uint32_t v = 0; v < arena.vertex_count(); ++v) {
        if (arena.owner(v) == strategy.player) {
            const Edge& e = arena.edge(strategy.edge_at(v));
            restricted.add_edge(e.src, e.dst, e.weight);
        } else {
            for (std::uint32_t eid : arena.out_edges(v)) {
                const Edge& e = arena.edge(eid);
                restricted.add_edge(e.src, e.dst, e.weight);
            }
        }
    }

    std::vector<Weight> achieved = value_iteration_en(restricted);
    for (auto [v, claim] : claimed) {
        bool ok = strategy.player == Player::Min ? achieved.at(v) <= claim : achieved.at(v) >= claim;
        if (!ok) return StrategyCounterexample{v, achieved.at(v), claim};
    }
    return std::nullopt;
}

} // namespace eg
