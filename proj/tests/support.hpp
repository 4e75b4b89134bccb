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

#ifndef EGSOLVE_TESTS_SUPPORT_HPP
#define EGSOLVE_TESTS_SUPPORT_HPP

#include <limits>
#include <queue>
#include <random>
#include <vector>

#include <egsolve/arena.hpp>
#include <egsolve/oracle.hpp>

namespace eg::test {

inline Weight wt(std::int64_t v) { return Weight(v); }
inline Weight winf() { return Weight::infinity(); }

/// The three-vertex fixture: a=0 (Min), b=1 (Max), c=2 (Min) with energy
/// values a=2, b=5, c=0.
inline Arena make_g3() {
    Arena a;
    a.add_vertex(Player::Min); // a
    a.add_vertex(Player::Max); // b
    a.add_vertex(Player::Min); // c
    a.add_edge(0, 2, wt(2));
    a.add_edge(0, 1, wt(0));
    a.add_edge(1, 2, wt(5));
    a.add_edge(1, 0, wt(1));
    a.add_edge(2, 0, wt(-3));
    return a;
}

/// Deterministic random arena that is simple, by rejection sampling over
/// the seed stream (exhaustive zero-cycle search, so keep n small).
inline Arena random_simple_arena(std::uint32_t n, std::uint32_t m, std::int64_t max_weight,
                                 std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Arena a = generate_random(n, m, max_weight, seed + 0x9e3779b97f4a7c15ULL * attempt);
        if (!find_zero_sum_cycle(a)) return a;
    }
}

/// Reference shortest-path computation for arenas where every vertex is
/// Min: plain multi-target Dijkstra to the seed set over the non-negative
/// edges, independent of the game implementation.
inline std::vector<Weight> reference_all_min_en_plus(const Arena& arena) {
    const std::uint32_t n = static_cast<std::uint32_t>(arena.vertex_count());
    constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(n, kUnreached);

    using Entry = std::pair<std::int64_t, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (std::uint32_t v = 0; v < n; ++v) {
        bool negative_edge = false;
        for (std::uint32_t e : arena.out_edges(v)) negative_edge |= arena.edge(e).weight.negative();
        if (negative_edge) {
            dist[v] = 0;
            heap.push({0, v});
        }
    }
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) continue;
        for (std::uint32_t e : arena.in_edges(v)) {
            const Edge& edge = arena.edge(e);
            if (dist[edge.src] == 0) continue; // paths end at the seed set
            if (!edge.weight.finite() || edge.weight.negative()) continue;
            std::int64_t cand = d + edge.weight.value();
            if (cand < dist[edge.src]) {
                dist[edge.src] = cand;
                heap.push({cand, edge.src});
            }
        }
    }

    std::vector<Weight> out(n);
    for (std::uint32_t v = 0; v < n; ++v)
        out[v] = dist[v] == kUnreached ? Weight::infinity() : Weight(dist[v]);
    return out;
}

/// Random ultimately periodic word; infinite weights appear occasionally.
inline UltimatelyPeriodicWord random_word(std::mt19937_64& rng, std::size_t max_len = 6,
                                          std::int64_t max_weight = 5, bool allow_inf = true) {
    auto pick_weight = [&]() -> Weight {
        if (allow_inf && rng() % 16 == 0) return Weight::infinity();
        return Weight(static_cast<std::int64_t>(rng() % (2 * max_weight + 1)) - max_weight);
    };
    UltimatelyPeriodicWord w;
    std::size_t plen = rng() % (max_len + 1);
    std::size_t clen = 1 + rng() % max_len;
    for (std::size_t i = 0; i < plen; ++i) w.prefix.push_back(pick_weight());
    for (std::size_t i = 0; i < clen; ++i) w.cycle.push_back(pick_weight());
    return w;
}

} // namespace eg::test

#endif
