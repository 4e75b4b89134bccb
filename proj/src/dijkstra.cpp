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

#include <egsolve/dijkstra.hpp>

#include <algorithm>
#include <queue>

namespace eg {

std::vector<std::uint32_t> seed_n(const GameView& view) {
    std::vector<std::uint32_t> seed;
    const std::uint32_t n = static_cast<std::uint32_t>(view.vertex_count());
    for (std::uint32_t v = 0; v < n; ++v) {
        if (view.vertex_masked(v)) continue;
        bool any_negative = false, all_negative = true;
        for (std::uint32_t e : view.arena->out_edges(v)) {
            if (view.weight(e).negative())
                any_negative = true;
            else
                all_negative = false;
        }
        if (view.owner(v) == Player::Min ? any_negative
                                         : (all_negative && view.arena->out_degree(v) > 0))
            seed.push_back(v);
    }
    return seed;
}

std::vector<std::uint32_t> seed_n(const Arena& arena) { return seed_n(GameView(arena)); }

namespace {

struct HeapEntry {
    std::int64_t priority;
    std::uint32_t edge;

    // min-heap on (priority, edge id): deterministic tie-breaking
    friend bool operator>(const HeapEntry& a, const HeapEntry& b) {
        if (a.priority != b.priority) return a.priority > b.priority;
        return a.edge > b.edge;
    }
};

// Detects a cycle in the zero-weight subgraph induced by the unsettled
// vertices. Such a cycle proves the arena is not simple (potential
// reductions preserve cycle sums), which is exactly the situation where
// classifying the unsettled region as +inf would be unsound.
bool has_zero_cycle_among(const GameView& view, const std::vector<char>& unsettled) {
    const std::uint32_t n = static_cast<std::uint32_t>(view.vertex_count());
    std::vector<std::uint8_t> color(n, 0); // 0 white, 1 gray, 2 black
    std::vector<std::pair<std::uint32_t, std::size_t>> stack;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (!unsettled[root] || color[root] != 0) continue;
        color[root] = 1;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            const std::uint32_t v = stack.back().first;
            auto out = view.arena->out_edges(v);
            bool descended = false;
            while (stack.back().second < out.size()) {
                const std::uint32_t e = out[stack.back().second++];
                const Edge& edge = view.arena->edge(e);
                if (!unsettled[edge.dst] || !view.weight(e).is_zero()) continue;
                if (color[edge.dst] == 1) return true;
                if (color[edge.dst] == 0) {
                    color[edge.dst] = 1;
                    stack.emplace_back(edge.dst, 0);
                    descended = true;
                    break;
                }
            }
            if (!descended) {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

} // namespace

EnPlusResult compute_en_plus(const GameView& view) {
    const Arena& arena = *view.arena;
    const std::uint32_t n = static_cast<std::uint32_t>(arena.vertex_count());

    EnPlusResult result;
    result.min_strategy = Strategy(Player::Min, n);
    result.max_strategy = Strategy(Player::Max, n);
    result.values.assign(n, Weight::infinity());

    std::vector<char> in_f(n, 0);
    std::vector<std::int64_t> value(n, 0);
    // Per Max vertex: outgoing non-negative edges that do not yet lead into
    // F. Edges of weight +inf count and are never released, so a Max vertex
    // that can reach an infinite weight never closes.
    std::vector<std::uint32_t> blocking(n, 0);
    std::vector<std::uint32_t> closure_queue;
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;

    auto choose = [&](std::uint32_t v, std::uint32_t e) {
        (view.owner(v) == Player::Min ? result.min_strategy : result.max_strategy).choice[v] = e;
    };

    auto settle = [&](std::uint32_t v, std::int64_t val, std::uint32_t strategy_edge) {
        in_f[v] = 1;
        value[v] = val;
        result.values[v] = Weight(val);
        if (strategy_edge != Strategy::kNoChoice) choose(v, strategy_edge);
        for (std::uint32_t e : arena.in_edges(v)) {
            const std::uint32_t u = arena.edge(e).src;
            if (in_f[u] || view.vertex_masked(u)) continue;
            Weight w = view.weight(e);
            if (w.negative() || !w.finite()) continue;
            if (view.owner(u) == Player::Min) {
                heap.push({checked_add(val, w.value()), e});
                ++result.stats.heap_pushes;
            } else if (--blocking[u] == 0) {
                closure_queue.push_back(u);
            }
        }
    };

    for (std::uint32_t v = 0; v < n; ++v) {
        if (view.vertex_masked(v)) continue;
        for (std::uint32_t e : arena.out_edges(v))
            if (view.owner(v) == Player::Max && view.weight(e).non_negative()) ++blocking[v];
    }

    // Seed: Min forces an immediately negative edge; these have value 0.
    result.seed = seed_n(view);
    result.stats.seed_size = result.seed.size();
    for (std::uint32_t v : result.seed) {
        std::uint32_t witness = Strategy::kNoChoice;
        for (std::uint32_t e : arena.out_edges(v)) {
            bool ok = view.owner(v) == Player::Max || view.weight(e).negative();
            if (ok) {
                witness = e;
                break;
            }
        }
        settle(v, 0, witness);
    }

    std::int64_t last_extracted = 0;
    while (true) {
        // Step 1, exhaustively: close Max vertices whose non-negative edges
        // all lead into F; their value is the max over those edges.
        while (!closure_queue.empty()) {
            std::uint32_t v = closure_queue.back();
            closure_queue.pop_back();
            if (in_f[v]) continue;
            std::int64_t best = 0;
            std::uint32_t best_edge = Strategy::kNoChoice;
            for (std::uint32_t e : arena.out_edges(v)) {
                Weight w = view.weight(e);
                if (w.negative() || !w.finite()) continue;
                const std::uint32_t dst = arena.edge(e).dst;
                if (!in_f[dst]) throw InternalError("closure with an unsettled successor");
                std::int64_t cand = checked_add(w.value(), value[dst]);
                if (best_edge == Strategy::kNoChoice || cand > best) {
                    best = cand;
                    best_edge = e;
                }
            }
            if (best_edge == Strategy::kNoChoice) throw InternalError("closure without candidates");
            settle(v, best, best_edge);
            ++result.stats.closures;
        }

        // Step 2: settle the cheapest pending Min vertex.
        bool extracted = false;
        while (!heap.empty()) {
            HeapEntry top = heap.top();
            heap.pop();
            ++result.stats.heap_pops;
            const std::uint32_t v = arena.edge(top.edge).src;
            if (in_f[v]) continue; // stale entry
            if (top.priority < last_extracted)
                throw InternalError("extraction priorities regressed");
            last_extracted = top.priority;
            settle(v, top.priority, top.edge);
            ++result.stats.extractions;
            extracted = true;
            break;
        }
        if (!extracted) break;
    }

    // Everything never settled keeps value +inf; witness edges stay inside
    // the unsettled region (or ride an infinite weight).
    std::vector<char> unsettled(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        if (view.vertex_masked(v) || in_f[v]) continue;
        unsettled[v] = 1;
        std::uint32_t witness = Strategy::kNoChoice;
        for (std::uint32_t e : arena.out_edges(v)) {
            Weight w = view.weight(e);
            if (view.owner(v) == Player::Max) {
                if (w.negative()) continue;
                if (w.is_plus_inf() || !in_f[arena.edge(e).dst]) {
                    witness = e;
                    break;
                }
            } else {
                witness = e;
                break;
            }
        }
        if (witness == Strategy::kNoChoice)
            throw InternalError("unsettled vertex without a witness edge");
        choose(v, witness);
    }

    result.stats.frontier_size =
        static_cast<std::uint64_t>(std::count(in_f.begin(), in_f.end(), 1));

    if (has_zero_cycle_among(view, unsettled))
        throw NonSimpleError("zero-weight cycle among unsettled vertices; arena is not simple");

    return result;
}

EnPlusResult compute_en_plus(const Arena& arena) { return compute_en_plus(GameView(arena)); }

namespace {

std::optional<FixedPointViolation> violation(std::uint32_t v, std::string what) {
    return FixedPointViolation{v, std::move(what)};
}

} // namespace

std::optional<FixedPointViolation> check_fixed_point(const GameView& view,
                                                     std::span<const Weight> values) {
    const Arena& arena = *view.arena;
    if (values.size() != arena.vertex_count())
        throw ValueError("values must cover every vertex");

    const std::uint32_t n = static_cast<std::uint32_t>(arena.vertex_count());
    for (std::uint32_t v = 0; v < n; ++v) {
        if (view.vertex_masked(v)) continue;
        const Weight val = values[v];
        if (val.negative()) return violation(v, "negative value " + val.str());

        bool any_negative = false, all_negative = true;
        for (std::uint32_t e : arena.out_edges(v)) {
            if (view.weight(e).negative())
                any_negative = true;
            else
                all_negative = false;
        }

        const bool in_seed =
            view.owner(v) == Player::Min ? any_negative : (all_negative && arena.out_degree(v) > 0);
        if (in_seed) {
            if (!val.is_zero()) return violation(v, "seed vertex has value " + val.str());
            continue;
        }

        Weight expected;
        bool first = true;
        for (std::uint32_t e : arena.out_edges(v)) {
            Weight w = view.weight(e);
            if (view.owner(v) == Player::Max && w.negative()) continue;
            Weight cand = w.is_plus_inf() ? Weight::infinity() : w + values[arena.edge(e).dst];
            expected = first ? cand
                             : (view.owner(v) == Player::Min ? min(expected, cand)
                                                             : max(expected, cand));
            first = false;
        }
        if (first) return violation(v, "no outgoing edge");
        if (expected != val)
            return violation(v, "value " + val.str() + " but fixed point gives " + expected.str());
    }
    return std::nullopt;
}

std::optional<FixedPointViolation> check_fixed_point(const Arena& arena,
                                                     std::span<const Weight> values) {
    return check_fixed_point(GameView(arena), values);
}

} // namespace eg
