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

#include <egsolve/esl.hpp>

#include <egsolve/oracle.hpp>

namespace eg {

namespace {

void require_valid(const Arena& arena) {
    auto violations = arena.validate();
    if (!violations.empty()) throw ValueError("invalid arena: " + violations.front().message);
}

// Claims covering every vertex, for the one-player verification oracle.
std::vector<std::pair<std::uint32_t, Weight>> full_claims(std::span<const Weight> values) {
    std::vector<std::pair<std::uint32_t, Weight>> claims;
    claims.reserve(values.size());
    for (std::uint32_t v = 0; v < values.size(); ++v) claims.emplace_back(v, values[v]);
    return claims;
}

void verify_both(const Arena& arena, const Strategy& min_s, const Strategy& max_s,
                 std::span<const Weight> values) {
    auto claims = full_claims(values);
    if (auto ce = verify_strategy(arena, min_s, claims))
        throw InternalError("Min strategy fails at vertex " + std::to_string(ce->vertex) +
                            ": achieves " + ce->achieved.str() + ", claimed " + ce->claimed.str());
    if (auto ce = verify_strategy(arena, max_s, claims))
        throw InternalError("Max strategy fails at vertex " + std::to_string(ce->vertex) +
                            ": achieves " + ce->achieved.str() + ", claimed " + ce->claimed.str());
}

IterationRecord make_record(const EnPlusResult& res, const std::vector<char>& active,
                            bool keep_phi, bool down) {
    IterationRecord rec;
    rec.seed_size = res.seed.size();
    rec.down_phase = down;
    rec.stats = res.stats;
    for (std::uint32_t v = 0; v < res.values.size(); ++v) {
        if (!active[v]) continue;
        Weight phi = res.values[v];
        if (phi.is_plus_inf())
            rec.newly_infinite.push_back(v);
        else if (phi.value() > 0) {
            ++rec.positive_count;
            rec.max_finite_phi = std::max(rec.max_finite_phi, phi.value());
        }
    }
    if (keep_phi) rec.phi = res.values;
    return rec;
}

struct EslRun {
    Potential total;                 // +inf on the masked region
    std::vector<char> masked;        // vertices driven to +inf
    Strategy min_strategy, max_strategy;
    std::uint32_t iterations = 0;
    std::vector<IterationRecord> per_iteration;
    EnPlusStats total_stats;
};

// The ESL main loop on a valid, simple arena.
EslRun run_esl(const Arena& arena, const SolveOptions& opt) {
    const std::uint32_t n = static_cast<std::uint32_t>(arena.vertex_count());
    const std::int64_t weight_bound = arena.max_abs_weight();
    const std::int64_t phi_bound = checked_mul(static_cast<std::int64_t>(n), weight_bound);
    const std::uint64_t iteration_cap =
        static_cast<std::uint64_t>(checked_add(
            checked_mul(checked_mul(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n)),
                        weight_bound),
            static_cast<std::int64_t>(n)));

    EslRun run;
    run.total = Potential::zero(n);
    run.masked.assign(n, 0);
    run.min_strategy = Strategy(Player::Min, n);
    run.max_strategy = Strategy(Player::Max, n);

    std::vector<char> in_prev_seed(n, 1); // no constraint before the first iteration
    std::vector<char> active(n, 1);

    while (true) {
        bool any_active = false;
        for (std::uint32_t v = 0; v < n; ++v) any_active |= active[v];
        if (!any_active) break;

        // Termination is guaranteed in at most n^2*W iterations; the cap is a
        // tripwire for implementation bugs, never a tuning knob.
        if (run.iterations >= iteration_cap)
            throw InternalError("iteration cap " + std::to_string(iteration_cap) +
                                " exceeded; this is a bug");

        GameView view(arena, &run.total, &run.masked);
        EnPlusResult res = compute_en_plus(view);
        ++run.iterations;
        run.total_stats += res.stats;

        // Seed sets only shrink, and the accumulated potential is zero on
        // the current seed.
        for (std::uint32_t v : res.seed) {
            if (!in_prev_seed[v])
                throw InternalError("seed set grew at vertex " + std::to_string(v));
            if (!run.total.at(v).is_zero())
                throw InternalError("nonzero potential on seed vertex " + std::to_string(v));
        }
        in_prev_seed.assign(n, 0);
        for (std::uint32_t v : res.seed) in_prev_seed[v] = 1;

        IterationRecord rec = make_record(res, active, opt.trace, /*down=*/false);
        const bool stop = rec.newly_infinite.empty() && rec.max_finite_phi == 0;

        for (std::uint32_t v = 0; v < n; ++v) {
            if (!active[v]) continue;
            Weight phi = res.values[v];
            if (phi.is_plus_inf()) {
                // Absorbing: the vertex leaves every later frontier. Keep its
                // witness edge; the final game cannot recover it.
                active[v] = 0;
                run.masked[v] = 1;
                run.total.set(v, Weight::infinity());
                if (arena.owner(v) == Player::Min)
                    run.min_strategy.choice[v] = res.min_strategy.choice[v];
                else
                    run.max_strategy.choice[v] = res.max_strategy.choice[v];
            } else if (phi.value() > 0) {
                Weight next = run.total.at(v) + phi;
                if (next.value() > phi_bound)
                    throw InternalError("finite potential exceeded n*W at vertex " +
                                        std::to_string(v));
                run.total.set(v, next);
            }
        }
        run.per_iteration.push_back(std::move(rec));

        if (stop) {
            // Stopping state: every remaining vertex settled at zero. Its
            // choices witness the values of the original game.
            for (std::uint32_t v = 0; v < n; ++v) {
                if (!active[v]) continue;
                if (arena.owner(v) == Player::Min)
                    run.min_strategy.choice[v] = res.min_strategy.choice[v];
                else
                    run.max_strategy.choice[v] = res.max_strategy.choice[v];
            }
            break;
        }
    }
    return run;
}

SolveReport report_from(const Arena& solved, EslRun&& run, bool threshold_only,
                        const SolveOptions& opt) {
    const std::uint32_t n = static_cast<std::uint32_t>(solved.vertex_count());
    SolveReport report;
    report.iterations = run.iterations;
    report.per_iteration = std::move(run.per_iteration);
    report.total_stats = run.total_stats;
    report.min_strategy = std::move(run.min_strategy);
    report.max_strategy = std::move(run.max_strategy);
    report.threshold_only = threshold_only;

    report.mp_leq_zero.assign(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) report.mp_leq_zero[v] = !run.masked[v];

    if (!threshold_only) {
        report.en_values.assign(run.total.values().begin(), run.total.values().end());
    }
    report.total_potential = std::move(run.total);

    if (opt.verify_strategies && n > 0) {
        verify_both(solved, report.min_strategy, report.max_strategy,
                    report.total_potential.values());
        report.strategies_verified = true;
    }
    return report;
}

} // namespace

SolveReport solve(const Arena& arena, const SolveOptions& options) {
    require_valid(arena);
    if (arena.vertex_count() == 0) return SolveReport{};

    if (options.auto_lift) {
        Arena lifted = lift_simplicity(arena);
        EslRun run = run_esl(lifted, options);
        return report_from(lifted, std::move(run), /*threshold_only=*/true, options);
    }
    EslRun run = run_esl(arena, options);
    return report_from(arena, std::move(run), /*threshold_only=*/false, options);
}

DualSolveReport solve_dual(const Arena& arena, const SolveOptions& options) {
    SolveReport primal = solve(dualize(arena), options);

    const std::uint32_t n = static_cast<std::uint32_t>(arena.vertex_count());
    DualSolveReport out;
    out.iterations = primal.iterations;
    out.per_iteration = std::move(primal.per_iteration);
    out.threshold_only = primal.threshold_only;
    out.mp_geq_zero = std::move(primal.mp_leq_zero);
    if (!primal.threshold_only) {
        out.en_minus_values.resize(n);
        for (std::uint32_t v = 0; v < n; ++v) out.en_minus_values[v] = -primal.en_values[v];
    }
    // The dual game's Min is the original Max; edge ids coincide.
    out.min_strategy = Strategy(Player::Min, n);
    out.min_strategy.choice = std::move(primal.max_strategy.choice);
    out.max_strategy = Strategy(Player::Max, n);
    out.max_strategy.choice = std::move(primal.min_strategy.choice);
    return out;
}

AlternatingReport solve_alternating(const Arena& input, std::uint64_t cap,
                                    const SolveOptions& options) {
    if (cap < 1) throw ValueError("cap must be at least 1");
    require_valid(input);

    Arena lifted;
    const Arena* game = &input;
    if (options.auto_lift) {
        lifted = lift_simplicity(input);
        game = &lifted;
    }
    const Arena& arena = *game;
    const std::uint32_t n = static_cast<std::uint32_t>(arena.vertex_count());

    AlternatingReport report;
    if (n == 0) {
        report.terminated = true;
        return report;
    }

    // Frozen potentials never exceed (n-1)*W, ordinary ones n*W.
    const std::int64_t phi_bound =
        checked_mul(2 * static_cast<std::int64_t>(n), arena.max_abs_weight());

    Potential total = Potential::zero(n);
    std::vector<char> plus_inf(n, 0); // decided: positive mean payoff
    std::vector<char> frozen(n, 0);   // decided: energy reached, strict slack below
    Strategy min_s(Player::Min, n), max_s(Player::Max, n);

    bool up = true;
    bool stopped = false;
    while (!stopped) {
        bool all_decided = true;
        for (std::uint32_t v = 0; v < n && all_decided; ++v)
            all_decided = plus_inf[v] || frozen[v];
        if (all_decided) {
            stopped = true;
            break;
        }
        if (report.phases >= cap) break;

        std::vector<char> active(n, 0);
        for (std::uint32_t v = 0; v < n; ++v) active[v] = !plus_inf[v];

        if (up) {
            GameView view(arena, &total, &plus_inf, &frozen, /*dualized=*/false);
            EnPlusResult res = compute_en_plus(view);
            ++report.phases;
            ++report.up_steps;

            IterationRecord rec = make_record(res, active, options.trace, /*down=*/false);
            stopped = rec.newly_infinite.empty() && rec.max_finite_phi == 0;

            for (std::uint32_t v = 0; v < n; ++v) {
                if (plus_inf[v]) continue;
                Weight phi = res.values[v];
                if (phi.is_plus_inf()) {
                    plus_inf[v] = 1;
                    if (arena.owner(v) == Player::Min)
                        min_s.choice[v] = res.min_strategy.choice[v];
                    else
                        max_s.choice[v] = res.max_strategy.choice[v];
                } else if (phi.value() > 0) {
                    Weight next = total.at(v) + phi;
                    if (next.value() > phi_bound)
                        throw InternalError("alternating potential exceeded 2n*W at vertex " +
                                            std::to_string(v));
                    total.set(v, next);
                }
            }
            report.per_iteration.push_back(std::move(rec));
        } else {
            // Downward pass: negative-energy values of the current game are
            // positive-energy values of its dual. A vertex whose value
            // diverges has energy exactly its accumulated potential; freeze
            // it, with outgoing edges reading -inf from now on.
            GameView view(arena, &total, &plus_inf, &frozen, /*dualized=*/true);
            EnPlusResult res = compute_en_plus(view);
            ++report.phases;

            IterationRecord rec;
            rec.down_phase = true;
            rec.seed_size = res.seed.size();
            rec.stats = res.stats;
            for (std::uint32_t v = 0; v < n; ++v) {
                if (plus_inf[v] || frozen[v]) continue;
                if (res.values[v].is_plus_inf()) {
                    frozen[v] = 1;
                    rec.newly_infinite.push_back(v); // newly frozen, for tracing
                }
            }
            if (options.trace) {
                rec.phi.resize(n);
                for (std::uint32_t v = 0; v < n; ++v) rec.phi[v] = -res.values[v];
            }
            report.per_iteration.push_back(std::move(rec));
        }
        up = !up;
    }

    report.total_potential = [&] {
        std::vector<Weight> values(total.values().begin(), total.values().end());
        for (std::uint32_t v = 0; v < n; ++v) {
            if (plus_inf[v]) values[v] = Weight::infinity();
            if (frozen[v]) values[v] = Weight::minus_infinity();
        }
        return Potential::from_values(std::move(values), PotentialMode::Alternating,
                                      /*sound=*/stopped);
    }();

    if (!stopped) return report; // capped: the trace is the result

    report.terminated = true;
    report.en_values.assign(total.values().begin(), total.values().end());
    for (std::uint32_t v = 0; v < n; ++v)
        if (plus_inf[v]) report.en_values[v] = Weight::infinity();
    report.mp_leq_zero.assign(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) report.mp_leq_zero[v] = !plus_inf[v];

    // One unclamped pass over the stopped state both re-checks triviality
    // and yields witness choices on the undecided-plus-frozen region.
    {
        Potential en_potential = Potential::from_values(
            std::vector<Weight>(report.en_values.begin(), report.en_values.end()),
            PotentialMode::Energy, /*sound=*/true);
        GameView view(arena, &en_potential, &plus_inf, nullptr, false);
        EnPlusResult res = compute_en_plus(view);
        for (std::uint32_t v = 0; v < n; ++v) {
            if (plus_inf[v]) continue;
            if (!res.values[v].is_zero())
                throw InternalError("alternating stop state is not trivial at vertex " +
                                    std::to_string(v));
            if (arena.owner(v) == Player::Min)
                min_s.choice[v] = res.min_strategy.choice[v];
            else
                max_s.choice[v] = res.max_strategy.choice[v];
        }
    }
    report.min_strategy = std::move(min_s);
    report.max_strategy = std::move(max_s);

    if (options.verify_strategies) {
        verify_both(arena, report.min_strategy, report.max_strategy, report.en_values);
        report.strategies_verified = true;
    }
    return report;
}

} // namespace eg
