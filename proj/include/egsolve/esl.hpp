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

#ifndef EGSOLVE_ESL_HPP
#define EGSOLVE_ESL_HPP

#include <cstdint>
#include <vector>

#include <egsolve/arena.hpp>
#include <egsolve/dijkstra.hpp>
#include <egsolve/potential.hpp>

namespace eg {

struct SolveOptions {
    /// Lift the arena to a simple one and answer the threshold question
    /// only (the lift preserves which vertices have positive mean payoff,
    /// not the energy values themselves).
    bool auto_lift = false;
    /// Keep the full per-iteration potentials and infinity sets.
    bool trace = false;
    /// Check the returned strategies with the one-player oracle before
    /// reporting. Pseudopolynomial; disable for large instances.
    bool verify_strategies = true;
};

struct IterationRecord {
    std::uint64_t seed_size = 0;     // |N_j|
    std::int64_t max_finite_phi = 0; // max finite value of phi_j
    std::uint32_t positive_count = 0;
    bool down_phase = false;         // alternating variant only
    std::vector<std::uint32_t> newly_infinite;
    std::vector<Weight> phi;         // trace mode only
    EnPlusStats stats;
};

/**
 * Result of a solve: exact energy values, the mean-payoff threshold
 * verdict (MP <= 0 iff the energy value is finite), witnessing optimal
 * strategies, the accumulated potential, and per-iteration statistics.
 *
 * In threshold-only mode (auto_lift) en_values is empty and the verdicts
 * and strategies refer to the lifted game.
 */
struct SolveReport {
    std::vector<Weight> en_values;
    std::vector<char> mp_leq_zero;
    Strategy min_strategy;
    Strategy max_strategy;
    Potential total_potential;
    std::uint32_t iterations = 0;
    std::vector<IterationRecord> per_iteration;
    EnPlusStats total_stats;
    bool threshold_only = false;
    bool strategies_verified = false;
};

/**
 * The ESL iteration: repeatedly compute the positive-energy values of the
 * current potential-modified game and apply them as a further potential
 * reduction, until every finite value is zero. The accumulated potential
 * then equals the energy values on its finite part and the vertices driven
 * to +inf are exactly those of positive mean payoff.
 *
 * The arena must be valid and simple; a detected zero-weight cycle throws
 * NonSimpleError (pass auto_lift to answer threshold queries on arbitrary
 * arenas). Exceeding the n^2*W + n iteration safety cap throws
 * InternalError: termination is guaranteed, the cap only trips on bugs.
 */
SolveReport solve(const Arena& arena, const SolveOptions& options = {});

/**
 * Dual solve: energy-from-below values in [-inf, 0], computed by solving
 * the dualized arena and negating. A value is finite iff the vertex has
 * mean payoff >= 0. Strategies are mapped back to the original players.
 */
struct DualSolveReport {
    std::vector<Weight> en_minus_values;
    std::vector<char> mp_geq_zero;
    Strategy min_strategy;
    Strategy max_strategy;
    std::uint32_t iterations = 0;
    std::vector<IterationRecord> per_iteration;
    bool threshold_only = false;
};

DualSolveReport solve_dual(const Arena& arena, const SolveOptions& options = {});

/**
 * The alternating variant: interleave the upward positive-energy steps
 * with downward negative-energy passes that freeze vertices proven to have
 * energy 0 with strict slack (their negative-energy value is -inf).
 * Frozen vertices keep their accumulated potential as the final energy
 * value and their outgoing edges read -inf from then on.
 *
 * Experimental and iteration-capped: cap bounds the number of phases
 * (Dijkstra passes of either direction). A run that terminates within the
 * cap reports energy values that must agree with solve(); a capped run
 * reports terminated = false and the trace collected so far.
 */
struct AlternatingReport {
    bool terminated = false;
    std::vector<Weight> en_values;     // valid when terminated
    std::vector<char> mp_leq_zero;     // valid when terminated
    Strategy min_strategy;
    Strategy max_strategy;
    Potential total_potential;         // alternating mode: -inf on the frozen set
    std::uint32_t phases = 0;          // all Dijkstra passes
    std::uint32_t up_steps = 0;        // upward passes only
    std::vector<IterationRecord> per_iteration;
    bool strategies_verified = false;
};

AlternatingReport solve_alternating(const Arena& arena, std::uint64_t cap,
                                    const SolveOptions& options = {});

} // namespace eg

#endif
