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

#ifndef EGSOLVE_DIJKSTRA_HPP
#define EGSOLVE_DIJKSTRA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <egsolve/arena.hpp>
#include <egsolve/potential.hpp>

namespace eg {

/**
 * A read-only window onto an arena, as the solvers consume it:
 *  - phi, when set, replaces every weight by its phi-modified weight;
 *  - masked vertices are removed (every touching edge reads +inf);
 *  - converged vertices keep their incoming weights but their outgoing
 *    edges read -inf (the alternating variant's frozen region);
 *  - dual flips the owners and negates the weights (inf <-> -inf).
 *
 * Edge and vertex ids are those of the underlying arena throughout.
 */
struct GameView {
    const Arena* arena = nullptr;
    const Potential* phi = nullptr;
    const std::vector<char>* masked = nullptr;
    const std::vector<char>* converged = nullptr;
    bool dual = false;

    explicit GameView(const Arena& a) : arena(&a) {}
    GameView(const Arena& a, const Potential* p, const std::vector<char>* mask,
             const std::vector<char>* conv = nullptr, bool dualized = false)
        : arena(&a), phi(p), masked(mask), converged(conv), dual(dualized) {}

    std::size_t vertex_count() const { return arena->vertex_count(); }
    bool vertex_masked(std::uint32_t v) const { return masked && (*masked)[v]; }

    Player owner(std::uint32_t v) const {
        Player p = arena->owner(v);
        return dual ? opponent(p) : p;
    }

    Weight weight(std::uint32_t e) const {
        const Edge& edge = arena->edge(e);
        Weight w;
        if (vertex_masked(edge.src) || vertex_masked(edge.dst))
            w = Weight::infinity();
        else if (converged && (*converged)[edge.src])
            w = Weight::minus_infinity();
        else if (phi)
            w = modified_weight(edge.weight, phi->at(edge.src), phi->at(edge.dst));
        else
            w = edge.weight;
        return dual ? -w : w;
    }
};

struct EnPlusStats {
    std::uint64_t seed_size = 0;    // |N|
    std::uint64_t closures = 0;     // step-1 settlements (Max closures)
    std::uint64_t extractions = 0;  // step-2 settlements (heap extractions)
    std::uint64_t heap_pushes = 0;
    std::uint64_t heap_pops = 0;    // includes stale entries skipped
    std::uint64_t frontier_size = 0; // |F| at termination

    std::uint64_t heap_operations() const { return heap_pushes + heap_pops; }
    EnPlusStats& operator+=(const EnPlusStats& o) {
        seed_size += o.seed_size;
        closures += o.closures;
        extractions += o.extractions;
        heap_pushes += o.heap_pushes;
        heap_pops += o.heap_pops;
        frontier_size += o.frontier_size;
        return *this;
    }
};

/**
 * Positive-energy values of a game together with witnessing positional
 * strategies for both players. Values are non-negative, 0 on the seed set
 * N, +inf exactly on the vertices the iteration never settled.
 */
struct EnPlusResult {
    std::vector<Weight> values;
    std::vector<std::uint32_t> seed; // N, ascending
    Strategy min_strategy;
    Strategy max_strategy;
    EnPlusStats stats;
};

/// The set N of vertices from which Min forces an immediately negative
/// edge: Min vertices with some negative outgoing edge and Max vertices
/// with only negative outgoing edges. Runs in O(m).
std::vector<std::uint32_t> seed_n(const GameView& view);
std::vector<std::uint32_t> seed_n(const Arena& arena);

/**
 * Computes positive-energy values by the two-player Dijkstra iteration:
 * seed N at value 0, then alternate exhaustive Max closures with
 * minimum-priority Min extractions from a binary heap with lazy deletion.
 * Vertices never settled have value +inf, which is only correct on simple
 * games; a zero-weight cycle detected among those vertices makes the call
 * throw NonSimpleError (the detection is best-effort, the caller remains
 * responsible for simplicity).
 */
EnPlusResult compute_en_plus(const GameView& view);
EnPlusResult compute_en_plus(const Arena& arena);

struct FixedPointViolation {
    std::uint32_t vertex;
    std::string what;
};

/// Verifies the positive-energy fixed-point equations at every vertex:
/// value 0 on N, the min-equation at Min vertices without negative edges,
/// the max-equation over non-negative edges at Max vertices outside N,
/// and non-negativity everywhere. O(m), independent of the computation.
std::optional<FixedPointViolation> check_fixed_point(const GameView& view,
                                                     std::span<const Weight> values);
std::optional<FixedPointViolation> check_fixed_point(const Arena& arena,
                                                     std::span<const Weight> values);

} // namespace eg

#endif
