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

#ifndef EGSOLVE_POTENTIAL_HPP
#define EGSOLVE_POTENTIAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <egsolve/arena.hpp>
#include <egsolve/weight.hpp>

namespace eg {

/// Energy potentials take values in the non-negative integers plus +inf;
/// the alternating variant additionally admits negatives and -inf.
enum class PotentialMode : std::uint8_t { Energy, Alternating };

/**
 * A potential: one extended-integer value per vertex.
 *
 * A potential is sound for a game if it is bounded by the energy values
 * of that game. Soundness cannot be checked without solving the game, so
 * it is tracked as provenance: constructors that guarantee it set the
 * flag, composition of sound potentials keeps it, ad-hoc mutation clears
 * it.
 */
class Potential {
public:
    Potential() = default;
    Potential(std::size_t n, PotentialMode mode)
        : values_(n, Weight(0)), mode_(mode), sound_(true) {}

    static Potential zero(std::size_t n, PotentialMode mode = PotentialMode::Energy) {
        return Potential(n, mode);
    }
    static Potential from_values(std::vector<Weight> values, PotentialMode mode, bool sound);

    PotentialMode mode() const { return mode_; }
    std::size_t size() const { return values_.size(); }
    bool sound() const { return sound_; }

    Weight at(std::uint32_t v) const { return values_.at(v); }
    std::span<const Weight> values() const { return values_; }

    /// Sets one entry; clears the soundness provenance.
    void set(std::uint32_t v, Weight w);

    bool all_zero() const;

    /// One "potential <vertex> <value|inf|-inf>" line per vertex.
    std::string serialize() const;

private:
    std::vector<Weight> values_;
    PotentialMode mode_ = PotentialMode::Energy;
    bool sound_ = false;

    void check_range(Weight w) const;
    friend Potential compose(const Potential&, const Potential&);
};

/// Weight of an edge with weight w from a vertex with potential phi_src to
/// one with potential phi_dst, in the potential-modified game: +inf as soon
/// as any ingredient is +inf, -inf likewise in alternating mode, otherwise
/// w + phi_dst - phi_src with checked arithmetic.
Weight modified_weight(Weight w, Weight phi_src, Weight phi_dst);

/// The potential-modified game: same graph, every edge weight replaced by
/// its modified weight.
Arena apply(const Arena& arena, const Potential& phi);

/// Pointwise sum with infinity absorption. Applying two potentials in
/// sequence equals applying their composition, and the composition of
/// sound potentials is sound. -inf + +inf throws ValueError.
Potential compose(const Potential& a, const Potential& b);

/// Sum of the path's weights in the phi-modified game, computed as
/// sum(path) - phi(start) + phi(end). The path is a chain of edge ids;
/// every visited vertex must have finite potential.
Weight path_sum(const Arena& arena, std::span<const std::uint32_t> path_edges,
                const Potential& phi);

} // namespace eg

#endif
