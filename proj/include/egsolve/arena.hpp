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

#ifndef EGSOLVE_ARENA_HPP
#define EGSOLVE_ARENA_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <egsolve/errors.hpp>
#include <egsolve/weight.hpp>

namespace eg {

enum class Player : std::uint8_t { Min = 0, Max = 1 };

inline Player opponent(Player p) { return p == Player::Min ? Player::Max : Player::Min; }
inline const char* player_name(Player p) { return p == Player::Min ? "MIN" : "MAX"; }

struct Edge {
    std::uint32_t src;
    std::uint32_t dst;
    Weight weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// One broken arena invariant, with the offending vertex or edge index.
struct Violation {
    enum class Kind : std::uint8_t { Sink, DanglingEdge };
    Kind kind;
    std::uint32_t index; // vertex id for Sink, edge id for DanglingEdge
    std::string message;
};

/**
 * A game arena: a finite sinkless directed graph with extended-integer
 * edge weights and vertices partitioned between players Min and Max.
 *
 * Vertex ids are dense 0..n-1. Parallel edges and self-loops are allowed.
 * The counts n, m and the max absolute finite weight W are always derived
 * from the stored data, never cached across mutations.
 *
 * Adjacency (forward and reverse edge lists in CSR form) is built lazily
 * on first use and is safe to share between concurrent readers once the
 * arena is no longer mutated.
 */
class Arena {
public:
    Arena() = default;
    Arena(const Arena& other) : owners_(other.owners_), edges_(other.edges_) {}
    Arena(Arena&&) noexcept = default;
    Arena& operator=(const Arena& other) {
        owners_ = other.owners_;
        edges_ = other.edges_;
        index_ = std::make_shared<Index>();
        return *this;
    }
    Arena& operator=(Arena&&) noexcept = default;

    std::uint32_t add_vertex(Player owner) {
        index_ = std::make_shared<Index>();
        owners_.push_back(owner);
        return static_cast<std::uint32_t>(owners_.size() - 1);
    }

    std::uint32_t add_edge(std::uint32_t src, std::uint32_t dst, Weight w) {
        index_ = std::make_shared<Index>();
        edges_.push_back(Edge{src, dst, w});
        return static_cast<std::uint32_t>(edges_.size() - 1);
    }

    std::size_t vertex_count() const { return owners_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Max absolute finite weight (W); 0 when no finite weight exists.
    std::int64_t max_abs_weight() const;

    bool has_infinite_weight() const;

    Player owner(std::uint32_t v) const { return owners_.at(v); }
    const Edge& edge(std::uint32_t e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t out_degree(std::uint32_t v) const { return out_edges(v).size(); }

    /// Outgoing edge ids of v, ascending.
    std::span<const std::uint32_t> out_edges(std::uint32_t v) const;
    /// Incoming edge ids of v, ascending.
    std::span<const std::uint32_t> in_edges(std::uint32_t v) const;

    /// Checks all arena invariants; each failure is reported individually.
    std::vector<Violation> validate() const;
    bool valid() const { return validate().empty(); }

    friend bool operator==(const Arena& a, const Arena& b) {
        return a.owners_ == b.owners_ && a.edges_ == b.edges_;
    }

private:
    struct Index {
        std::once_flag built;
        std::vector<std::uint32_t> out_begin, out_list;
        std::vector<std::uint32_t> in_begin, in_list;
    };

    std::vector<Player> owners_;
    std::vector<Edge> edges_;
    mutable std::shared_ptr<Index> index_ = std::make_shared<Index>();

    const Index& index() const;
};

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------
//
//   arena <n> <m>
//   vertex <id> <MIN|MAX>            exactly n lines
//   edge <src> <dst> <weight>        exactly m lines; weight is a decimal
//                                    integer, "inf" or "-inf"
//
// '#' starts a comment; blank lines are ignored. Serialization is canonical:
// vertices by id, edges sorted by (src, dst, weight).

Arena parse_arena(const std::string& text);
std::string serialize_arena(const Arena& arena);

// ---------------------------------------------------------------------------
// Transformations and generation
// ---------------------------------------------------------------------------

/// Swaps the players and negates every weight (inf <-> -inf).
Arena dualize(const Arena& arena);

/// Replaces every weight w by (n+1)*w - 1. The result has no zero-sum
/// simple cycle and the same vertices of positive mean-payoff value.
/// Requires all weights finite; throws OverflowError if the scaled
/// weights leave the 64-bit range.
Arena lift_simplicity(const Arena& arena);

/// Deterministic random arena: each vertex gets one guaranteed outgoing
/// edge (so the result is sinkless), the remaining m-n edges are uniform,
/// owners are uniform, and weights are uniform in [-max_weight, max_weight].
/// Requires n >= 1, m >= n and max_weight >= 1.
Arena generate_random(std::uint32_t n, std::uint32_t m, std::int64_t max_weight,
                      std::uint64_t seed);

/// Exhaustive search for a zero-sum simple cycle, as a list of edge ids.
/// Exponential; intended for arenas with at most ~12 vertices.
std::optional<std::vector<std::uint32_t>> find_zero_sum_cycle(const Arena& arena);

// ---------------------------------------------------------------------------
// Strategies
// ---------------------------------------------------------------------------

/**
 * A positional strategy for one player: for every vertex owned by the
 * player, the id of one of its outgoing edges.
 */
struct Strategy {
    static constexpr std::uint32_t kNoChoice = UINT32_MAX;

    Player player = Player::Min;
    std::vector<std::uint32_t> choice; // per vertex; kNoChoice off the domain

    Strategy() = default;
    Strategy(Player p, std::size_t n) : player(p), choice(n, kNoChoice) {}

    std::uint32_t edge_at(std::uint32_t v) const { return choice.at(v); }
    bool has_choice(std::uint32_t v) const { return choice.at(v) != kNoChoice; }

    /// Domain is exactly the player's vertex set and every chosen edge
    /// leaves its vertex.
    bool total_for(const Arena& arena) const;
};

} // namespace eg

#endif
