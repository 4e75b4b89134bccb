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

#include <egsolve/arena.hpp>

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

namespace eg {

std::int64_t Arena::max_abs_weight() const {
    std::int64_t w = 0;
    for (const Edge& e : edges_) {
        if (!e.weight.finite()) continue;
        std::int64_t v = e.weight.value();
        if (v == INT64_MIN) throw OverflowError("weight INT64_MIN has no absolute value");
        w = std::max(w, v < 0 ? -v : v);
    }
    return w;
}

bool Arena::has_infinite_weight() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return !e.weight.finite(); });
}

const Arena::Index& Arena::index() const {
    Index& idx = *index_;
    std::call_once(idx.built, [&] {
        const std::uint32_t n = static_cast<std::uint32_t>(owners_.size());
        for (const Edge& e : edges_)
            if (e.src >= n || e.dst >= n)
                throw ValueError("cannot index an arena with dangling edges");
        idx.out_begin.assign(n + 1, 0);
        idx.in_begin.assign(n + 1, 0);
        for (const Edge& e : edges_) {
            ++idx.out_begin[e.src + 1];
            ++idx.in_begin[e.dst + 1];
        }
        for (std::uint32_t v = 0; v < n; ++v) {
            idx.out_begin[v + 1] += idx.out_begin[v];
            idx.in_begin[v + 1] += idx.in_begin[v];
        }
        idx.out_list.resize(edges_.size());
        idx.in_list.resize(edges_.size());
        std::vector<std::uint32_t> out_pos(idx.out_begin.begin(), idx.out_begin.end() - 1);
        std::vector<std::uint32_t> in_pos(idx.in_begin.begin(), idx.in_begin.end() - 1);
        for (std::uint32_t e = 0; e < edges_.size(); ++e) {
            idx.out_list[out_pos[edges_[e].src]++] = e;
            idx.in_list[in_pos[edges_[e].dst]++] = e;
        }
    });
    return idx;
}

std::span<const std::uint32_t> Arena::out_edges(std::uint32_t v) const {
    const Index& idx = index();
    return {idx.out_list.data() + idx.out_begin.at(v), idx.out_begin.at(v + 1) - idx.out_begin.at(v)};
}

std::span<const std::uint32_t> Arena::in_edges(std::uint32_t v) const {
    const Index& idx = index();
    return {idx.in_list.data() + idx.in_begin.at(v), idx.in_begin.at(v + 1) - idx.in_begin.at(v)};
}

std::vector<Violation> Arena::validate() const {
    std::vector<Violation> out;
    const std::uint32_t n = static_cast<std::uint32_t>(owners_.size());
    std::vector<std::uint32_t> out_degree(n, 0);
    for (std::uint32_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        if (edge.src >= n || edge.dst >= n) {
            out.push_back({Violation::Kind::DanglingEdge, e,
                           "dangling edge " + std::to_string(e) + " (" + std::to_string(edge.src) +
                               " -> " + std::to_string(edge.dst) + ")"});
            continue;
        }
        ++out_degree[edge.src];
    }
    for (std::uint32_t v = 0; v < n; ++v)
        if (out_degree[v] == 0)
            out.push_back({Violation::Kind::Sink, v, "sink at vertex " + std::to_string(v)});
    return out;
}

bool Strategy::total_for(const Arena& arena) const {
    if (choice.size() != arena.vertex_count()) return false;
    for (std::uint32_t v = 0; v < choice.size(); ++v) {
        if (arena.owner(v) != player) {
            if (choice[v] != kNoChoice) return false;
            continue;
        }
        if (choice[v] == kNoChoice || choice[v] >= arena.edge_count()) return false;
        if (arena.edge(choice[v]).src != v) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace {

std::int64_t parse_int(const std::string& tok, std::size_t line, const char* what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
    return v;
}

Weight parse_weight(const std::string& tok, std::size_t line) {
    if (tok == "inf") return Weight::infinity();
    if (tok == "-inf") return Weight::minus_infinity();
    return Weight(parse_int(tok, line, "weight"));
}

} // namespace

Arena parse_arena(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    bool have_header = false;
    std::int64_t n = 0, m = 0;
    std::vector<std::optional<Player>> owners;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;

        if (!have_header) {
            if (tok != "arena") throw ParseError(lineno, "expected 'arena <n> <m>' header");
            std::string ns, ms;
            if (!(ls >> ns >> ms)) throw ParseError(lineno, "expected 'arena <n> <m>' header");
            n = parse_int(ns, lineno, "vertex count");
            m = parse_int(ms, lineno, "edge count");
            if (n < 0 || m < 0) throw ParseError(lineno, "negative count in header");
            owners.resize(static_cast<std::size_t>(n));
            edges.reserve(static_cast<std::size_t>(m));
            have_header = true;
        } else if (tok == "vertex") {
            std::string ids, owner_tok;
            if (!(ls >> ids >> owner_tok)) throw ParseError(lineno, "expected 'vertex <id> <MIN|MAX>'");
            std::int64_t id = parse_int(ids, lineno, "vertex id");
            if (id < 0 || id >= n) throw ParseError(lineno, "vertex id out of range");
            Player p;
            if (owner_tok == "MIN")
                p = Player::Min;
            else if (owner_tok == "MAX")
                p = Player::Max;
            else
                throw ParseError(lineno, "unknown owner token '" + owner_tok + "'");
            if (owners[static_cast<std::size_t>(id)])
                throw ParseError(lineno, "duplicate vertex id " + std::to_string(id));
            owners[static_cast<std::size_t>(id)] = p;
        } else if (tok == "edge") {
            std::string ss, ds, ws;
            if (!(ls >> ss >> ds >> ws)) throw ParseError(lineno, "expected 'edge <src> <dst> <weight>'");
            std::int64_t src = parse_int(ss, lineno, "edge source");
            std::int64_t dst = parse_int(ds, lineno, "edge target");
            if (src < 0 || dst < 0) throw ParseError(lineno, "negative edge endpoint");
            edges.push_back(Edge{static_cast<std::uint32_t>(src), static_cast<std::uint32_t>(dst),
                                 parse_weight(ws, lineno)});
        } else {
            throw ParseError(lineno, "unknown directive '" + tok + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
    }

    if (!have_header) throw ParseError(lineno, "missing 'arena <n> <m>' header");
    for (std::size_t v = 0; v < owners.size(); ++v)
        if (!owners[v]) throw ParseError(lineno, "vertex " + std::to_string(v) + " not declared");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));

    Arena arena;
    for (const auto& o : owners) arena.add_vertex(*o);
    for (const Edge& e : edges) arena.add_edge(e.src, e.dst, e.weight);
    return arena;
}

std::string serialize_arena(const Arena& arena) {
    std::vector<Edge> sorted(arena.edges());
    std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.dst != b.dst) return a.dst < b.dst;
        return a.weight < b.weight;
    });

    std::ostringstream out;
    out << "arena " << arena.vertex_count() << ' ' << arena.edge_count() << '\n';
    for (std::uint32_t v = 0; v < arena.vertex_count(); ++v)
        out << "vertex " << v << ' ' << player_name(arena.owner(v)) << '\n';
    for (const Edge& e : sorted)
        out << "edge " << e.src << ' ' << e.dst << ' ' << e.weight.str() << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Transformations and generation
// ---------------------------------------------------------------------------

Arena dualize(const Arena& arena) {
    Arena out;
    for (std::uint32_t v = 0; v < arena.vertex_count(); ++v)
        out.add_vertex(opponent(arena.owner(v)));
    for (const Edge& e : arena.edges()) out.add_edge(e.src, e.dst, -e.weight);
    return out;
}

Arena lift_simplicity(const Arena& arena) {
    if (arena.has_infinite_weight())
        throw ValueError("lift_simplicity requires finite weights");
    const std::int64_t scale = checked_add(static_cast<std::int64_t>(arena.vertex_count()), 1);
    Arena out;
    for (std::uint32_t v = 0; v < arena.vertex_count(); ++v) out.add_vertex(arena.owner(v));
    for (const Edge& e : arena.edges())
        out.add_edge(e.src, e.dst, Weight(checked_add(checked_mul(scale, e.weight.value()), -1)));
    return out;
}

Arena generate_random(std::uint32_t n, std::uint32_t m, std::int64_t max_weight,
                      std::uint64_t seed) {
    if (n == 0 || m < n || max_weight < 1)
        throw ValueError("infeasible parameters: need n >= 1, m >= n, max_weight >= 1");

    std::mt19937_64 rng(seed);
    // rng() % k instead of uniform_int_distribution keeps the stream
    // identical across standard library implementations.
    auto pick = [&rng](std::uint64_t k) { return static_cast<std::uint32_t>(rng() % k); };
    auto pick_weight = [&rng, max_weight] {
        std::uint64_t range = 2 * static_cast<std::uint64_t>(max_weight) + 1;
        return Weight(static_cast<std::int64_t>(rng() % range) - max_weight);
    };

    Arena arena;
    for (std::uint32_t v = 0; v < n; ++v)
        arena.add_vertex(pick(2) == 0 ? Player::Min : Player::Max);
    for (std::uint32_t v = 0; v < n; ++v) arena.add_edge(v, pick(n), pick_weight());
    for (std::uint32_t e = n; e < m; ++e) arena.add_edge(pick(n), pick(n), pick_weight());
    return arena;
}

namespace {

// Enumerates simple cycles rooted at their smallest vertex.
bool zero_cycle_dfs(const Arena& arena, std::uint32_t root, std::uint32_t at, std::int64_t sum,
                    std::vector<char>& on_path, std::vector<std::uint32_t>& path_edges,
                    std::vector<std::uint32_t>& found) {
    for (std::uint32_t e : arena.out_edges(at)) {
        const Edge& edge = arena.edge(e);
        if (!edge.weight.finite()) continue; // infinite-weight cycles never sum to zero
        std::int64_t next = checked_add(sum, edge.weight.value());
        if (edge.dst == root) {
            if (next == 0) {
                found = path_edges;
                found.push_back(e);
                return true;
            }
            continue;
        }
        if (edge.dst < root || on_path[edge.dst]) continue;
        on_path[edge.dst] = 1;
        path_edges.push_back(e);
        if (zero_cycle_dfs(arena, root, edge.dst, next, on_path, path_edges, found)) return true;
        path_edges.pop_back();
        on_path[edge.dst] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<std::uint32_t>> find_zero_sum_cycle(const Arena& arena) {
    const std::uint32_t n = static_cast<std::uint32_t>(arena.vertex_count());
    std::vector<char> on_path(n, 0);
    std::vector<std::uint32_t> path_edges, found;
    for (std::uint32_t root = 0; root < n; ++root) {
        on_path[root] = 1;
        if (zero_cycle_dfs(arena, root, root, 0, on_path, path_edges, found)) return found;
        on_path[root] = 0;
    }
    return std::nullopt;
}

} // namespace eg
