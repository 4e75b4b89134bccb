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

#include <egsolve/potential.hpp>

#include <algorithm>
#include <sstream>

namespace eg {

void Potential::check_range(Weight w) const {
    if (mode_ == PotentialMode::Energy && w.negative())
        throw ValueError("energy potentials are non-negative, got " + w.str());
}

Potential Potential::from_values(std::vector<Weight> values, PotentialMode mode, bool sound) {
    Potential p;
    p.values_ = std::move(values);
    p.mode_ = mode;
    p.sound_ = sound;
    for (Weight w : p.values_) p.check_range(w);
    return p;
}

void Potential::set(std::uint32_t v, Weight w) {
    check_range(w);
    values_.at(v) = w;
    sound_ = false;
}

bool Potential::all_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](Weight w) { return w.is_zero(); });
}

std::string Potential::serialize() const {
    std::ostringstream out;
    for (std::uint32_t v = 0; v < values_.size(); ++v)
        out << "potential " << v << ' ' << values_[v].str() << '\n';
    return out.str();
}

Weight modified_weight(Weight w, Weight phi_src, Weight phi_dst) {
    if (w.is_plus_inf() || phi_src.is_plus_inf() || phi_dst.is_plus_inf())
        return Weight::infinity();
    if (w.is_minus_inf() || phi_src.is_minus_inf() || phi_dst.is_minus_inf())
        return Weight::minus_infinity();
    return Weight(checked_add(w.value(), checked_add(phi_dst.value(), -phi_src.value())));
}

Arena apply(const Arena& arena, const Potential& phi) {
    if (phi.size() != arena.vertex_count())
        throw ValueError("potential size does not match the arena");
    Arena out;
    for (std::uint32_t v = 0; v < arena.vertex_count(); ++v) out.add_vertex(arena.owner(v));
    for (const Edge& e : arena.edges())
        out.add_edge(e.src, e.dst, modified_weight(e.weight, phi.at(e.src), phi.at(e.dst)));
    return out;
}

Potential compose(const Potential& a, const Potential& b) {
    if (a.mode() != b.mode()) throw ValueError("cannot compose potentials of different modes");
    if (a.size() != b.size()) throw ValueError("cannot compose potentials of different sizes");
    Potential out;
    out.mode_ = a.mode();
    out.sound_ = a.sound() && b.sound();
    out.values_.reserve(a.size());
    for (std::uint32_t v = 0; v < a.size(); ++v) out.values_.push_back(a.at(v) + b.at(v));
    return out;
}

Weight path_sum(const Arena& arena, std::span<const std::uint32_t> path_edges,
                const Potential& phi) {
    if (path_edges.empty()) return Weight(0);

    Weight sum(0);
    std::uint32_t at = arena.edge(path_edges.front()).src;
    const std::uint32_t start = at;
    for (std::uint32_t e : path_edges) {
        const Edge& edge = arena.edge(e);
        if (edge.src != at)
            throw ValueError("path edges do not chain at vertex " + std::to_string(at));
        if (!phi.at(edge.src).finite() || !phi.at(edge.dst).finite())
            throw ValueError("path visits a vertex with infinite potential");
        sum += edge.weight;
        at = edge.dst;
    }
    return sum - phi.at(start) + phi.at(at);
}

} // namespace eg
