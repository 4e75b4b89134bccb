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

#include <doctest.h>

#include <random>

#include <egsolve/oracle.hpp>
#include <egsolve/potential.hpp>

#include "support.hpp"

using namespace eg;
using namespace eg::test;

namespace {

Potential g3_phi0() {
    return Potential::from_values({wt(2), wt(5), wt(0)}, PotentialMode::Energy, true);
}

// A potential that is sound by construction: pointwise min of the oracle's
// energy values and an arbitrary non-negative vector.
Potential random_sound_potential(const Arena& a, std::mt19937_64& rng) {
    std::vector<Weight> en = value_iteration_en(a);
    std::vector<Weight> values(en.size());
    std::int64_t bound =
        static_cast<std::int64_t>(a.vertex_count()) * std::max<std::int64_t>(1, a.max_abs_weight());
    for (std::size_t v = 0; v < en.size(); ++v) {
        Weight r = rng() % 8 == 0 ? Weight::infinity()
                                  : Weight(static_cast<std::int64_t>(rng() % (bound + 1)));
        values[v] = min(en[v], r);
    }
    return Potential::from_values(std::move(values), PotentialMode::Energy, true);
}

} // namespace

TEST_CASE("modified_weight formula and infinity clause") {
    CHECK(modified_weight(wt(3), wt(1), wt(2)) == wt(4));
    CHECK(modified_weight(wt(5), winf(), wt(0)) == winf());
    CHECK(modified_weight(wt(5), wt(0), winf()) == winf());
    CHECK(modified_weight(winf(), wt(0), wt(0)) == winf());
    // G3 edge c->a under the first iteration's potential
    CHECK(modified_weight(wt(-3), wt(0), wt(2)) == wt(-1));
    // alternating mode: the mirror clause, +inf taking precedence
    CHECK(modified_weight(wt(1), Weight::minus_infinity(), wt(0)) == Weight::minus_infinity());
    CHECK(modified_weight(winf(), Weight::minus_infinity(), wt(0)) == winf());
    CHECK_THROWS_AS(modified_weight(wt(INT64_MAX), wt(0), wt(1)), OverflowError);
}

TEST_CASE("apply: zero potential is the identity") {
    Arena g3 = make_g3();
    CHECK(apply(g3, Potential::zero(3)) == g3);
}

TEST_CASE("apply on G3 gives the expected modified weights") {
    Arena g3 = make_g3();
    Arena modified = apply(g3, g3_phi0());
    CHECK(modified.edge(0).weight == wt(0));  // a->c
    CHECK(modified.edge(1).weight == wt(3));  // a->b
    CHECK(modified.edge(2).weight == wt(0));  // b->c
    CHECK(modified.edge(3).weight == wt(-2)); // b->a
    CHECK(modified.edge(4).weight == wt(-1)); // c->a
}

TEST_CASE("sequential application equals applying the composition") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 30; ++round) {
        Arena a = generate_random(2 + rng() % 5, 7 + rng() % 6, 4, rng());
        std::vector<Weight> p1, p2;
        for (std::size_t v = 0; v < a.vertex_count(); ++v) {
            p1.push_back(rng() % 6 == 0 ? winf() : wt(static_cast<std::int64_t>(rng() % 9)));
            p2.push_back(rng() % 6 == 0 ? winf() : wt(static_cast<std::int64_t>(rng() % 9)));
        }
        Potential phi = Potential::from_values(p1, PotentialMode::Energy, false);
        Potential phi2 = Potential::from_values(p2, PotentialMode::Energy, false);
        CHECK(apply(apply(a, phi), phi2) == apply(a, compose(phi, phi2)));
    }
}

TEST_CASE("compose: identity, absorption, soundness provenance, mode errors") {
    Potential phi = g3_phi0();
    CHECK(compose(phi, Potential::zero(3)).values()[0] == wt(2));
    CHECK(compose(phi, Potential::zero(3)).sound());

    Potential with_inf = Potential::from_values({wt(2), winf(), wt(0)}, PotentialMode::Energy, false);
    CHECK(compose(phi, with_inf).values()[1] == winf());
    CHECK_FALSE(compose(phi, with_inf).sound());

    Potential alt_neg = Potential::from_values({Weight::minus_infinity()},
                                               PotentialMode::Alternating, false);
    Potential alt_pos = Potential::from_values({winf()}, PotentialMode::Alternating, false);
    CHECK_THROWS_AS(compose(alt_neg, alt_pos), ValueError);
    CHECK_THROWS_AS(compose(phi, alt_pos), ValueError); // mode mismatch

    CHECK_THROWS_AS(Potential::from_values({wt(-1)}, PotentialMode::Energy, false), ValueError);
}

TEST_CASE("the G3 run composes phi0 with a zero second potential") {
    // The second iteration's potential is zero, so the composition is phi0.
    Potential composed = compose(g3_phi0(), Potential::zero(3));
    for (std::uint32_t v = 0; v < 3; ++v) CHECK(composed.at(v) == g3_phi0().at(v));
}

TEST_CASE("path_sum matches the potential-difference formula") {
    Arena g3 = make_g3();
    Potential phi = g3_phi0();
    CHECK(path_sum(g3, std::vector<std::uint32_t>{}, phi) == wt(0));
    // a->c: 2 - phi(a) + phi(c) = 0
    CHECK(path_sum(g3, std::vector<std::uint32_t>{0}, phi) == wt(0));
    // a->b->c: (0 + 5) - 2 + 0 = 3
    CHECK(path_sum(g3, std::vector<std::uint32_t>{1, 2}, phi) == wt(3));
    CHECK_THROWS_AS(path_sum(g3, std::vector<std::uint32_t>{0, 1}, phi), ValueError);

    Potential with_inf = Potential::from_values({wt(2), winf(), wt(0)}, PotentialMode::Energy, false);
    CHECK_THROWS_AS(path_sum(g3, std::vector<std::uint32_t>{1}, with_inf), ValueError);
}

TEST_CASE("path_sum equals the sum of modified weights") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 40; ++round) {
        Arena a = generate_random(3 + rng() % 4, 8 + rng() % 5, 4, rng());
        std::vector<Weight> vals;
        for (std::size_t v = 0; v < a.vertex_count(); ++v)
            vals.push_back(wt(static_cast<std::int64_t>(rng() % 7)));
        Potential phi = Potential::from_values(vals, PotentialMode::Energy, false);
        Arena modified = apply(a, phi);

        // random walk of a few edges
        std::uint32_t at = static_cast<std::uint32_t>(rng() % a.vertex_count());
        std::vector<std::uint32_t> path;
        Weight direct(0);
        for (int step = 0; step < 5; ++step) {
            auto out = a.out_edges(at);
            std::uint32_t e = out[rng() % out.size()];
            path.push_back(e);
            direct += modified.edge(e).weight;
            at = a.edge(e).dst;
        }
        CHECK(path_sum(a, path, phi) == direct);
    }
}

TEST_CASE("cycle sums are preserved by potential reductions") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 40; ++round) {
        Arena a = generate_random(3 + rng() % 4, 8 + rng() % 5, 4, rng());
        std::vector<Weight> vals;
        for (std::size_t v = 0; v < a.vertex_count(); ++v)
            vals.push_back(wt(static_cast<std::int64_t>(rng() % 9)));
        Potential phi = Potential::from_values(vals, PotentialMode::Energy, false);
        // any cycle: potentials cancel, so path_sum equals the raw sum
        std::uint32_t start = static_cast<std::uint32_t>(rng() % a.vertex_count());
        std::vector<std::uint32_t> path;
        std::uint32_t at = start;
        Weight raw(0);
        for (int step = 0; step < 64; ++step) {
            auto out = a.out_edges(at);
            std::uint32_t e = out[rng() % out.size()];
            path.push_back(e);
            raw += a.edge(e).weight;
            at = a.edge(e).dst;
            if (at == start) break;
        }
        if (at != start) continue; // walk did not close; try another round
        CHECK(path_sum(a, path, phi) == raw);
    }
}

TEST_CASE("potential reduction preserves energy values (sound potentials)") {
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 120) {
        Arena a = generate_random(2 + rng() % 6, 6 + rng() % 9, 4, rng());
        Potential phi = random_sound_potential(a, rng);
        std::vector<Weight> before = value_iteration_en(a);
        std::vector<Weight> after = value_iteration_en(apply(a, phi));
        for (std::uint32_t v = 0; v < a.vertex_count(); ++v) {
            if (before[v].is_plus_inf()) {
                CHECK((phi.at(v).is_plus_inf() || after[v].is_plus_inf()));
            } else {
                CHECK(phi.at(v) + after[v] == before[v]);
            }
        }
        ++checked;
    }
}

TEST_CASE("finite paths along an optimal Min strategy never outgain the energy drop") {
    // For an energy-optimal Min strategy and any consistent finite path
    // ending in a finite-energy vertex: sum(path) <= En(start) - En(end).
    std::mt19937_64 rng(19);
    int arenas = 0, paths_checked = 0;
    while (arenas < 25) {
        Arena a = generate_random(2 + rng() % 3, 5 + rng() % 4, 3, rng());
        std::uint64_t pairs =
            strategy_count(a, Player::Min, 2000) * strategy_count(a, Player::Max, 2000);
        if (pairs > 2000) continue;
        ++arenas;
        std::vector<Weight> en = brute_force_en(a);
        Strategy sigma = brute_force_optimal_min_strategy(a);

        struct Frame {
            std::uint32_t start, at;
            std::int64_t sum;
            std::size_t len;
        };
        std::vector<Frame> stack;
        for (std::uint32_t v = 0; v < a.vertex_count(); ++v)
            if (en[v].finite()) stack.push_back({v, v, 0, 0});
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            if (en[f.at].finite()) {
                CHECK(f.sum <= en[f.start].value() - en[f.at].value());
                ++paths_checked;
            }
            if (f.len >= 2 * a.vertex_count()) continue;
            if (a.owner(f.at) == Player::Min) {
                const Edge& e = a.edge(sigma.edge_at(f.at));
                stack.push_back({f.start, e.dst, f.sum + e.weight.value(), f.len + 1});
            } else {
                for (std::uint32_t eid : a.out_edges(f.at)) {
                    const Edge& e = a.edge(eid);
                    stack.push_back({f.start, e.dst, f.sum + e.weight.value(), f.len + 1});
                }
            }
        }
    }
    CHECK(paths_checked > 100);
}
