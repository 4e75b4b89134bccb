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

#include <set>

#include <egsolve/arena.hpp>
#include <egsolve/oracle.hpp>

#include "support.hpp"

using namespace eg;
using namespace eg::test;

TEST_CASE("validate reports sinks and dangling edges with indices") {
    Arena a;
    a.add_vertex(Player::Min);
    a.add_vertex(Player::Max);
    a.add_edge(0, 1, wt(1));
    a.add_edge(0, 2, wt(0)); // dst out of range

    auto violations = a.validate();
    REQUIRE(violations.size() == 2);
    CHECK(violations[0].kind == Violation::Kind::DanglingEdge);
    CHECK(violations[0].index == 1);
    CHECK(violations[1].kind == Violation::Kind::Sink);
    CHECK(violations[1].index == 1);
    CHECK(violations[1].message == "sink at vertex 1");
}

TEST_CASE("the G3 fixture is valid") {
    CHECK(make_g3().validate().empty());
}

TEST_CASE("parse computes the fixture's derived counts") {
    Arena g3 = make_g3();
    Arena parsed = parse_arena(serialize_arena(g3));
    CHECK(parsed.vertex_count() == 3);
    CHECK(parsed.edge_count() == 5);
    CHECK(parsed.max_abs_weight() == 5);
    CHECK(parsed.owner(0) == Player::Min);
    CHECK(parsed.owner(1) == Player::Max);
}

TEST_CASE("parse errors carry line numbers and reasons") {
    CHECK_THROWS_WITH_AS(parse_arena("arena 1\n"), "line 1: expected 'arena <n> <m>' header",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_arena("arena 1 1\nvertex 0 MIN\nvertex 0 MIN\nedge 0 0 1\n"),
                         "line 3: duplicate vertex id 0", ParseError);
    CHECK_THROWS_WITH_AS(parse_arena("arena 1 1\nvertex 0 BOTH\nedge 0 0 1\n"),
                         "line 2: unknown owner token 'BOTH'", ParseError);
    CHECK_THROWS_AS(parse_arena("arena 2 1\nvertex 0 MIN\nvertex 1 MAX\n"), ParseError);
    CHECK_THROWS_AS(parse_arena("arena 1 1\nvertex 3 MIN\nedge 0 0 1\n"), ParseError);
}

TEST_CASE("a parsed sink is caught at validation, not at parse") {
    Arena a = parse_arena("arena 2 1\nvertex 0 MIN\nvertex 1 MAX\nedge 1 0 2\n");
    auto violations = a.validate();
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].message == "sink at vertex 0");
}

TEST_CASE("comments, infinities and round-trip canonical form") {
    const std::string text =
        "# a comment\n"
        "arena 2 3   # trailing comment\n"
        "vertex 1 MAX\n"
        "vertex 0 MIN\n"
        "\n"
        "edge 1 0 inf\n"
        "edge 0 1 -inf\n"
        "edge 0 1 -7\n";
    Arena a = parse_arena(text);
    CHECK(a.has_infinite_weight());
    std::string canonical = serialize_arena(a);
    CHECK(canonical == serialize_arena(parse_arena(canonical)));
    CHECK(canonical.find("edge 0 1 -inf") != std::string::npos);
}

TEST_CASE("round-trip over generated arenas") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Arena a = generate_random(1 + seed % 8, 8 + seed % 9, 4, seed);
        Arena b = parse_arena(serialize_arena(a));
        CHECK(serialize_arena(b) == serialize_arena(a));
        // same game up to edge order
        CHECK(b.vertex_count() == a.vertex_count());
        CHECK(b.edge_count() == a.edge_count());
        std::multiset<std::string> ea, eb;
        for (const Edge& e : a.edges())
            ea.insert(std::to_string(e.src) + "/" + std::to_string(e.dst) + "/" + e.weight.str());
        for (const Edge& e : b.edges())
            eb.insert(std::to_string(e.src) + "/" + std::to_string(e.dst) + "/" + e.weight.str());
        CHECK(ea == eb);
    }
}

TEST_CASE("generation is deterministic, sinkless and weight-bounded") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Arena a = generate_random(5, 10, 3, seed);
        CHECK(a.validate().empty());
        CHECK(a.max_abs_weight() <= 3);
    }
    CHECK(serialize_arena(generate_random(6, 14, 9, 42)) ==
          serialize_arena(generate_random(6, 14, 9, 42)));
    CHECK(serialize_arena(generate_random(6, 14, 9, 42)) !=
          serialize_arena(generate_random(6, 14, 9, 43)));
    CHECK_THROWS_AS(generate_random(5, 4, 3, 0), ValueError);
    CHECK_THROWS_AS(generate_random(5, 10, 0, 0), ValueError);
}

TEST_CASE("dualize swaps owners, negates weights and is an involution") {
    Arena g3 = make_g3();
    Arena dual = dualize(g3);
    CHECK(dual.owner(0) == Player::Max);
    CHECK(dual.owner(1) == Player::Min);
    CHECK(dual.owner(2) == Player::Max);
    CHECK(dual.edge(4).weight == wt(3)); // c->a was -3
    CHECK(dualize(dual) == g3);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Arena a = generate_random(4 + seed % 5, 9, 4, seed);
        CHECK(dualize(dualize(a)) == a);
    }

    Arena inf;
    inf.add_vertex(Player::Min);
    inf.add_edge(0, 0, Weight::infinity());
    CHECK(dualize(inf).edge(0).weight == Weight::minus_infinity());
    CHECK(dualize(dualize(inf)) == inf);
}

TEST_CASE("lift_simplicity applies (n+1)w - 1") {
    Arena a;
    a.add_vertex(Player::Min);
    a.add_edge(0, 0, wt(0));
    Arena lifted = lift_simplicity(a);
    CHECK(lifted.edge(0).weight == wt(-1));
    CHECK_FALSE(find_zero_sum_cycle(lifted).has_value());
}

TEST_CASE("lifted arenas have no zero-sum simple cycle") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Arena a = generate_random(2 + seed % 5, 6 + seed % 7, 2, seed);
        Arena lifted = lift_simplicity(a);
        CHECK_FALSE(find_zero_sum_cycle(lifted).has_value());
        CHECK(lifted.max_abs_weight() <=
              (static_cast<std::int64_t>(a.vertex_count()) + 1) * a.max_abs_weight() + 1);
    }
}

TEST_CASE("lift rejects infinite weights and overflow") {
    Arena inf;
    inf.add_vertex(Player::Min);
    inf.add_edge(0, 0, Weight::infinity());
    CHECK_THROWS_AS(lift_simplicity(inf), ValueError);

    Arena big;
    big.add_vertex(Player::Min);
    big.add_edge(0, 0, wt(INT64_MAX / 2));
    CHECK_THROWS_AS(lift_simplicity(big), OverflowError);
}

TEST_CASE("find_zero_sum_cycle finds a witness cycle") {
    Arena a;
    a.add_vertex(Player::Min);
    a.add_vertex(Player::Max);
    a.add_edge(0, 1, wt(2));
    a.add_edge(1, 0, wt(-2));
    a.add_edge(1, 1, wt(1));
    auto cycle = find_zero_sum_cycle(a);
    REQUIRE(cycle.has_value());
    Weight sum(0);
    for (std::uint32_t e : *cycle) sum += a.edge(e).weight;
    CHECK(sum == wt(0));
}

TEST_CASE("strategy totality") {
    Arena g3 = make_g3();
    Strategy s(Player::Min, 3);
    s.choice[0] = 0; // a -> c
    s.choice[2] = 4; // c -> a
    CHECK(s.total_for(g3));
    s.choice[2] = 2; // edge 2 leaves b, not c
    CHECK_FALSE(s.total_for(g3));
    s.choice[2] = Strategy::kNoChoice;
    CHECK_FALSE(s.total_for(g3));
}
