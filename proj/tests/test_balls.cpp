#include <doctest.h>

#include <random>
#include <set>

#include "sga/balls.hpp"
#include "sga/error.hpp"
#include "sga/rng.hpp"

using namespace sga;

TEST_CASE("ball_code on small cycles") {
    CHECK(ball_code(gen_cycle(3), 0, 1).serialize() == "e|a|A");
    CHECK(ball_code(gen_cycle(2), 0, 1).serialize() == "e|a,A");
    auto fixed = from_permutations(1, {{0}});
    CHECK(ball_code(fixed, 0, 1).serialize() == "e,a,A");
}

TEST_CASE("colored ball codes on C_4") {
    auto g = gen_cycle(4);
    Coloring c{{1, 2, 1, 2}, 2};
    CHECK(colored_ball_code(g, 0, 1, c).serialize() == "e:1|a:2|A:2");
    CHECK(colored_ball_code(g, 1, 1, c).serialize() == "e:2|a:1|A:1");
    // Radius 0: single class {e} with the root color.
    CHECK(colored_ball_code(g, 2, 0, c).serialize() == "e:1");
}

TEST_CASE("code serialization parses back") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = gen_random_action(6, 2, trial);
        int x = (int)rand_below(rng, 6);
        auto code = ball_code(g, x, 2);
        CHECK(parse_ball_code(code.serialize(), 2, 2) == code);
        Coloring c{{1, 2, 2, 1, 2, 1}, 2};
        auto colored = colored_ball_code(g, x, 2, c);
        CHECK(parse_ball_code(colored.serialize(), 2, 2) == colored);
    }
}

TEST_CASE("truncation consistency") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = gen_random_action(3 + (int)rand_below(rng, 8), 1 + (int)rand_below(rng, 2),
                                   100 + trial);
        int x = (int)rand_below(rng, (std::uint64_t)g.vertex_count());
        int r = 1 + (int)rand_below(rng, 3);
        auto big = ball_code(g, x, r);
        CHECK(big.truncate(r - 1) == ball_code(g, x, r - 1));
    }
}

TEST_CASE("root-move closure: types are closed under moving the root") {
    auto g = gen_random_action(7, 2, 21);
    std::set<std::string> realized;
    for (int x = 0; x < 7; ++x) realized.insert(ball_code(g, x, 2).serialize());
    for (int x = 0; x < 7; ++x)
        for (int l = 0; l < 4; ++l) {
            Generator s{l / 2, l % 2 == 1};
            int y = g.step(s, x);
            CHECK(realized.count(ball_code(g, y, 2).serialize()) == 1);
        }
}

TEST_CASE("vertex transitivity of cycles") {
    for (int n : {5, 7, 10}) {
        auto g = gen_cycle(n);
        int r = (n - 1) / 2;
        auto ref = ball_code(g, 0, r).serialize();
        for (int x = 1; x < n; ++x) CHECK(ball_code(g, x, r).serialize() == ref);
    }
}

TEST_CASE("refines basic examples") {
    auto free_code = ball_code(gen_cycle(3), 0, 1);    // e|a|A
    auto merged = ball_code(gen_cycle(2), 0, 1);       // e|a,A
    auto fixed = ball_code(from_permutations(1, {{0}}), 0, 1); // e,a,A
    CHECK(refines(free_code, fixed));
    CHECK_FALSE(refines(fixed, free_code));
    CHECK_FALSE(refines(merged, free_code));
    CHECK(refines(free_code, merged));
    CHECK(refines(merged, fixed));
    CHECK_THROWS_AS(refines(free_code, ball_code(gen_cycle(3), 0, 2)), shape_mismatch);
}

TEST_CASE("refines is a partial order on observed codes") {
    std::vector<BallCode> codes;
    std::set<std::string> seen;
    for (int seed = 0; seed < 12; ++seed) {
        auto g = gen_random_action(5, 1, seed);
        for (int x = 0; x < 5; ++x) {
            auto c = ball_code(g, x, 2);
            if (seen.insert(c.serialize()).second) codes.push_back(c);
        }
    }
    for (const auto& a : codes) CHECK(refines(a, a));
    for (const auto& a : codes)
        for (const auto& b : codes) {
            if (refines(a, b) && refines(b, a)) CHECK(a == b);
            for (const auto& c : codes)
                if (refines(a, b) && refines(b, c)) CHECK(refines(a, c));
        }
}

TEST_CASE("height chain for one generator at radius one") {
    auto free_code = ball_code(gen_cycle(3), 0, 1);
    auto merged = ball_code(gen_cycle(2), 0, 1);
    auto fixed = ball_code(from_permutations(1, {{0}}), 0, 1);
    auto poset = height_poset(1, 1, {fixed, free_code, merged});
    CHECK(poset.heights == std::vector<int>{3, 1, 2});

    auto single = height_poset(1, 1, {merged});
    CHECK(single.heights == std::vector<int>{1});
}

TEST_CASE("height_poset gives height 1 to incomparable codes") {
    // Two radius-1 codes over two generators where neither partition
    // refines the other: merge {a,A} in one, {b,B} in the other.
    auto g1 = from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); // a is an involution on 0
    auto g2 = from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
    auto c1 = ball_code(g1, 0, 1);
    auto c2 = ball_code(g2, 0, 1);
    REQUIRE_FALSE(refines(c1, c2));
    REQUIRE_FALSE(refines(c2, c1));
    auto poset = height_poset(2, 1, {c1, c2});
    CHECK(poset.heights == std::vector<int>{1, 1});
}
