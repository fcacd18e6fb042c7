#include <doctest.h>

#include <random>
#include <sstream>

#include "sga/error.hpp"
#include "sga/rng.hpp"
#include "sga/schreier.hpp"

using namespace sga;

TEST_CASE("from_permutations validates") {
    CHECK_NOTHROW(from_permutations(3, {{1, 2, 0}}));
    CHECK_NOTHROW(from_permutations(2, {{1, 0}}));
    CHECK_NOTHROW(from_permutations(3, {{0, 2, 1}})); // fixed point at 0 is legal
    CHECK_THROWS_AS(from_permutations(3, {{0, 0, 1}}), not_a_permutation);
    CHECK_THROWS_AS(from_permutations(3, {{1, 2, 3}}), not_a_permutation);
    CHECK_THROWS_AS(from_permutations(3, {{1, 0}}), length_mismatch);
}

TEST_CASE("evaluate on the 3-cycle") {
    auto g = gen_cycle(3);
    CHECK(g.evaluate(word_from_string("a"), 0) == 1);
    CHECK(g.evaluate(word_from_string("aaa"), 0) == 0);
    CHECK(g.evaluate(word_from_string("A"), 0) == 2);
    CHECK(g.evaluate(ReducedWord{}, 2) == 2);
    CHECK_THROWS_AS(g.evaluate(word_from_string("a"), 5), vertex_out_of_range);
}

TEST_CASE("generators") {
    CHECK(gen_cycle(4).permutations() == std::vector<std::vector<int>>{{1, 2, 3, 0}});
    auto t = gen_torus(2, 2);
    CHECK(t.vertex_count() == 4);
    CHECK(t.generator_count() == 2);
    // The two shifts commute.
    auto ab = word_from_string("ab");
    auto ba = word_from_string("ba");
    for (int x = 0; x < 4; ++x) CHECK(t.evaluate(ab, x) == t.evaluate(ba, x));
}

TEST_CASE("gen_random_action is reproducible") {
    auto g1 = gen_random_action(5, 2, 7);
    auto g2 = gen_random_action(5, 2, 7);
    CHECK(g1.permutations() == g2.permutations());
    auto g3 = gen_random_action(5, 2, 8);
    CHECK(g1.permutations() != g3.permutations());
}

TEST_CASE("word evaluation is compatible with multiplication") {
    std::mt19937_64 rng(11);
    auto g = gen_random_action(9, 2, 3);
    auto words = enumerate_words(2, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& u = words[rand_below(rng, words.size())];
        const auto& v = words[rand_below(rng, words.size())];
        int x = (int)rand_below(rng, 9);
        CHECK(g.evaluate(multiply_reduce(u, v), x) == g.evaluate(v, g.evaluate(u, x)));
    }
    // s s^{-1} fixes everything.
    for (int i = 0; i < g.generator_count(); ++i)
        for (int x = 0; x < g.vertex_count(); ++x) {
            Generator s{i, false};
            CHECK(g.step(s.inverse(), g.step(s, x)) == x);
        }
}

TEST_CASE("graph file round-trip is bit-exact") {
    auto g = gen_random_action(6, 2, 99);
    std::ostringstream os;
    write_graph(os, g);
    std::istringstream is(os.str());
    auto h = read_graph(is);
    CHECK(g.permutations() == h.permutations());
    std::ostringstream os2;
    write_graph(os2, h);
    CHECK(os.str() == os2.str());
}

TEST_CASE("coloring file round-trip and validation") {
    Coloring c{{1, 2, 1, 2}, 2};
    std::ostringstream os;
    write_coloring(os, c);
    std::istringstream is(os.str());
    Coloring d = read_coloring(is, 2);
    CHECK(d.colors == c.colors);
    CHECK_NOTHROW(c.validate(4));
    CHECK_THROWS_AS(c.validate(5), length_mismatch);
    Coloring bad{{1, 3}, 2};
    CHECK_THROWS_AS(bad.validate(2), color_count_mismatch);
}
