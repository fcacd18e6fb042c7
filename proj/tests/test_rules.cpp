#include <doctest.h>

#include <random>

#include "sga/error.hpp"
#include "sga/rng.hpp"
#include "sga/rules.hpp"

using namespace sga;

namespace {

// Independent brute-force oracle over all k^n colorings.
Rational brute_force_optimum(const LabeledSchreierGraph& g, const Rule& rule) {
    int n = g.vertex_count();
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= rule.k;
    std::int64_t best = n + 1;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        Coloring c{std::vector<int>(n), rule.k};
        std::int64_t t = idx;
        for (int v = 0; v < n; ++v) {
            c.colors[v] = 1 + (int)(t % rule.k);
            t /= rule.k;
        }
        std::int64_t count = 0;
        for (int x = 0; x < n; ++x)
            if (violates(g, c, rule, x)) ++count;
        best = std::min(best, count);
    }
    return Rational(best, n);
}

} // namespace

TEST_CASE("proper coloring checks on cycles") {
    auto rule = proper_coloring_rule(2);
    auto c4 = gen_cycle(4);
    CHECK(check_rule(c4, Coloring{{1, 2, 1, 2}, 2}, rule).violating_fraction == Rational(0));

    auto c5 = gen_cycle(5);
    auto rep = check_rule(c5, Coloring{{1, 2, 1, 2, 1}, 2}, rule);
    CHECK(rep.violating_fraction == Rational(2, 5));
    CHECK(rep.violators == std::vector<int>{0, 4});

    CHECK(check_rule(c5, Coloring{{1, 1, 1, 1, 1}, 2}, rule).violating_fraction == Rational(1));
    CHECK_THROWS_AS(check_rule(c4, Coloring{{1, 2, 1, 2}, 3}, rule), color_count_mismatch);
}

TEST_CASE("independent set rule") {
    auto rule = independent_set_rule(2, 1);
    auto c4 = gen_cycle(4);
    // Marked alternating vertices form an independent set.
    CHECK(check_rule(c4, Coloring{{1, 2, 1, 2}, 2}, rule).violating_fraction == Rational(0));
    // Root marked with any unmarked neighbors is accepted; adjacent marks violate.
    CHECK(check_rule(c4, Coloring{{1, 1, 2, 2}, 2}, rule).violating_fraction == Rational(2, 4));
    // No marked vertex at all: vacuously satisfied.
    CHECK(check_rule(c4, Coloring{{2, 2, 2, 2}, 2}, rule).violating_fraction == Rational(0));
}

TEST_CASE("perfect matching rule on one generator") {
    auto rule = perfect_matching_rule(1);
    REQUIRE(rule.k == 3);
    auto c4 = gen_cycle(4);
    // Match 0-1 along a and 2-3 along a: colors (a, A, a, A) = (2, 3, 2, 3).
    CHECK(check_rule(c4, Coloring{{2, 3, 2, 3}, 3}, rule).violating_fraction == Rational(0));
    // Everyone unmatched violates.
    CHECK(check_rule(c4, Coloring{{1, 1, 1, 1}, 3}, rule).violating_fraction == Rational(1));
    // Odd cycle cannot be perfectly matched.
    CHECK(brute_force_optimum(gen_cycle(5), rule) > Rational(0));
    CHECK(brute_force_optimum(c4, rule) == Rational(0));
}

TEST_CASE("search certifies the odd-cycle floor") {
    auto rule = proper_coloring_rule(2);
    auto rep5 = search_rule(gen_cycle(5), rule, 100, 1);
    CHECK(rep5.violating_fraction == Rational(2, 5));
    CHECK(rep5.certified);
    CHECK(rep5.method == "exhaustive");
    CHECK(rep5.violating_fraction == brute_force_optimum(gen_cycle(5), rule));

    auto rep4 = search_rule(gen_cycle(4), rule, 100, 1);
    CHECK(rep4.violating_fraction == Rational(0));
    CHECK(rep4.certified);
}

TEST_CASE("heuristic search on a long odd cycle reaches the one-defect floor") {
    auto rep = search_rule(gen_cycle(101), proper_coloring_rule(2), 100000, 3);
    CHECK(rep.violating_fraction <= Rational(2, 101));
    CHECK(rep.method == "heuristic");
}

TEST_CASE("fraction invariant under color permutation for proper coloring") {
    auto g = gen_random_action(8, 2, 13);
    auto rule = proper_coloring_rule(3);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        Coloring c{std::vector<int>(8), 3};
        for (auto& v : c.colors) v = 1 + (int)rand_below(rng, 3);
        std::vector<int> perm{1, 2, 3};
        rand_shuffle(rng, perm);
        Coloring pc = c;
        for (auto& v : pc.colors) v = perm[v - 1];
        CHECK(check_rule(g, c, rule).violating_fraction ==
              check_rule(g, pc, rule).violating_fraction);
    }
}

TEST_CASE("search matches the exhaustive oracle on small graphs") {
    for (int seed = 0; seed < 5; ++seed) {
        auto g = gen_random_action(6, 1, 200 + seed);
        auto rule = proper_coloring_rule(2);
        auto oracle = brute_force_optimum(g, rule);
        auto rep = search_rule(g, rule, 1 << 10, 7);
        CHECK(rep.violating_fraction == oracle);
        CHECK(rep.certified);
    }
}

TEST_CASE("greedy ceiling: 2m+1 colors always suffice") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        int m = 1 + (int)rand_below(rng, 3);
        int n = 20 + (int)rand_below(rng, 60);
        auto g = gen_random_action(n, m, 900 + trial);
        auto rep = search_rule(g, proper_coloring_rule(2 * m + 1), 0, 1);
        CHECK(rep.violating_fraction == Rational(0));
    }
}

TEST_CASE("certified optimum is monotone in k") {
    for (int seed = 0; seed < 4; ++seed) {
        auto g = gen_random_action(5, 2, 300 + seed);
        auto opt2 = brute_force_optimum(g, proper_coloring_rule(2));
        auto opt3 = brute_force_optimum(g, proper_coloring_rule(3));
        CHECK(opt3 <= opt2);
    }
}

TEST_CASE("extensional rules via template and accepted set") {
    auto c4 = gen_cycle(4);
    auto tmpl = ball_code(c4, 0, 1); // e|a|A
    // Accept only root color 1 with both neighbors color 2.
    std::set<std::string> accepted{"e:1|a:2|A:2"};
    auto rule = explicit_rule(tmpl, accepted, 2);
    auto rep = check_rule(c4, Coloring{{1, 2, 1, 2}, 2}, rule);
    CHECK(rep.violating_fraction == Rational(2, 4)); // vertices 1 and 3 have root color 2
    // A non-free vertex never matches the free template.
    auto c2 = gen_cycle(2);
    auto rep2 = check_rule(c2, Coloring{{1, 2}, 2}, rule);
    CHECK(rep2.violating_fraction == Rational(1));
}

TEST_CASE("builtin spec parsing") {
    auto r1 = parse_builtin_spec("builtin:proper_coloring:k=4");
    CHECK(r1.k == 4);
    CHECK(r1.builtin == Rule::Builtin::proper_coloring);
    auto r2 = parse_builtin_spec("builtin:independent_set:k=3,marked=2");
    CHECK(r2.marked_color == 2);
    auto r3 = parse_builtin_spec("builtin:perfect_matching:m=2");
    CHECK(r3.k == 5);
    CHECK_THROWS_AS(parse_builtin_spec("builtin:nope"), bad_parameter);
}
