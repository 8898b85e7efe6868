#include <catch2/catch_amalgamated.hpp>

#include "ramsey/census.hpp"

using namespace ramsey;

TEST_CASE("five-cycle census") {
    Profile p = count_profile(cycle_coloring(5));
    REQUIRE(p.red == std::vector<Count>{0, 5, 5, 0, 0, 0});
    REQUIRE(p.blue == std::vector<Count>{0, 5, 5, 0, 0, 0});
    MonoStats s = stats(p);
    REQUIRE(s.total == 20);
    REQUIRE(s.average == Rat(3, 2));
    REQUIRE(s.max_size == 2);
    REQUIRE(s.per_size[1] == 10);
    REQUIRE(s.per_size[2] == 10);
}

TEST_CASE("all-red triangle census") {
    Profile p = count_profile(clique_union_coloring(1, 3));
    REQUIRE(p.red == std::vector<Count>{0, 3, 3, 1});
    REQUIRE(p.blue == std::vector<Count>{0, 3, 0, 0});
    auto pv = per_vertex_counts(clique_union_coloring(1, 3));
    for (const Count& c : pv) REQUIRE(c == 5);  // 2 singletons + 2 edges + triangle
}

TEST_CASE("single-edge census") {
    MonoStats s = stats(count_profile(clique_union_coloring(1, 2)));
    REQUIRE(s.total == 5);
    REQUIRE(s.average == Rat(6, 5));
    REQUIRE(s.max_size == 2);
}

TEST_CASE("paley 17 census") {
    TwoColoring g = paley_coloring(17);
    Profile p = count_profile(g);
    REQUIRE(p == brute_force_profile(g));
    REQUIRE(p.red[2] == 68);
    REQUIRE(p.blue[2] == 68);
    REQUIRE(p.red[3] == 68);
    REQUIRE(p.blue[3] == 68);
    REQUIRE(p.red[4] == 0);
    REQUIRE(p.blue[4] == 0);
    MonoStats s = stats(p);
    REQUIRE(s.max_size == 3);
    REQUIRE(s.per_size[3] == s.per_size[2]);
    REQUIRE(s.total == 34 + 136 + 136);
    REQUIRE(s.average == Rat(34 + 272 + 408, 306));
}

TEST_CASE("engine matches the subset-scan oracle") {
    for (int n = 2; n <= 12; ++n)
        for (uint64_t seed : {1u, 2u, 3u}) {
            TwoColoring g = random_coloring(n, seed);
            REQUIRE(count_profile(g) == brute_force_profile(g));
        }
    REQUIRE(count_profile(cycle_coloring(9)) == brute_force_profile(cycle_coloring(9)));
    REQUIRE(count_profile(paley_coloring(13)) == brute_force_profile(paley_coloring(13)));
    REQUIRE_THROWS_AS(brute_force_profile(random_coloring(21, 1)), std::invalid_argument);
}

TEST_CASE("pair partition and swap duality") {
    for (uint64_t seed : {10u, 11u, 12u, 13u}) {
        TwoColoring g = random_coloring(10, seed);
        Profile p = count_profile(g);
        REQUIRE(p.red[2] + p.blue[2] == binomial(10, 2));
        Profile q = count_profile(swap_colors(g));
        REQUIRE(q.red == p.blue);
        REQUIRE(q.blue == p.red);
    }
}

TEST_CASE("vertex deletion identity") {
    TwoColoring g = random_coloring(9, 77);
    MonoStats s = stats(count_profile(g));
    auto pv = per_vertex_counts(g);
    for (int j = 0; j < 9; ++j) {
        MonoStats rest = stats(count_profile(remove_vertex(g, j)));
        REQUIRE(s.total == pv[j] + rest.total);
    }
    REQUIRE_THROWS_AS(remove_vertex(random_coloring(1, 0), 0), std::invalid_argument);
}

TEST_CASE("per-vertex identities") {
    SECTION("five-cycle: every vertex in 6 subgraphs") {
        auto pv = per_vertex_counts(cycle_coloring(5));
        for (const Count& c : pv) REQUIRE(c == 6);
    }
    SECTION("sum rule and pigeonhole") {
        for (uint64_t seed : {5u, 6u, 7u}) {
            TwoColoring g = random_coloring(11, seed);
            MonoStats s = stats(count_profile(g));
            auto pv = per_vertex_counts(g);
            Count sum = 0, maxc = 0;
            for (const Count& c : pv) {
                sum += c;
                if (c > maxc) maxc = c;
            }
            REQUIRE(Rat(sum) == s.average * Rat(s.total));
            REQUIRE(Rat(maxc) * Rat(g.n()) >= s.average * Rat(s.total));
        }
    }
}

TEST_CASE("clique union closed form") {
    for (auto [t, s] : {std::pair{2, 2}, {3, 3}, {1, 5}, {4, 1}, {2, 4}}) {
        Profile analytic = analytic_profile_clique_union(t, s);
        REQUIRE(analytic == brute_force_profile(clique_union_coloring(t, s)));
        REQUIRE(analytic == count_profile(clique_union_coloring(t, s)));
    }
    REQUIRE(analytic_profile_clique_union(3, 3).blue[3] == 27);
    REQUIRE_THROWS_AS(analytic_profile_clique_union(0, 3), std::invalid_argument);
}

TEST_CASE("conventions") {
    TwoColoring g = cycle_coloring(5);
    SECTION("blue-only singletons") {
        Convention conv{Convention::Singletons::BlueOnly, false};
        Profile p = count_profile(g, conv);
        REQUIRE(p.red[1] == 0);
        REQUIRE(p.blue[1] == 5);
        REQUIRE(p.red[2] == 5);  // edge counts unaffected
        REQUIRE(brute_force_profile(g, conv) == p);
        MonoStats s = stats(p);
        REQUIRE(s.total == 15);
    }
    SECTION("empty set included") {
        Profile both = count_profile(g, Convention{Convention::Singletons::BothColors, true});
        REQUIRE(both.red[0] == 1);
        REQUIRE(both.blue[0] == 1);
        Profile blue = count_profile(g, Convention{Convention::Singletons::BlueOnly, true});
        REQUIRE(blue.red[0] == 0);
        REQUIRE(blue.blue[0] == 1);
        REQUIRE(stats(both).total == 22);
    }
}

TEST_CASE("max_size cap leaves larger sizes at zero") {
    TwoColoring g = random_coloring(12, 9);
    Profile full = count_profile(g);
    Profile capped = count_profile(g, {}, 3);
    for (int k = 0; k <= 3; ++k) {
        REQUIRE(capped.red[k] == full.red[k]);
        REQUIRE(capped.blue[k] == full.blue[k]);
    }
    for (int k = 4; k <= 12; ++k) {
        REQUIRE(capped.red[k] == 0);
        REQUIRE(capped.blue[k] == 0);
    }
}

TEST_CASE("threaded census equals single-threaded") {
    for (int threads : {2, 3, 4, 8}) {
        TwoColoring g = random_coloring(14, 123);
        REQUIRE(count_profile(g, {}, 0, threads) == count_profile(g));
    }
}

TEST_CASE("stats rejects an empty census") {
    // Filtering a 1-vertex coloring to red under blue-only singletons leaves
    // nothing to average over.
    Profile p = count_profile(random_coloring(1, 0),
                              Convention{Convention::Singletons::BlueOnly, false});
    REQUIRE_THROWS_AS(stats(p, Color::Red), std::domain_error);
    REQUIRE(stats(p, Color::Blue).total == 1);
}
