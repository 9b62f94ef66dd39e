#include <doctest.h>

#include "oracles.hpp"

#include <stablehit/errors.hpp>
#include <stablehit/generators.hpp>
#include <stablehit/hitting.hpp>
#include <stablehit/prng.hpp>

using namespace stablehit;

namespace
{
    auto complete(int n) -> Graph
    {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }
}

TEST_CASE("complete graph")
{
    auto report = hitting_stable_set(complete(6));
    CHECK(report.status == HittingStatus::found_under_hypothesis);
    REQUIRE(report.stable_set);
    CHECK(report.stable_set->size() == 1);
    CHECK(report.chosen_k == 1);
    CHECK(report.route == "isr");
}

TEST_CASE("linked cliques")
{
    auto g = gen_linked_cliques(4, 2, true);
    auto report = hitting_stable_set(g);
    CHECK(report.omega == 4);
    CHECK(report.delta == 4);
    CHECK(report.hypothesis_met);
    CHECK(report.components.size() == 2);
    CHECK(report.status == HittingStatus::found_under_hypothesis);
    REQUIRE(report.stable_set);
    CHECK(report.stable_set->size() == 2);
    CHECK(verify_hitting(g, *report.stable_set).holds);
    CHECK(oracle::all_subsets_hitting(g, oracle::all_subsets_maximum_cliques(g)));
    for (auto & c : report.proof_checks)
        CHECK(c.all_hold());

    auto triangles = hitting_stable_set(gen_linked_cliques(3, 3, false));
    CHECK(triangles.status == HittingStatus::found_under_hypothesis);
    CHECK(triangles.stable_set->size() == 3);

    auto c4 = hitting_stable_set(gen_linked_cliques(2, 2, true));
    CHECK(! c4.hypothesis_met);
    CHECK(c4.status == HittingStatus::found_without_hypothesis);
    CHECK(verify_hitting(gen_linked_cliques(2, 2, true), *c4.stable_set).holds);
}

TEST_CASE("tight blown-up cycles have no hitting stable set")
{
    for (int k = 1; k <= 4; ++k) {
        auto report = hitting_stable_set(gen_blown_up_cycle(5, k));
        CHECK(report.omega == 2 * k);
        CHECK(report.delta == 3 * k - 1);
        CHECK(! report.hypothesis_met);
        CHECK(! report.chosen_k);
        CHECK(report.status == HittingStatus::none_exists_proven);
        CHECK(report.route == "brute_force");
    }
}

TEST_CASE("large graphs outside the hypothesis end as unknown")
{
    HittingOptions options;
    options.brute_force_limit = 12;
    auto report = hitting_stable_set(gen_blown_up_cycle(5, 3), options);
    CHECK(report.status == HittingStatus::unknown);
    CHECK(! report.budget_exhausted);
}

TEST_CASE("budget exhaustion ends as unknown")
{
    HittingOptions options;
    options.clique_node_budget = 3;
    auto report = hitting_stable_set(gen_random(30, 0.5, 1), options);
    CHECK(report.status == HittingStatus::unknown);
    CHECK(report.budget_exhausted);
}

TEST_CASE("choose_k")
{
    auto g = gen_linked_cliques(4, 2, true);
    auto comps = components(maximum_cliques(g));
    CHECK(choose_k(comps, g) == 1);

    auto k5 = complete(5);
    CHECK(choose_k(components(maximum_cliques(k5)), k5) == 1);

    auto cycle = gen_blown_up_cycle(5, 2);
    CHECK(! choose_k(components(maximum_cliques(cycle)), cycle));

    // K5 pairs joined by two matchings: cross-F degree 2 forces k = 2
    Graph twice(10);
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                twice.add_edge(5 * c + i, 5 * c + j);
    for (int i = 0; i < 5; ++i) {
        twice.add_edge(i, 5 + i);
        twice.add_edge(i, 5 + (i + 1) % 5);
    }
    auto tc = components(maximum_cliques(twice));
    REQUIRE(tc.size() == 2);
    CHECK(choose_k(tc, twice) == 2);
}

TEST_CASE("verify_hitting")
{
    auto c5 = gen_blown_up_cycle(5, 1);
    auto check = verify_hitting(c5, {0, 2});
    CHECK(! check.holds);
    CHECK(check.stable);
    CHECK(check.missed == std::vector<VertexSet>{{3, 4}});

    auto bad = verify_hitting(c5, {0, 1, 3});
    CHECK(! bad.stable);
    CHECK(bad.internal_edge == Edge{0, 1});

    CHECK(verify_hitting(complete(4), {0}).holds);
    CHECK_THROWS_AS(verify_hitting(complete(4), {4}), InputError);
}

TEST_CASE("brute_force_hitting")
{
    CHECK(! brute_force_hitting(gen_blown_up_cycle(5, 1)));
    CHECK(! brute_force_hitting(gen_blown_up_cycle(5, 2)));
    auto two = brute_force_hitting(gen_linked_cliques(3, 2, false));
    REQUIRE(two);
    CHECK(two->size() == 2);
    CHECK_THROWS_AS(brute_force_hitting(gen_random(21, 0.5, 1)), InputError);
}

TEST_CASE("pipeline agrees with the all-subsets oracle")
{
    SplitMix64 seeds(8);
    for (int i = 0; i < 150; ++i) {
        int n = 1 + int(seeds.below(15));
        auto g = gen_random(n, 0.2 + 0.7 * seeds.unit(), seeds.next());
        auto report = hitting_stable_set(g);
        auto expected = oracle::all_subsets_hitting(g, oracle::all_subsets_maximum_cliques(g));
        REQUIRE(report.status != HittingStatus::internal_error);
        CHECK(report.status != HittingStatus::unknown);
        CHECK(bool(report.stable_set) == expected.has_value());
        if (report.stable_set)
            CHECK(verify_hitting(g, *report.stable_set).holds);
        if (report.hypothesis_met)
            CHECK(report.status == HittingStatus::found_under_hypothesis);
    }
}
