#include <doctest.h>

#include "oracles.hpp"

#include <stablehit/errors.hpp>
#include <stablehit/generators.hpp>
#include <stablehit/isr.hpp>
#include <stablehit/prng.hpp>

#include <numeric>

using namespace stablehit;

namespace
{
    auto others_admit_isr(const PartitionedGraph & pg, Vertex pinned) -> bool
    {
        std::vector<int> others;
        for (int b = 0; b < pg.block_count(); ++b)
            if (b != pg.block_of(pinned))
                others.push_back(b);
        return oracle::cartesian_isr_on(pg, others);
    }

    /// Ten vertices in five blocks of two, a0 b0 | a1 b1 | ... with a_i ~ b_{i+1}.
    auto five_pairs_k1() -> PartitionedGraph
    {
        Graph g(10);
        std::vector<VertexSet> blocks;
        for (int i = 0; i < 5; ++i) {
            blocks.push_back({2 * i, 2 * i + 1});
            g.add_edge(2 * i, 2 * ((i + 1) % 5) + 1);
        }
        return PartitionedGraph(std::move(g), std::move(blocks));
    }
}

TEST_CASE("lopsided_check")
{
    auto gadget = gen_haxell_gadget();
    auto r2 = lopsided_check(gadget, 2);
    CHECK(! r2.holds);
    CHECK(r2.violations.size() == 8);
    for (auto & v : r2.violations) {
        CHECK(v.vertex >= 4);
        CHECK(v.out_degree == 1);
        CHECK(v.cap == 0);
    }
    auto r1 = lopsided_check(gadget, 1);
    CHECK(! r1.holds);
    CHECK(r1.violations.size() == 4);

    PartitionedGraph bare(Graph(6), {{0, 1}, {2, 3, 4}, {5}});
    CHECK(lopsided_check(bare, 1).holds);
    CHECK(! lopsided_check(bare, 2).holds);

    // three blocks of size 2k = 4 with cross degree k = 2 (Haxell's setting)
    Graph h(12);
    for (int i = 0; i < 4; ++i) {
        h.add_edge(i, 4 + i);
        h.add_edge(i, 8 + i);
        h.add_edge(4 + i, 8 + (i + 1) % 4);
    }
    PartitionedGraph haxell(std::move(h), {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}});
    CHECK(lopsided_check(haxell, 2).holds);
    CHECK(find_isr_exact(haxell));

    CHECK(lopsided_check(five_pairs_k1(), 1).holds);
    CHECK_THROWS_AS(lopsided_check(bare, 0), InputError);
}

TEST_CASE("find_isr_exact basics")
{
    PartitionedGraph singletons(Graph(4), {{0}, {1}, {2}, {3}});
    auto isr = find_isr_exact(singletons);
    REQUIRE(isr);
    CHECK(isr->picks == std::vector<Vertex>{0, 1, 2, 3});

    CHECK(! find_isr_exact(gen_haxell_gadget()));
    for (Vertex v = 0; v < 12; ++v)
        CHECK(! find_isr_exact(gen_haxell_gadget(), v));

    auto pairs = five_pairs_k1();
    auto found = find_isr_exact(pairs);
    REQUIRE(found);
    CHECK(is_isr(pairs, *found));
    for (Vertex v = 0; v < 10; ++v) {
        auto pinned = find_isr_exact(pairs, v);
        REQUIRE(pinned);
        CHECK(pinned->picks[pairs.block_of(v)] == v);
        CHECK(is_isr(pairs, *pinned));
    }

    CHECK_THROWS_AS(find_isr_exact(gen_random_partitioned(7, 5, 0.5, 1), std::nullopt, 2), BudgetExceeded);
}

TEST_CASE("exact solver agrees with the cartesian oracle")
{
    SplitMix64 seeds(5);
    int none = 0;
    for (int i = 0; i < 200; ++i) {
        int r = 1 + int(seeds.below(8));
        int max_block = 1 + int(seeds.below(5));
        auto pg = gen_random_partitioned(r, max_block, 0.15 + 0.5 * seeds.unit(), seeds.next());
        auto isr = find_isr_exact(pg);
        auto expected = oracle::cartesian_isr(pg);
        REQUIRE(isr.has_value() == expected.has_value());
        if (isr)
            CHECK(is_isr(pg, *isr));
        else
            ++none;

        Vertex pin = Vertex(seeds.below(pg.graph().size()));
        auto pinned = find_isr_exact(pg, pin);
        CHECK(pinned.has_value() == oracle::cartesian_isr(pg, pin).has_value());
        if (pinned)
            CHECK(pinned->picks[pg.block_of(pin)] == pin);
    }
    CHECK(none > 0);
}

TEST_CASE("lopsided instances have an ISR through every vertex")
{
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        int k = 1 + int(seed % 3);
        auto pg = gen_random_lopsided(2 + int(seed % 5), k, std::min(8, 2 * k + 3), 0.8, seed);
        REQUIRE(lopsided_check(pg, k).holds);
        for (Vertex v = 0; v < pg.graph().size(); ++v) {
            auto isr = find_isr_exact(pg, v);
            REQUIRE(isr);
            CHECK(is_isr(pg, *isr));
        }
    }
}

TEST_CASE("augmenting: pinned vertex without neighbours")
{
    Graph g(5);
    g.add_edge(1, 3);
    PartitionedGraph pg(std::move(g), {{0, 1}, {2, 3}, {4}});
    auto result = find_isr_augmenting(pg, 4, 1000);
    REQUIRE(result.kind == AugmentResult::Kind::isr);
    CHECK(is_isr(pg, *result.isr));
    CHECK(result.isr->picks[2] == 4);
    CHECK(result.trace.size() == 1);
}

TEST_CASE("augmenting on the gadget yields a verified certificate")
{
    auto pg = gen_haxell_gadget();
    for (Vertex pin = 0; pin < 4; ++pin) {
        auto result = find_isr_augmenting(pg, pin, 1'000'000);
        REQUIRE(result.kind == AugmentResult::Kind::certificate);
        auto & cert = *result.certificate;
        CHECK(cert.pinned == pin);
        CHECK(verify_certificate(pg, cert).valid());
        CHECK(std::find(cert.j_set.begin(), cert.j_set.end(), 1 + pin) != cert.j_set.end());
        CHECK(std::find(cert.j_set.begin(), cert.j_set.end(), 0) == cert.j_set.end());
    }
}

TEST_CASE("augmenting rejects a failing precondition")
{
    // blocks 1 and 2 are joined completely, so the pair has no ISR
    Graph g(5);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    PartitionedGraph pg(std::move(g), {{0, 1}, {2, 3}, {4}});
    CHECK_THROWS_AS(find_isr_augmenting(pg, 4, 1000), InputError);
}

TEST_CASE("augmenting reports budget exhaustion with state")
{
    auto pg = gen_haxell_gadget();
    auto result = find_isr_augmenting(pg, 0, 3);
    CHECK(result.kind == AugmentResult::Kind::budget_exhausted);
    CHECK(! result.state.x_list.empty());
    CHECK(result.state.x_list.front() == 0);
}

TEST_CASE("verify_certificate mutations")
{
    auto pg = gen_haxell_gadget();
    auto cert = find_isr_augmenting(pg, 0, 1'000'000).certificate.value();
    REQUIRE(verify_certificate(pg, cert).valid());

    for (std::size_t i = 0; i < cert.y_set.size(); ++i) {
        auto mutated = cert;
        mutated.y_set.erase(mutated.y_set.begin() + long(i));
        auto check = verify_certificate(pg, mutated);
        CHECK(! check.valid());
        CHECK(! check.total_domination);
    }

    DominationCertificate lonely{{}, {0}, {}, 0};
    auto check = verify_certificate(pg, lonely);
    CHECK(! check.valid());
    CHECK(! check.total_domination);
    CHECK(check.pinned_in_x);
    CHECK(check.undominated == VertexSet{0});

    auto missing_pin = cert;
    missing_pin.x_set.erase(std::find(missing_pin.x_set.begin(), missing_pin.x_set.end(), 0));
    CHECK(! verify_certificate(pg, missing_pin).pinned_in_x);

    auto pinned_block_in_j = cert;
    pinned_block_in_j.j_set.push_back(0);
    CHECK(! verify_certificate(pg, pinned_block_in_j).in_scope);
}

TEST_CASE("find_certificate_exact")
{
    auto pg = gen_haxell_gadget();
    for (Vertex pin = 0; pin < 4; ++pin) {
        auto cert = find_certificate_exact(pg, pin);
        REQUIRE(cert);
        CHECK(verify_certificate(pg, *cert).valid());
    }
    // canonical order puts the single block dominated by a_1 first
    CHECK(find_certificate_exact(pg, 0)->j_set == std::vector<int>{1});

    PartitionedGraph lone(Graph(1), {{0}});
    CHECK(! find_certificate_exact(lone, 0));

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int k = 1 + int(seed % 2);
        auto lop = gen_random_lopsided(2 + int(seed % 3), k, 2 * k + 1, 0.9, seed);
        for (Vertex v = 0; v < lop.graph().size(); ++v)
            CHECK(! find_certificate_exact(lop, v));
    }
}

TEST_CASE("certificate search is the contrapositive of the augmentation lemma")
{
    SplitMix64 seeds(11);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        int r = 2 + int(seeds.below(5));
        auto pg = gen_random_partitioned(r, 1 + int(seeds.below(4)), 0.2 + 0.6 * seeds.unit(), seeds.next());
        Vertex pin = Vertex(seeds.below(pg.graph().size()));
        if (! others_admit_isr(pg, pin))
            continue;
        ++checked;
        bool pinned_isr = oracle::cartesian_isr(pg, pin).has_value();
        auto cert = find_certificate_exact(pg, pin);
        if (! pinned_isr)
            REQUIRE(cert);
        if (cert)
            CHECK(verify_certificate(pg, *cert).valid());

        auto aug = find_isr_augmenting(pg, pin, 1'000'000);
        REQUIRE(aug.kind != AugmentResult::Kind::budget_exhausted);
        CHECK((aug.kind == AugmentResult::Kind::isr) == pinned_isr);
        if (aug.isr)
            CHECK(is_isr(pg, *aug.isr));
        if (aug.certificate)
            CHECK(verify_certificate(pg, *aug.certificate).valid());
    }
    CHECK(checked > 100);
}

TEST_CASE("lazy re-solving exercises the exchange step")
{
    SplitMix64 seeds(3);
    int exchanges = 0, isr_after_exchange = 0;
    for (int i = 0; i < 600; ++i) {
        int r = 3 + int(seeds.below(4));
        auto pg = gen_random_partitioned(r, 2 + int(seeds.below(3)), 0.2 + 0.4 * seeds.unit(), seeds.next());
        Vertex pin = Vertex(seeds.below(pg.graph().size()));
        if (! others_admit_isr(pg, pin))
            continue;
        auto aug = find_isr_augmenting(pg, pin, 1'000'000, Minimization::lazy);
        REQUIRE(aug.kind != AugmentResult::Kind::budget_exhausted);
        bool exchanged = std::any_of(aug.trace.begin(), aug.trace.end(),
                [](const TraceEvent & e) { return e.kind == TraceEvent::Kind::exchange; });
        exchanges += exchanged;
        if (aug.isr) {
            CHECK(is_isr(pg, *aug.isr));
            CHECK(oracle::cartesian_isr(pg, pin));
            isr_after_exchange += exchanged;
        }
        if (aug.certificate)
            CHECK(verify_certificate(pg, *aug.certificate).valid());
    }
    CHECK(exchanges > 0);
    CHECK(isr_after_exchange > 0);
}

TEST_CASE("degree-sum audit")
{
    // k = 1, blocks of size 2k, every vertex of cross degree k
    Graph g(6);
    g.add_edge(0, 2);
    g.add_edge(1, 4);
    g.add_edge(3, 5);
    PartitionedGraph pg(std::move(g), {{0, 1}, {2, 3}, {4, 5}});
    REQUIRE(lopsided_check(pg, 1).holds);
    DominationCertificate near{{0, 1}, {2, 4}, {0, 3}, 4};
    auto audit = theorem4_bound_audit(pg, 1, near);
    CHECK(audit.x_degree_sum == 2);
    CHECK(audit.x_cap == 2);
    CHECK(audit.y_degree_sum == 2);
    CHECK(audit.y_cap == 2);
    CHECK(audit.block_size_sum == 4);
    CHECK(audit.gap() == 0);
    CHECK(audit.degree_sum_within_blocks);
    CHECK(! audit.degree_sum_allows_domination);

    auto gadget = gen_haxell_gadget();
    auto cert = find_certificate_exact(gadget, 0).value();
    auto broken = theorem4_bound_audit(gadget, 2, cert);
    CHECK(! broken.lopsided_holds);
    CHECK(! broken.y_within_cap);
    CHECK(broken.degree_sum_allows_domination);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto lop = gen_random_lopsided(4, 2, 6, 0.9, seed);
        std::vector<int> j{0, 1, 2};
        VertexSet y{lop.block(0)[0], lop.block(1)[0], lop.block(2)[0]};
        VertexSet x{lop.block(3)[0], lop.block(0)[1], lop.block(1)[1]};
        auto a = theorem4_bound_audit(lop, 2, DominationCertificate{j, x, y, lop.block(3)[0]});
        CHECK(a.lopsided_holds);
        CHECK(a.gap() >= 0);
        CHECK(! a.degree_sum_allows_domination);
    }
}
