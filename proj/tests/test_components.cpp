#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "rstg/components.hpp"
#include "rstg/errors.hpp"
#include "rstg/random_models.hpp"

using namespace rstg;

TEST_CASE("mutual reach graph of the cycle") {
    const auto m = mutual_reach_graph(oracle::cycle());
    const std::vector<std::pair<VertexId, VertexId>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}};
    std::size_t count = 0;
    for (VertexId u = 0; u < 4; ++u) {
        CHECK_FALSE(m.adjacent(u, u));
        for (VertexId v = u + 1; v < 4; ++v) {
            const bool want = std::find(expected.begin(), expected.end(), std::pair{u, v}) != expected.end();
            CHECK(m.adjacent(u, v) == want);
            CHECK(m.adjacent(v, u) == want);
            count += m.adjacent(u, v);
        }
    }
    CHECK(count == 5);

    const auto none = mutual_reach_graph(TemporalGraph(4, {}));
    for (VertexId v = 0; v < 4; ++v) CHECK(none.degree(v) == 0);
    const auto all = mutual_reach_graph(sample_fnp(30, 1.0, RngStream(1, 0)), TimeWindow::full());
    (void)all;
    const auto two = mutual_reach_graph(TemporalGraph(2, {{0, 1, 0.3}}));
    CHECK(two.adjacent(0, 1));
}

TEST_CASE("largest open component") {
    const auto g = oracle::cycle();
    const auto exact = largest_open_exact(g);
    CHECK(exact.lower() == 3);
    CHECK(exact.upper_bound == 3);
    CHECK((exact.lower_set == std::vector<VertexId>{0, 1, 2} || exact.lower_set == std::vector<VertexId>{0, 2, 3}));
    CHECK(verify_open(g, exact.lower_set));

    const auto bounds = largest_open_bounds(g);
    CHECK(bounds.lower() <= 3);
    CHECK(bounds.upper_bound >= 3);
    CHECK(verify_open(g, bounds.lower_set));

    CHECK(largest_open_exact(TemporalGraph(2, {{0, 1, 0.5}})).lower() == 2);
    CHECK(largest_open_exact(TemporalGraph(5, {})).lower() == 1);
    const auto empty_bounds = largest_open_bounds(TemporalGraph(5, {}));
    CHECK(empty_bounds.lower() == 1);
    CHECK(empty_bounds.upper_bound == 1);

    // complete mutual graph: K_n with all labels gives a temporally connected graph
    const auto two_hop = sample_fnp(40, 1.0, RngStream(3, 0));
    if (is_temporally_connected(two_hop)) {
        const auto b = largest_open_bounds(two_hop);
        CHECK(b.lower() == 40);
        CHECK(b.upper_bound == 40);
    }
    CHECK_THROWS_AS(largest_open_exact(TemporalGraph(65, {})), DomainError);
}

TEST_CASE("closed components on the cycle") {
    const auto g = oracle::cycle();
    CHECK(verify_closed(g, {0, 1}));
    CHECK_FALSE(verify_closed(g, {0, 1, 2}));
    CHECK(verify_closed(g, {0}));
    CHECK_THROWS_AS(verify_closed(g, {}), DomainError);
    CHECK(verify_open(g, {0, 1, 2}));

    const auto tiny = largest_closed_exact_tiny(g);
    CHECK(tiny.lower() == 2);
    CHECK(largest_closed_exact_tiny(TemporalGraph(3, {})).lower() == 1);
    CHECK_THROWS_AS(largest_closed_exact_tiny(TemporalGraph(17, {})), DomainError);
    CHECK_THROWS_AS(largest_closed_exact_tiny(TemporalGraph(3, {}), TimeWindow::full(), 31), DomainError);

    const auto peel = largest_closed_peel(g);
    CHECK(peel.lower_set == std::vector<VertexId>{2, 3});
    CHECK(peel.upper_bound >= 3);

    const auto core = largest_closed_core(g);
    CHECK(core.lower() == 2);
    CHECK(verify_closed(g, core.lower_set));
}

TEST_CASE("core heuristic on larger graphs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto g = sample_fnp(300, 0.04, RngStream(seed, 8));
        const auto core = largest_closed_core(g);
        CHECK(verify_closed(g, core.lower_set));
        CHECK(core.lower() <= core.upper_bound);
    }
}

TEST_CASE("peel keeps a temporally connected input whole") {
    const auto g = TemporalGraph(3, {{0, 1, 0.1}, {1, 2, 0.2}, {0, 1 + 1, 0.3}});
    // 0-1@0.1, 1-2@0.2, 0-2@0.3: every ordered pair has a direct edge
    const auto peel = largest_closed_peel(g);
    CHECK(peel.lower() == 3);
    CHECK(largest_closed_exact_tiny(g).lower() == 3);
}

TEST_CASE("components agree with exhaustive search on small instances") {
    RngStream pick(21, 0);
    for (std::uint64_t i = 0; i < 120; ++i) {
        const std::size_t n = 1 + pick.below(11);
        const double p = 0.1 * static_cast<double>(1 + pick.below(10));
        const auto g = sample_fnp(n, p, RngStream(21, i + 1));
        const auto open = oracle::max_component(g, false);
        const auto closed = oracle::max_component(g, true);
        const auto exact = largest_open_exact(g);
        CHECK(exact.lower() == open);
        CHECK(verify_open(g, exact.lower_set));
        const auto b = largest_open_bounds(g);
        CHECK(b.lower() <= open);
        CHECK(open <= b.upper_bound);
        const auto tiny = largest_closed_exact_tiny(g);
        CHECK(tiny.lower() == closed);
        CHECK(verify_closed(g, tiny.lower_set));
        const auto peel = largest_closed_peel(g);
        CHECK(peel.lower() <= closed);
        CHECK(verify_closed(g, peel.lower_set));
        CHECK(closed <= peel.upper_bound);
        const auto core = largest_closed_core(g);
        CHECK(core.lower() <= closed);
        CHECK(verify_closed(g, core.lower_set));
    }
}

TEST_CASE("bounds bracket the exact clique at moderate n") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 60;
        const auto g = sample_fnp(n, 0.08 + 0.01 * static_cast<double>(seed), RngStream(seed, 4));
        const auto exact = largest_open_exact(g);
        const auto b = largest_open_bounds(g);
        CHECK(b.lower() <= exact.lower());
        CHECK(exact.lower() <= b.upper_bound);
        CHECK(verify_open(g, b.lower_set));
    }
}
