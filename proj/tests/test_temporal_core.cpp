#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "oracles.hpp"
#include "rstg/bit_matrix.hpp"
#include "rstg/errors.hpp"
#include "rstg/random_models.hpp"
#include "rstg/temporal_graph.hpp"

using namespace rstg;

TEST_CASE("construction validates the simple temporal graph invariants") {
    CHECK_NOTHROW(TemporalGraph(3, {{0, 1, 0.1}, {1, 2, 0.2}}));
    CHECK_THROWS_AS(TemporalGraph(3, {{0, 1, 0.2}, {1, 2, 0.2}}), GraphFormatError);  // repeated label
    CHECK_THROWS_AS(TemporalGraph(3, {{0, 1, 0.3}, {1, 2, 0.2}}), GraphFormatError);  // not ascending
    CHECK_THROWS_AS(TemporalGraph(3, {{0, 1, 0.1}, {1, 0, 0.2}}), GraphFormatError);  // repeated pair
    CHECK_THROWS_AS(TemporalGraph(3, {{1, 1, 0.1}}), GraphFormatError);
    CHECK_THROWS_AS(TemporalGraph(3, {{0, 3, 0.1}}), GraphFormatError);
    CHECK_THROWS_AS(TemporalGraph(3, {{0, 1, 1.5}}), GraphFormatError);
    CHECK_THROWS_AS(TemporalGraph(3, {{0, 1, std::nan("")}}), GraphFormatError);

    auto g = TemporalGraph::from_unsorted(3, {{2, 1, 0.5}, {0, 1, 0.25}});
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edges()[0] == TemporalEdge{0, 1, 0.25});
    CHECK(g.edges()[1] == TemporalEdge{1, 2, 0.5});
    CHECK(g.label_of(2, 1) == 0.5);
    CHECK_FALSE(g.label_of(0, 2).has_value());
}

TEST_CASE("time windows") {
    CHECK_THROWS_AS(TimeWindow::make(0.6, 0.5), DomainError);
    CHECK_THROWS_AS(TimeWindow::make(-0.1, 0.5), DomainError);
    auto w = TimeWindow::make(0.2, 0.7);
    CHECK(w.contains(0.2));
    CHECK(w.contains(0.7));
    CHECK_FALSE(w.contains(0.71));
    CHECK(w.reversed().a == doctest::Approx(0.3));
    CHECK(w.reversed().b == doctest::Approx(0.8));
}

TEST_CASE("restrict_window") {
    const auto g = oracle::cycle();
    CHECK(restrict_window(g, TimeWindow::full()).edges() == g.edges());
    const auto r = restrict_window(g, TimeWindow::make(0.15, 0.35));
    REQUIRE(r.edge_count() == 2);
    CHECK(r.edges()[0] == TemporalEdge{1, 2, 0.2});
    CHECK(r.edges()[1] == TemporalEdge{2, 3, 0.3});
    CHECK(restrict_window(g, TimeWindow::make(0.5, 0.5)).edge_count() == 0);
    CHECK(restrict_window(g, TimeWindow::make(0.3, 0.3)).edge_count() == 1);
}

TEST_CASE("induced_subgraph") {
    const auto g = oracle::cycle();
    auto ab = induced_subgraph(g, {1, 0});
    REQUIRE(ab.graph.edge_count() == 1);
    CHECK(ab.graph.edges()[0] == TemporalEdge{0, 1, 0.1});
    CHECK(ab.to_parent == std::vector<VertexId>{0, 1});

    auto all = induced_subgraph(g, {0, 1, 2, 3});
    CHECK(all.graph.edges() == g.edges());

    auto ac = induced_subgraph(g, {0, 2, 2});
    CHECK(ac.graph.vertex_count() == 2);
    CHECK(ac.graph.edge_count() == 0);

    auto cd = induced_subgraph(g, {3, 2});
    REQUIRE(cd.graph.edge_count() == 1);
    CHECK(cd.to_parent == std::vector<VertexId>{2, 3});
    CHECK(cd.graph.edges()[0] == TemporalEdge{0, 1, 0.3});

    CHECK_THROWS_AS(induced_subgraph(g, {0, 4}), DomainError);
}

TEST_CASE("reverse_time") {
    const auto one = TemporalGraph(2, {{0, 1, 0.1}});
    CHECK(reverse_time(one).edges()[0].label == doctest::Approx(0.9));

    const auto g = oracle::cycle();
    const auto r = reverse_time(g);
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = 0; v < 4; ++v) CHECK(oracle::reaches(g, u, v) == oracle::reaches(r, v, u));
    CHECK(oracle::reaches(g, 3, 0));
    CHECK(oracle::reaches(r, 0, 3));

    RngStream rng(17, 0);
    for (int i = 0; i < 20; ++i) {
        const auto s = sample_fnp(30, 0.5, rng);
        CHECK(reverse_time(reverse_time(s)).edges() == s.edges());
    }
}

TEST_CASE("is_temporal_path") {
    const auto g = oracle::cycle();
    CHECK(is_temporal_path(g, {{0, 1, 2}, {{0, 1, 0.1}, {1, 2, 0.2}}}));
    CHECK_FALSE(is_temporal_path(g, {{2, 1, 0}, {{1, 2, 0.2}, {0, 1, 0.1}}}));
    CHECK(is_temporal_path(g, {{0}, {}}));
    // edge not in g
    CHECK_FALSE(is_temporal_path(g, {{0, 2}, {{0, 2, 0.15}}}));
    // vertices may repeat, only the labels have to increase
    CHECK(is_temporal_path(g, {{0, 1, 2, 3, 0}, {{0, 1, 0.1}, {1, 2, 0.2}, {2, 3, 0.3}, {0, 3, 0.4}}}));
    CHECK_FALSE(is_temporal_path(g, {{0, 1}, {{1, 2, 0.2}}}));
}

TEST_CASE("tgf round trip") {
    RngStream rng(5, 1);
    const auto g = sample_fnp(25, 0.3, rng);
    const auto back = parse_tgf(to_tgf(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());

    const auto path = (std::filesystem::temp_directory_path() / "rstg_tgf_roundtrip.tgf").string();
    save_tgf(path, g);
    CHECK(load_tgf(path).edges() == g.edges());
    std::remove(path.c_str());

    CHECK_THROWS_AS(parse_tgf("3 2\n0 1 0.5\n"), GraphFormatError);
    CHECK_THROWS_AS(parse_tgf("3 1\n0 1 abc\n"), GraphFormatError);
    CHECK_THROWS_AS(parse_tgf("2 2\n0 1 0.5\n1 0 0.6\n"), GraphFormatError);
    CHECK(parse_tgf("1 0\n").vertex_count() == 1);
}

TEST_CASE("bit matrix") {
    BitMatrix m(70);
    m.set(3, 69);
    m.set(3, 0);
    m.set(65, 69);
    CHECK(m.test(3, 69));
    CHECK(m.row_count(3) == 2);
    CHECK(m.column_counts()[69] == 2);
    const auto t = m.transposed();
    CHECK(t.test(69, 3));
    CHECK(t.test(69, 65));
    CHECK(t.transposed() == m);
    m.reset(3, 69);
    CHECK_FALSE(m.test(3, 69));
    std::vector<std::size_t> bits;
    for_each_bit(t.row(69), [&](std::size_t b) { bits.push_back(b); });
    CHECK(bits == std::vector<std::size_t>{3, 65});
}
