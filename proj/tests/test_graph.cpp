#include "doctest.h"

#include "brute.hpp"
#include "intcol/verify.hpp"

#include <random>

using namespace intcol;

TEST_CASE("build_graph keeps input order and parallel edges")
{
    const Multigraph k3 = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.edge(2) == Edge{2, 0});
    CHECK(k3.is_simple());

    const Multigraph digon = build_graph(2, {{0, 1}, {0, 1}});
    CHECK(digon.edge_count() == 2);
    CHECK(digon.has_parallel_edges());
    CHECK(digon.degree(0) == 2);

    CHECK_THROWS_AS(build_graph(4, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(build_graph(2, {{0, 2}}), PreconditionError);
}

TEST_CASE("loops count twice when allowed")
{
    const Multigraph g = build_graph(1, {{0, 0}, {0, 0}}, true);
    CHECK(g.degree(0) == 4);
    CHECK(g.incident(0).size() == 4);
}

TEST_CASE("bipartition")
{
    auto c4 = bipartition(brute::cycle(4));
    REQUIRE(c4);
    CHECK(c4->side[0] != c4->side[1]);
    CHECK(c4->side[0] == c4->side[2]);
    CHECK(c4->valid_for(brute::cycle(4)));

    CHECK_FALSE(bipartition(brute::complete(3)));

    auto empty = bipartition(Multigraph(3, {}));
    REQUIRE(empty);
    CHECK(empty->side == std::vector<Side>(3, Side::X));
}

TEST_CASE("verify modes")
{
    const Multigraph p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(verify(p3, EdgeColoring{1, 2}, VerifyMode::interval).interval);

    const Multigraph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    const VerifyReport gap = verify(star, EdgeColoring{1, 2, 4}, VerifyMode::interval);
    CHECK(gap.proper);
    CHECK_FALSE(gap.interval);
    CHECK(gap.non_interval_vertices == std::vector<Vertex>{0});

    // Every C_5 palette is {i, i+1 mod 5}: cyclic but 1 and 5 meet at vertex 0.
    const Multigraph c5 = brute::cycle(5);
    const EdgeColoring around{1, 2, 3, 4, 5};
    const VerifyReport r = verify(c5, around, VerifyMode::cyclic, 5);
    CHECK(r.cyclic_interval);
    CHECK_FALSE(r.interval);
    CHECK(r.non_interval_vertices == std::vector<Vertex>{0});

    CHECK_THROWS_AS(verify(c5, EdgeColoring{1, 2, 3, 4, 6}, VerifyMode::cyclic, 5), PreconditionError);
    CHECK_THROWS_AS(verify(c5, EdgeColoring{1, 2}, VerifyMode::proper), PreconditionError);
}

TEST_CASE("verify agrees with the brute checker and is shift invariant")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const int m = static_cast<int>(rng() % 9);
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i) {
            const int a = static_cast<int>(rng() % n);
            int b = static_cast<int>(rng() % n);
            if (a == b)
                b = (a + 1) % n;
            edges.push_back({a, b});
        }
        const Multigraph g(n, edges);
        std::vector<Color> colors(m);
        for (auto& x : colors)
            x = 1 + static_cast<int>(rng() % 4);
        const EdgeColoring c(colors);
        const VerifyReport report = verify(g, c, VerifyMode::interval);
        CHECK(report.proper == brute::proper(g, colors));
        CHECK(report.interval == brute::interval(g, colors));
        CHECK(report.interval == verify_serial(g, c, VerifyMode::interval).interval);
        if (report.interval)
            CHECK(report.proper);

        std::vector<Color> shifted = colors;
        for (auto& x : shifted)
            x -= 3;
        CHECK(verify(g, EdgeColoring(shifted), VerifyMode::interval).interval == report.interval);
        if (report.interval && m > 0)
            CHECK(verify(g, c, VerifyMode::cyclic, c.max_color()).cyclic_interval);
    }
}

TEST_CASE("parallel and serial verify agree on a large instance")
{
    std::mt19937 rng(11);
    const int n = 20000;
    std::vector<Edge> edges;
    for (int i = 0; i < 60000; ++i) {
        const int a = static_cast<int>(rng() % n);
        const int b = (a + 1 + static_cast<int>(rng() % (n - 1))) % n;
        edges.push_back({a, b});
    }
    const Multigraph g(n, edges);
    std::vector<Color> colors(edges.size());
    for (auto& x : colors)
        x = 1 + static_cast<int>(rng() % 30);
    const EdgeColoring c(colors);
    const VerifyReport a = verify(g, c, VerifyMode::interval);
    const VerifyReport b = verify_serial(g, c, VerifyMode::interval);
    CHECK(a.improper_vertices == b.improper_vertices);
    CHECK(a.non_interval_vertices == b.non_interval_vertices);
    CHECK(a.bad_edges == b.bad_edges);
}

TEST_CASE("interval verdict is component-wise")
{
    const Multigraph two = build_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    CHECK(verify(two, EdgeColoring{1, 2, 7, 8}, VerifyMode::interval).interval);
    CHECK_FALSE(verify(two, EdgeColoring{1, 2, 7, 9}, VerifyMode::interval).interval);
}

TEST_CASE("verify_decomposition")
{
    const Multigraph k3 = brute::complete(3);
    Decomposition ok;
    ok.part = {0, 0, 1};
    ok.certificates = {std::vector<Color>{1, 2}, std::vector<Color>{1}};
    CHECK(verify_decomposition(k3, ok).interval);

    Decomposition one;
    one.part = {0, 0, 0};
    one.certificates = {std::vector<Color>{1, 2, 3}};
    CHECK_FALSE(verify_decomposition(k3, one).interval);

    CHECK(verify_decomposition(Multigraph(0, {}), Decomposition{}).interval);

    Decomposition missing;
    missing.part = {0, 0, 1};
    missing.certificates = {std::vector<Color>{1, 2}, std::nullopt};
    CHECK_THROWS_AS(verify_decomposition(k3, missing), PreconditionError);

    Decomposition short_cover;
    short_cover.part = {0, 0};
    short_cover.certificates = {std::vector<Color>{1, 2}};
    CHECK_FALSE(verify_decomposition(k3, short_cover).interval);
}

TEST_CASE("normalize")
{
    CHECK(normalize(EdgeColoring{0, 1, 2}) == EdgeColoring{1, 2, 3});
    CHECK(normalize(EdgeColoring{5}) == EdgeColoring{1});
    CHECK(normalize(EdgeColoring{1, 2}) == EdgeColoring{1, 2});
    CHECK(normalize(EdgeColoring{-1, 0}) == EdgeColoring{1, 2});
}

TEST_CASE("Decomposition helpers")
{
    const std::vector<Color> colors{4, 5, 9, 2};
    Decomposition d = Decomposition::from_colors(3, {0, 0, 2, 0}, colors);
    CHECK(d.part_count() == 3);
    CHECK(*d.certificates[0] == std::vector<Color>{3, 4, 1});
    CHECK(*d.certificates[2] == std::vector<Color>{1});
    d.compact();
    CHECK(d.part_count() == 2);
    CHECK(d.part == std::vector<int>{0, 0, 1, 0});
    CHECK(d.part_edges(0) == std::vector<EdgeId>{0, 1, 3});
}
