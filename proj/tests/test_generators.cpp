#include "doctest.h"

#include "brute.hpp"
#include "intcol/edge_coloring.hpp"
#include "intcol/generators.hpp"
#include "intcol/oracles.hpp"

#include <set>

using namespace intcol;

namespace {

Generated gen(const std::string& text, std::uint64_t seed = 1) { return generate(FamilySpec::parse(text, seed)); }

std::set<std::pair<int, int>> pair_set(const Multigraph& g)
{
    std::set<std::pair<int, int>> out;
    for (const Edge& e : g.edges())
        out.insert(std::minmax(e.u, e.v));
    return out;
}

}  // namespace

TEST_CASE("spec parsing")
{
    const FamilySpec s = FamilySpec::parse("complete_multipartite:sizes=1/2/3,seed=9");
    CHECK(s.family == "complete_multipartite");
    CHECK(s.seed == 9);
    CHECK(s.integers("sizes") == std::vector<int>{1, 2, 3});
    CHECK(FamilySpec::parse("fixture:k5").text("name", "") == "k5");
    CHECK(FamilySpec::parse("tree:n=4").to_string() == "tree:n=4");
    CHECK_THROWS_AS(FamilySpec::parse("tree:n=x").integer("n"), PreconditionError);
    CHECK_THROWS_AS(gen("tree"), PreconditionError);
    CHECK_THROWS_AS(gen("nonsense:n=3"), PreconditionError);
}

TEST_CASE("circular complete graphs")
{
    // K_{5/2}: q <= |i-j| <= p-q leaves exactly the pairs at distance 2 or 3, a 5-cycle.
    const Multigraph g = gen("circular_complete:p=5,q=2").graph;
    CHECK(g.edge_count() == 5);
    for (Vertex v = 0; v < 5; ++v)
        CHECK(g.degree(v) == 2);
    CHECK_FALSE(bipartition(g));
    CHECK(gen("circular_complete:p=7,q=1").graph.edge_count() == 21);
    CHECK(gen("circular_complete:p=6,q=3").graph.edge_count() == 3);
    CHECK_THROWS_AS(gen("circular_complete:p=5,q=3"), PreconditionError);
}

TEST_CASE("multipartite families")
{
    const Multigraph oct = gen("balanced:n=2,r=3").graph;
    CHECK(oct.vertex_count() == 6);
    CHECK(oct.edge_count() == 12);
    for (Vertex v = 0; v < 6; ++v)
        CHECK(oct.degree(v) == 4);
    const Multigraph semi = gen("semiregular:n=2,r=2").graph;
    CHECK(semi.vertex_count() == 8);
    CHECK(semi.edge_count() == 4 + 16);
    CHECK(gen("odd_complete:n=3").graph.edge_count() == 21);
    CHECK(gen("complete_multipartite:sizes=1/2/3").graph.edge_count() == 2 + 3 + 6);
}

TEST_CASE("random families keep their invariants")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Multigraph t = gen("tree:n=30", seed).graph;
        CHECK(t.edge_count() == 29);
        CHECK(brute::acyclic(t, [&] {
            std::vector<EdgeId> all(t.edge_count());
            for (EdgeId e = 0; e < t.edge_count(); ++e)
                all[e] = e;
            return all;
        }()));

        const Generated br = gen("biregular:a=3,b=6,x=12", seed);
        REQUIRE(br.bipartition);
        CHECK(br.graph.is_simple());
        for (Vertex v = 0; v < br.graph.vertex_count(); ++v)
            CHECK(br.graph.degree(v) == (v < 12 ? 3 : 6));
        const Generated b5 = gen("biregular:a=5,b=10,x=10", seed);
        CHECK(b5.graph.is_simple());
        CHECK(b5.bipartition->valid_for(b5.graph));

        const Generated eu = gen("eulerian_bipartite:a=8,b=8,max_degree=10", seed);
        CHECK(eu.bipartition->valid_for(eu.graph));
        for (Vertex v = 0; v < eu.graph.vertex_count(); ++v) {
            CHECK(eu.graph.degree(v) % 2 == 0);
            CHECK(eu.graph.degree(v) <= 10);
        }

        const Generated bp = gen("bipartite_random:a=10,b=12,p=0.6,max_degree=3", seed);
        CHECK(bp.graph.max_degree() <= 3);
        CHECK(bp.bipartition->valid_for(bp.graph));

        const Generated cu = gen("cubic_class1:n=20", seed);
        REQUIRE(cu.coloring);
        CHECK(cu.graph.is_simple());
        CHECK(brute::proper(cu.graph, std::vector<Color>(cu.coloring->colors().begin(), cu.coloring->colors().end())));
        for (Vertex v = 0; v < 20; ++v)
            CHECK(cu.graph.degree(v) == 3);

        const Multigraph ca = gen("cactus:cycles=4,max_length=7,pendants=5", seed).graph;
        int comps = 0;
        component_labels(ca, &comps);
        CHECK(comps == 1);
        CHECK(ca.max_degree() >= 3);

        const Multigraph rs = gen("random_simple:n=20,p=0.5,max_degree=9", seed).graph;
        CHECK(rs.is_simple());
        CHECK(rs.max_degree() <= 9);
    }
    CHECK_THROWS_AS(gen("biregular:a=3,b=6,x=5"), PreconditionError);
    CHECK_THROWS_AS(gen("biregular:a=3,b=6,x=4"), PreconditionError);
    CHECK(gen("biregular:a=3,b=6,x=4,simple=0").graph.edge_count() == 12);
}

TEST_CASE("generation is deterministic")
{
    for (const char* text : {"biregular:a=4,b=8,x=16", "eulerian_bipartite:a=9,b=7", "cubic_class1:n=16",
                             "random_simple:n=15,p=0.4", "cactus:cycles=5"}) {
        const Multigraph a = gen(text, 77).graph, b = gen(text, 77).graph;
        CHECK(std::vector<Edge>(a.edges().begin(), a.edges().end()) ==
              std::vector<Edge>(b.edges().begin(), b.edges().end()));
        CHECK(pair_set(gen(text, 77).graph) != pair_set(gen(text, 78).graph));
    }
}

TEST_CASE("fixture verdicts against the brute-force references")
{
    CHECK(fixture_catalog().size() == 11);
    for (const Fixture& f : fixture_catalog()) {
        INFO(f.name);
        if (f.graph.edge_count() <= 12)
            CHECK(brute::interval_colorable(f.graph) == f.interval_colorable);
        CHECK(exact_interval_colorable(f.graph).has_value() == f.interval_colorable);
        if (f.theta && f.graph.edge_count() <= 9)
            CHECK(brute::theta(f.graph) == *f.theta);
        if (f.chromatic_index && f.graph.edge_count() <= 10)
            CHECK(brute::chromatic_index(f.graph) == *f.chromatic_index);
        if (f.chromatic_index)
            CHECK(exact_chromatic_index(f.graph).value == *f.chromatic_index);
        if (f.arboricity && f.graph.edge_count() <= 12)
            CHECK(brute::arboricity(f.graph) == *f.arboricity);
        if (f.arboricity)
            CHECK(nash_williams_arboricity(f.graph) == *f.arboricity);
    }
    const Fixture& s = fixture("sharpness");
    CHECK(s.graph.vertex_count() == 6);
    CHECK(s.graph.edge_count() == 9);
    CHECK(s.graph.max_degree() == 4);
    CHECK_THROWS_AS(fixture("nope"), PreconditionError);
    CHECK(gen("fixture:name=k5").graph.edge_count() == 10);
}
