// Acceptance suite: one PASS/FAIL line per criterion, each against its time
// limit. Exits 1 when any criterion fails.

#include "brute.hpp"
#include "intcol/edge_coloring.hpp"
#include "intcol/generators.hpp"
#include "intcol/kernels.hpp"
#include "intcol/oracles.hpp"
#include "intcol/thickness.hpp"
#include "intcol/timetable.hpp"
#include "intcol/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

using namespace intcol;

namespace {

// Collects failures; a criterion passes when none were recorded.
struct Log {
    int checks = 0;
    std::vector<std::string> failures;
    std::string detail;

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok && failures.size() < 5)
            failures.push_back(what);
        else if (!ok)
            failures.push_back("");
    }
};

std::string str(const std::string& s) { return s; }
template <class T>
std::string str(const T& x)
{
    std::ostringstream o;
    o << x;
    return o.str();
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Every edge in exactly one part and each part properly interval colored by
// its certificate, checked with the brute references.
bool certified(const Multigraph& g, const Decomposition& d)
{
    if (static_cast<int>(d.part.size()) != g.edge_count())
        return false;
    std::vector<int> seen(g.edge_count(), 0);
    for (int p = 0; p < d.part_count(); ++p) {
        if (!d.certificates[p])
            return false;
        const auto edges = d.part_edges(p);
        const auto& colors = *d.certificates[p];
        if (colors.size() != edges.size())
            return false;
        std::vector<Edge> sub;
        for (EdgeId e : edges) {
            ++seen[e];
            sub.push_back(g.edge(e));
        }
        if (!brute::interval(Multigraph(g.vertex_count(), sub, g.allows_loops()), colors))
            return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; });
}

std::string describe(const std::string& spec, std::uint64_t seed) { return spec + " seed " + std::to_string(seed); }

Generated make(const std::string& spec, std::uint64_t seed) { return generate(FamilySpec::parse(spec, seed)); }

int thickness_recurrence(int r) { return r <= 2 ? 1 : thickness_recurrence((r + 1) / 2) + 1; }

void fixture_verdicts(Log& log)
{
    for (const char* name : {"k3", "c5", "c7", "sharpness"}) {
        const Multigraph& g = fixture(name).graph;
        log.expect(!exact_interval_colorable(g), std::string(name) + " accepted");
    }
    const Multigraph& sharp = fixture("sharpness").graph;
    log.expect(exact_chromatic_index(sharp).value == 4 && sharp.max_degree() == 4, "sharpness χ' is not 4 = Δ");
    for (const char* name : {"c4", "k33", "k4", "octahedron"}) {
        const Multigraph& g = fixture(name).graph;
        const auto c = exact_interval_colorable(g);
        log.expect(c && brute::interval(g, std::vector<Color>(c->colors().begin(), c->colors().end())),
                   std::string(name) + " rejected");
    }
    for (const char* name : {"k3", "c5", "k5"})
        log.expect(exact_theta(fixture(name).graph) == 2, std::string("θ(") + name + ") != 2");
}

void subcubic(Log& log)
{
    int worst = 0;
    auto check = [&](const Multigraph& g, const EdgeColoring& c3, const std::string& what) {
        const EdgeColoring c = color_subcubic(g, c3);
        const std::vector<Color> colors(c.colors().begin(), c.colors().end());
        worst = std::max(worst, c.distinct_colors());
        log.expect(brute::interval(g, colors) && verify(g, c, VerifyMode::interval).interval, what + ": not interval");
        log.expect(c.distinct_colors() <= 6, what + ": more than 6 colors");
    };
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const Generated gen = make("cubic_class1:n=20", seed);
        check(gen.graph, *gen.coloring, describe("cubic_class1", seed));
    }
    std::mt19937 rng(2);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const std::string spec = "bipartite_random:a=" + str(2 + rng() % 14) + ",b=" + str(2 + rng() % 14) +
                                 ",p=0." + str(2 + rng() % 7) + ",max_degree=3";
        const Generated gen = make(spec, seed);
        log.expect(gen.graph.max_degree() <= 3, describe(spec, seed) + ": Δ > 3");
        check(gen.graph, konig_color(gen.graph, *gen.bipartition), describe(spec, seed));
    }
    log.detail = "400 graphs, at most " + str(worst) + " colors";
}

// Largest gap between two parts' degrees at any vertex.
int part_degree_gap(const Multigraph& g, const Decomposition& d)
{
    std::vector<std::vector<int>> deg(g.vertex_count(), std::vector<int>(d.part_count(), 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        ++deg[g.edge(e).u][d.part[e]];
        ++deg[g.edge(e).v][d.part[e]];
    }
    int gap = 0;
    for (const auto& row : deg)
        if (!row.empty())
            gap = std::max(gap, *std::max_element(row.begin(), row.end()) - *std::min_element(row.begin(), row.end()));
    return gap;
}

void bipartite(Log& log)
{
    std::mt19937 rng(3);
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const std::string spec = "bipartite_random:a=" + str(1 + rng() % 25) + ",b=" + str(1 + rng() % 25) +
                                 ",p=0." + str(1 + rng() % 9) + ",max_degree=" + str(1 + rng() % 10);
        const Generated gen = make(spec, seed);
        const Multigraph& g = gen.graph;
        const std::string what = describe(spec, seed);
        const Decomposition d = decompose_bipartite(g, *gen.bipartition);
        log.expect(g.max_degree() <= 10, what + ": Δ > 10");
        log.expect(d.part_count() <= ceil_div(g.max_degree(), 3), what + ": too many parts");
        log.expect(certified(g, d), what + ": not certified");
        log.expect(part_degree_gap(g, d) <= 1, what + ": part degrees differ by more than 1");
    }
    log.detail = "300 graphs";
}

void eulerian(Log& log)
{
    std::mt19937 rng(4);
    int widest = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const std::string spec = "eulerian_bipartite:a=" + str(2 + rng() % 14) + ",b=" + str(2 + rng() % 14) +
                                 ",max_degree=" + str(2 + rng() % 11);
        const Generated gen = make(spec, seed);
        const Multigraph& g = gen.graph;
        const std::string what = describe(spec, seed);
        widest = std::max(widest, g.max_degree());
        bool even = true;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            even = even && g.degree(v) % 2 == 0;
        log.expect(even && g.max_degree() <= 12, what + ": not Eulerian with Δ ≤ 12");
        const Decomposition d = decompose_eulerian_bipartite(g, *gen.bipartition);
        log.expect(d.part_count() <= ceil_div(g.max_degree(), 4), what + ": too many parts");
        log.expect(certified(g, d), what + ": not certified");
    }
    log.detail = "100 graphs, Δ up to " + str(widest);
}

void biregular(Log& log)
{
    struct Case {
        int a, b, bound;
        std::vector<int> sizes;  // feasible sizes of the degree-a side
    };
    const std::vector<Case> cases{{3, 6, 2, {6, 8, 10, 12}}, {3, 9, 2, {9, 12, 15}}, {4, 8, 2, {8, 10, 12}},
                                  {5, 10, 3, {10, 12, 14}}};
    std::string summary;
    for (const Case& c : cases) {
        int most = 0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const int x = c.sizes[seed % c.sizes.size()];
            const std::string spec = "biregular:a=" + str(c.a) + ",b=" + str(c.b) + ",x=" + str(x);
            const Generated gen = make(spec, seed);
            const Multigraph& g = gen.graph;
            const std::string what = describe(spec, seed);
            bool profile = true;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                profile = profile && g.degree(v) == (gen.bipartition->side[v] == Side::X ? c.a : c.b);
            log.expect(profile, what + ": degree profile");
            const Decomposition d = decompose_biregular(g, *gen.bipartition);
            most = std::max(most, d.part_count());
            log.expect(d.part_count() <= c.bound, what + ": " + str(d.part_count()) + " parts");
            log.expect(certified(g, d), what + ": not certified");
        }
        summary += (summary.empty() ? "" : ", ") + std::string("(") + str(c.a) + "," + str(c.b) + ") ≤ " + str(most);
    }
    log.detail = summary;
}

void general(Log& log)
{
    std::mt19937 rng(6);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const std::string spec = "random_simple:n=" + str(4 + rng() % 40) + ",p=0." + str(1 + rng() % 9) +
                                 ",max_degree=" + str(1 + rng() % 9);
        const Multigraph g = make(spec, seed).graph;
        const std::string what = describe(spec, seed);
        log.expect(g.max_degree() <= 9 && g.is_simple(), what + ": not simple with Δ ≤ 9");
        const EdgeColoring c = vizing_color(g);
        const std::vector<Color> colors(c.colors().begin(), c.colors().end());
        log.expect(brute::proper(g, colors), what + ": Vizing coloring not proper");
        const Decomposition d = decompose_general(g, c);
        log.expect(d.part_count() <= 2 * ceil_div(c.distinct_colors(), 5), what + ": too many parts");
        log.expect(certified(g, d), what + ": not certified");
    }
    log.detail = "100 graphs";
}

void multipartite(Log& log)
{
    std::mt19937 rng(7);
    for (int r = 2; r <= 12; ++r)
        for (int round = 0; round < 4; ++round) {
            std::vector<int> sizes(r);
            for (int& s : sizes)
                s = 1 + static_cast<int>(rng() % 4);
            std::string what = "K_{";
            for (int s : sizes)
                what += str(s) + ",";
            what.back() = '}';
            const GraphDecomposition gd = decompose_complete_multipartite(sizes);
            log.expect(multipartite_thickness_bound(r) == thickness_recurrence(r), "T(" + str(r) + ")");
            log.expect(gd.decomposition.part_count() == thickness_recurrence(r), what + ": not T(r) parts");
            log.expect(certified(gd.graph, gd.decomposition), what + ": not certified");
        }
    log.expect(thickness_recurrence(4) == 2 && thickness_recurrence(8) == 3, "T(4), T(8)");
    for (int n = 1; n <= 4; ++n)
        for (int r = 2; r <= 7; ++r) {
            const std::string tag = "(n=" + str(n) + ", r=" + str(r) + ")";
            const GraphDecomposition plain = decompose_balanced_family(n, r, BalancedVariant::multipartite);
            log.expect(plain.decomposition.part_count() == ((n * r) % 2 == 0 ? 1 : 2), "K_{n*r} " + tag);
            log.expect(certified(plain.graph, plain.decomposition), "K_{n*r} " + tag + " not certified");
            const GraphDecomposition large = decompose_balanced_family(n, r, BalancedVariant::with_large_part);
            log.expect((n * r) % 2 == 0 ? large.decomposition.part_count() == 1 : large.decomposition.part_count() <= 3,
                       "K_{n*r,nr} " + tag);
            log.expect(certified(large.graph, large.decomposition), "K_{n*r,nr} " + tag + " not certified");
        }
    for (int n = 1; n <= 6; ++n) {
        const GraphDecomposition odd = decompose_balanced_family(n, 0, BalancedVariant::odd_complete);
        log.expect(odd.decomposition.part_count() == 2 && certified(odd.graph, odd.decomposition),
                   "K_" + str(2 * n + 1));
    }
    log.detail = "r in [2,12], balanced n ≤ 4, r ≤ 7";
}

void cyclic_split(Log& log)
{
    auto check = [&](const Multigraph& g, const std::vector<Color>& c, int t, const std::string& what) {
        log.expect(t >= 2 * g.max_degree() - 2, what + ": t < 2Δ - 2");
        log.expect(verify(g, EdgeColoring(c), VerifyMode::cyclic, t).cyclic_interval, what + ": coloring not cyclic");
        const Decomposition d = split_cyclic(g, EdgeColoring(c), t);
        log.expect(certified(g, d), what + ": not certified");
        // Two parts, or one when the graph happens to be interval colorable.
        const int lower = exact_interval_colorable(g) ? 1 : 2;
        log.expect(d.part_count() <= 2 && d.part_count() >= lower, what + ": " + str(d.part_count()) + " parts");
    };
    for (int k = 1; k <= 6; ++k) {
        const Multigraph g = brute::cycle(2 * k + 1);
        std::vector<Color> c(2 * k + 1);
        std::iota(c.begin(), c.end(), 1);
        check(g, c, 2 * k + 1, "C_" + str(2 * k + 1));
    }
    int found = 0, tried = 0;
    for (int p = 5; p <= 10; ++p)
        for (int q = 2; 2 * q < p; ++q) {
            const Multigraph g = make("circular_complete:p=" + str(p) + ",q=" + str(q), 1).graph;
            if (g.edge_count() > 16)
                continue;
            ++tried;
            const int delta = g.max_degree();
            for (int t = std::max(delta, 2 * delta - 2); t <= 2 * delta; ++t) {
                const std::vector<Color> c = brute::cyclic_coloring(g, t, 2'000'000);
                if (c.empty())
                    continue;
                ++found;
                check(g, c, t, "K_{" + str(p) + "/" + str(q) + "} t=" + str(t));
            }
        }
    log.detail = "C_3..C_13 and " + str(found) + " colorings of " + str(tried) + " K_{p/q}";
}

void dominance(Log& log)
{
    std::vector<std::pair<std::string, Multigraph>> graphs;
    for (const Fixture& f : fixture_catalog())
        graphs.push_back({f.name, f.graph});
    std::mt19937 rng(9);
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + static_cast<int>(rng() % 6), m = 1 + static_cast<int>(rng() % 9);
        const bool simple = i % 2 == 0;
        std::vector<Edge> edges;
        for (int attempt = 0; attempt < 200 && static_cast<int>(edges.size()) < m; ++attempt) {
            Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
            if (u == v)
                continue;
            const bool repeat = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
                return (e.u == u && e.v == v) || (e.u == v && e.v == u);
            });
            if (!simple || !repeat)
                edges.push_back({u, v});
        }
        graphs.push_back({"random " + str(i), Multigraph(n, edges)});
    }
    int runs = 0;
    for (const auto& [name, g] : graphs) {
        // Exact θ within budget, else the interval oracle's lower bound.
        const int lower = g.edge_count() == 0                    ? 0
                          : g.edge_count() <= kThetaEdgeBudget ? exact_theta(g)
                          : exact_interval_colorable(g)        ? 1
                                                               : 2;
        if (g.edge_count() <= 9)
            log.expect(lower == brute::theta(g), name + ": exact θ disagrees with brute force");
        for (const std::string& method : dispatch_methods()) {
            const auto r = run_method(g, method);
            if (!r)
                continue;
            ++runs;
            log.expect(certified(g, r->decomposition), name + ": " + method + " not certified");
            log.expect(r->decomposition.part_count() >= lower, name + ": " + method + " below θ");
        }
        const Decomposition general =
            decompose_general(g, g.is_simple() ? vizing_color(g) : shannon_color(g));
        log.expect(certified(g, general) && general.part_count() >= lower, name + ": general");
        const Decomposition peel = decompose_forest_peel(g);
        log.expect(peel.part_count() >= nash_williams_arboricity(g), name + ": forest peel below arboricity");
        runs += 2;
    }
    log.expect(nash_williams_arboricity(brute::complete(7)) == 4, "γ(K_7) != 4");
    log.detail = str(graphs.size()) + " graphs, " + str(runs) + " decompositions";
}

void timetables(Log& log)
{
    std::mt19937 rng(10);
    for (int round = 0; round < 50; ++round) {
        RequirementMatrix b;
        b.b.assign(1 + rng() % 8, std::vector<int>(1 + rng() % 8));
        for (auto& row : b.b)
            for (int& x : row)
                x = static_cast<int>(rng() % 4);
        const RequirementGraph rg = build_requirement_graph(b);
        const std::string what = "matrix " + str(round);
        for (SpreadMode mode : {SpreadMode::fewest_days, SpreadMode::even_spread}) {
            const WeeklyTimetable w = make_weekly_timetable(b, mode);
            log.expect(verify_timetable(b, w.timetable).ok, what + ": verify_timetable");
            log.expect(brute::timetable_valid(b.b, w.timetable.days), what + ": brute timetable check");
            if (mode == SpreadMode::even_spread)
                for (int party = 0; party < b.classes() + b.teachers(); ++party) {
                    const auto loads = daily_loads(w.timetable, party);
                    if (!loads.empty())
                        log.expect(*std::max_element(loads.begin(), loads.end()) -
                                           *std::min_element(loads.begin(), loads.end()) <=
                                       1,
                                   what + ": uneven daily loads");
                }
            const Decomposition back = timetable_to_decomposition(rg, w.timetable);
            log.expect(decomposition_to_timetable(rg, back) == w.timetable, what + ": round trip");
        }
    }
    log.detail = "50 matrices";
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    void (*run)(Log&);
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "fixture verdicts", 60, fixture_verdicts},   {2, "subcubic interval coloring", 30, subcubic},
        {3, "bipartite ceil(delta/3)", 60, bipartite},       {4, "eulerian ceil(delta/4)", 60, eulerian},
        {5, "biregular", 60, biregular},                 {6, "general 2ceil(t/5)", 120, general},
        {7, "complete multipartite", 60, multipartite}, {8, "cyclic split", 30, cyclic_split},
        {9, "oracle dominance", 120, dominance},         {10, "timetable round trip", 30, timetables},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Log log;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(log);
        } catch (const std::exception& e) {
            log.failures.push_back(std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.limit_s)
            log.failures.push_back("over the time limit");
        const bool ok = log.failures.empty();
        failed += !ok;
        std::printf("%s %2d %-28s %7.2f s / %3.0f s  %d checks  %s\n", ok ? "PASS" : "FAIL", c.id, c.name, elapsed,
                    c.limit_s, log.checks, log.detail.c_str());
        for (const std::string& f : log.failures)
            if (!f.empty())
                std::printf("       %s\n", f.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
