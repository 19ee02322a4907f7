#include "intcol/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace intcol {

namespace {

using Rng = std::mt19937_64;

constexpr int kRetries = 1000;

int below(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

[[noreturn]] void infeasible(const std::string& what) { throw PreconditionError(what); }

void require(bool ok, const std::string& what)
{
    if (!ok)
        infeasible(what);
}

Multigraph tree(Rng& rng, int n)
{
    require(n >= 1, "tree: n must be positive");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.push_back({below(rng, v), v});
    return Multigraph(n, std::move(edges));
}

Multigraph cactus(Rng& rng, int cycles, int max_length, int pendants)
{
    require(cycles >= 0 && pendants >= 0, "cactus: counts must be nonnegative");
    require(max_length >= 3, "cactus: max_length must be at least 3");
    std::vector<Edge> edges{{0, 1}};
    int n = 2;
    for (int c = 0; c < cycles; ++c) {
        // A bridge to a fresh vertex, which then carries the new cycle.
        const Vertex anchor = below(rng, n);
        const Vertex w = n++;
        edges.push_back({anchor, w});
        const int length = 3 + below(rng, max_length - 2);
        Vertex prev = w;
        for (int i = 1; i < length; ++i) {
            edges.push_back({prev, n});
            prev = n++;
        }
        edges.push_back({prev, w});
    }
    for (int p = 0; p < pendants; ++p) {
        edges.push_back({below(rng, n), n});
        ++n;
    }
    return Multigraph(n, std::move(edges));
}

Generated bipartite_random(Rng& rng, int a, int b, double p, int cap, int mult)
{
    require(a >= 1 && b >= 1, "bipartite_random: side sizes must be positive");
    require(cap >= 1 && mult >= 1, "bipartite_random: max_degree and mult must be positive");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            pairs.push_back({i, a + j});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::uniform_real_distribution<double> coin(0, 1);
    std::vector<int> degree(a + b, 0);
    std::vector<Edge> edges;
    for (auto [x, y] : pairs) {
        if (coin(rng) >= p)
            continue;
        const int copies = std::min({1 + below(rng, mult), cap - degree[x], cap - degree[y]});
        for (int c = 0; c < copies; ++c)
            edges.push_back({x, y});
        degree[x] += std::max(copies, 0);
        degree[y] += std::max(copies, 0);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) { return std::pair{l.u, l.v} < std::pair{r.u, r.v}; });
    BipartitionCert cert;
    cert.side.assign(a + b, Side::Y);
    std::fill(cert.side.begin(), cert.side.begin() + a, Side::X);
    return {Multigraph(a + b, std::move(edges)), cert, std::nullopt};
}

// Greedy realization (each X vertex takes the Y vertices with most remaining
// demand, ties broken at random) followed by random degree-preserving
// switches. Without simplicity it is a plain configuration pairing.
Generated biregular(Rng& rng, int a, int b, int x, bool simple)
{
    require(a >= 1 && b >= 1 && x >= 1, "biregular: a, b and x must be positive");
    require((a * x) % b == 0, "biregular: a*x must be divisible by b");
    const int y = a * x / b;
    std::vector<Edge> edges;
    if (!simple) {
        std::vector<Vertex> stubs;
        for (int j = 0; j < y; ++j)
            stubs.insert(stubs.end(), b, x + j);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        for (int i = 0; i < x; ++i)
            for (int k = 0; k < a; ++k)
                edges.push_back({i, stubs[i * a + k]});
    } else {
        require(y >= a && x >= b, "biregular: no simple graph with these sides");
        std::vector<int> demand(y, b);
        std::vector<int> order(y);
        for (int i = 0; i < x; ++i) {
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return demand[l] > demand[r]; });
            for (int k = 0; k < a; ++k) {
                require(demand[order[k]] > 0, "biregular: degree sequence not realizable");
                --demand[order[k]];
                edges.push_back({i, x + order[k]});
            }
        }
        std::set<std::pair<int, int>> present;
        for (const Edge& e : edges)
            present.insert({e.u, e.v});
        const int m = static_cast<int>(edges.size());
        for (int step = 0; step < 10 * m; ++step) {
            const int e = below(rng, m), f = below(rng, m);
            const Edge p = edges[e], q = edges[f];
            if (p.u == q.u || p.v == q.v || present.count({p.u, q.v}) || present.count({q.u, p.v}))
                continue;
            present.erase({p.u, p.v});
            present.erase({q.u, q.v});
            edges[e].v = q.v;
            edges[f].v = p.v;
            present.insert({p.u, q.v});
            present.insert({q.u, p.v});
        }
    }
    BipartitionCert cert;
    cert.side.assign(x + y, Side::Y);
    std::fill(cert.side.begin(), cert.side.begin() + x, Side::X);
    return {Multigraph(x + y, std::move(edges)), cert, std::nullopt};
}

Generated eulerian_bipartite(Rng& rng, int a, int b, int cap, int cycles)
{
    require(a >= 2 && b >= 2, "eulerian_bipartite: sides need at least two vertices");
    require(cap >= 2, "eulerian_bipartite: max_degree must be at least 2");
    std::vector<int> degree(a + b, 0);
    std::vector<Edge> edges;
    std::vector<int> xs(a), ys(b);
    std::iota(xs.begin(), xs.end(), 0);
    std::iota(ys.begin(), ys.end(), a);
    for (int c = 0; c < cycles; ++c) {
        const int length = 2 + below(rng, std::min(a, b) - 1);
        std::shuffle(xs.begin(), xs.end(), rng);
        std::shuffle(ys.begin(), ys.end(), rng);
        bool fits = true;
        for (int i = 0; i < length; ++i)
            fits = fits && degree[xs[i]] + 2 <= cap && degree[ys[i]] + 2 <= cap;
        if (!fits)
            continue;
        for (int i = 0; i < length; ++i) {
            edges.push_back({xs[i], ys[i]});
            edges.push_back({ys[i], xs[(i + 1) % length]});
            degree[xs[i]] += 2;
            degree[ys[i]] += 2;
        }
    }
    BipartitionCert cert;
    cert.side.assign(a + b, Side::Y);
    std::fill(cert.side.begin(), cert.side.begin() + a, Side::X);
    for (Edge& e : edges)
        if (e.u > e.v)
            std::swap(e.u, e.v);
    return {Multigraph(a + b, std::move(edges)), cert, std::nullopt};
}

Multigraph multipartite(const std::vector<int>& sizes)
{
    require(sizes.size() >= 2, "complete_multipartite: need at least two parts");
    std::vector<int> owner;
    for (std::size_t p = 0; p < sizes.size(); ++p) {
        require(sizes[p] >= 1, "complete_multipartite: sizes must be positive");
        owner.insert(owner.end(), sizes[p], static_cast<int>(p));
    }
    const int n = static_cast<int>(owner.size());
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (owner[u] != owner[v])
                edges.push_back({u, v});
    return Multigraph(n, std::move(edges));
}

Multigraph circular_complete(int p, int q)
{
    require(q >= 1 && p >= 2 * q, "circular_complete: need q >= 1 and p >= 2q");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < p; ++i)
        for (Vertex j = i + 1; j < p; ++j)
            if (q <= j - i && j - i <= p - q)
                edges.push_back({i, j});
    return Multigraph(p, std::move(edges));
}

Generated cubic_class1(Rng& rng, int n)
{
    require(n >= 4 && n % 2 == 0, "cubic_class1: n must be even and at least 4");
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        std::set<std::pair<int, int>> used;
        std::vector<Edge> edges;
        std::vector<Color> colors;
        bool ok = true;
        for (Color c = 1; c <= 3 && ok; ++c) {
            bool placed = false;
            for (int inner = 0; inner < kRetries && !placed; ++inner) {
                std::vector<int> perm(n);
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                std::vector<std::pair<int, int>> matching;
                bool clash = false;
                for (int i = 0; i < n && !clash; i += 2) {
                    const auto key = std::minmax(perm[i], perm[i + 1]);
                    clash = used.count({key.first, key.second}) > 0;
                    matching.push_back({key.first, key.second});
                }
                if (clash)
                    continue;
                for (auto pair : matching) {
                    used.insert(pair);
                    edges.push_back({pair.first, pair.second});
                    colors.push_back(c);
                }
                placed = true;
            }
            ok = placed;
        }
        if (ok)
            return {Multigraph(n, std::move(edges)), std::nullopt, EdgeColoring(std::move(colors))};
    }
    infeasible("cubic_class1: no three disjoint perfect matchings found");
}

Multigraph random_simple(Rng& rng, int n, double p, int cap)
{
    require(n >= 1, "random_simple: n must be positive");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::uniform_real_distribution<double> coin(0, 1);
    std::vector<int> degree(n, 0);
    std::vector<Edge> edges;
    for (auto [u, v] : pairs)
        if (coin(rng) < p && degree[u] < cap && degree[v] < cap) {
            ++degree[u];
            ++degree[v];
            edges.push_back({u, v});
        }
    std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) { return std::pair{l.u, l.v} < std::pair{r.u, r.v}; });
    return Multigraph(n, std::move(edges));
}

Multigraph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) { return build_graph(n, pairs); }

std::vector<Fixture> make_catalog()
{
    std::vector<Fixture> c;
    auto cycle = [](int n) {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
        return Multigraph(n, edges);
    };
    auto complete = [](int n) { return multipartite(std::vector<int>(n, 1)); };

    c.push_back({"k3", "complete graph K_3", complete(3), false, 2, 3, 2});
    c.push_back({"c4", "cycle C_4", cycle(4), true, 1, 2, 2});
    c.push_back({"c5", "cycle C_5", cycle(5), false, 2, 3, 2});
    c.push_back({"c7", "cycle C_7", cycle(7), false, 2, 3, 2});
    c.push_back({"sharpness",
                 "triangle v0 v1 v2 with a length-2 path through a new vertex for each pair; chi' = Delta = 4",
                 from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}}), false, 2, 4,
                 2});
    c.push_back({"k4", "complete graph K_4", complete(4), true, 1, 3, 2});
    c.push_back({"k5", "complete graph K_5", complete(5), false, 2, 5, 3});
    c.push_back({"k33", "complete bipartite K_{3,3}", multipartite({3, 3}), true, 1, 3, 2});
    c.push_back({"octahedron", "K_{2,2,2}", multipartite({2, 2, 2}), true, 1, 4, 3});
    {
        std::vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.push_back({i, (i + 1) % 5});
            edges.push_back({i, 5 + i});
            edges.push_back({5 + i, 5 + (i + 2) % 5});
        }
        c.push_back({"petersen", "Petersen graph, cubic of class 2", Multigraph(10, edges), false, std::nullopt, 4, 2});
    }
    c.push_back({"biregular36",
                 "(3,6)-biregular multigraph: four degree-3 vertices, two degree-6 vertices",
                 from_pairs(6, {{0, 4}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {1, 5}, {2, 4}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {3, 5}}),
                 true, 1, 6, 3});
    return c;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text, std::uint64_t seed)
{
    FamilySpec spec;
    spec.seed = seed;
    const auto colon = text.find(':');
    spec.family = std::string(text.substr(0, colon));
    if (spec.family.empty())
        throw PreconditionError("family spec has no family tag");
    if (colon == std::string_view::npos)
        return spec;
    std::string rest(text.substr(colon + 1));
    std::stringstream in(rest);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            if (spec.params.count("name"))
                throw PreconditionError("family spec item '" + item + "' is not key=value");
            spec.params["name"] = item;
            continue;
        }
        spec.params[item.substr(0, eq)] = item.substr(eq + 1);
    }
    if (auto it = spec.params.find("seed"); it != spec.params.end()) {
        spec.seed = std::stoull(it->second);
        spec.params.erase(it);
    }
    return spec;
}

std::string FamilySpec::to_string() const
{
    std::string out = family;
    char sep = ':';
    for (const auto& [k, v] : params) {
        out += sep + k + "=" + v;
        sep = ',';
    }
    return out;
}

int FamilySpec::integer(const std::string& key) const
{
    const auto it = params.find(key);
    if (it == params.end())
        throw PreconditionError(family + ": missing parameter '" + key + "'");
    try {
        std::size_t used = 0;
        const int value = std::stoi(it->second, &used);
        if (used != it->second.size())
            throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw PreconditionError(family + ": parameter '" + key + "' is not an integer");
    }
}

int FamilySpec::integer(const std::string& key, int fallback) const
{
    return params.count(key) ? integer(key) : fallback;
}

double FamilySpec::real(const std::string& key, double fallback) const
{
    const auto it = params.find(key);
    if (it == params.end())
        return fallback;
    try {
        return std::stod(it->second);
    } catch (const std::exception&) {
        throw PreconditionError(family + ": parameter '" + key + "' is not a number");
    }
}

std::vector<int> FamilySpec::integers(const std::string& key) const
{
    const auto it = params.find(key);
    if (it == params.end())
        throw PreconditionError(family + ": missing parameter '" + key + "'");
    std::vector<int> out;
    std::stringstream in(it->second);
    std::string item;
    while (std::getline(in, item, '/')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw PreconditionError(family + ": parameter '" + key + "' is not a '/'-separated integer list");
        }
    }
    return out;
}

std::string FamilySpec::text(const std::string& key, const std::string& fallback) const
{
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

Generated generate(const FamilySpec& spec)
{
    Rng rng(spec.seed);
    const std::string& f = spec.family;
    auto plain = [](Multigraph g) {
        Generated out{std::move(g), std::nullopt, std::nullopt};
        out.bipartition = bipartition(out.graph);
        return out;
    };
    if (f == "tree")
        return plain(tree(rng, spec.integer("n")));
    if (f == "cactus")
        return plain(cactus(rng, spec.integer("cycles", 3), spec.integer("max_length", 6), spec.integer("pendants", 3)));
    if (f == "bipartite_random")
        return bipartite_random(rng, spec.integer("a"), spec.integer("b"), spec.real("p", 0.5),
                                spec.integer("max_degree", 1 << 20), spec.integer("mult", 1));
    if (f == "biregular")
        return biregular(rng, spec.integer("a"), spec.integer("b"), spec.integer("x"), spec.integer("simple", 1) != 0);
    if (f == "eulerian_bipartite") {
        const int a = spec.integer("a"), b = spec.integer("b");
        return eulerian_bipartite(rng, a, b, spec.integer("max_degree", 12), spec.integer("cycles", a + b));
    }
    if (f == "complete_multipartite")
        return plain(multipartite(spec.integers("sizes")));
    if (f == "balanced" || f == "semiregular") {
        const int n = spec.integer("n"), r = spec.integer("r");
        require(n >= 1 && r >= 2, f + ": need n >= 1 and r >= 2");
        std::vector<int> sizes(r, n);
        if (f == "semiregular")
            sizes.push_back(n * r);
        return plain(multipartite(sizes));
    }
    if (f == "circular_complete")
        return plain(circular_complete(spec.integer("p"), spec.integer("q")));
    if (f == "cubic_class1")
        return cubic_class1(rng, spec.integer("n"));
    if (f == "odd_complete") {
        const int n = spec.integer("n");
        require(n >= 1, "odd_complete: n must be positive");
        return plain(multipartite(std::vector<int>(2 * n + 1, 1)));
    }
    if (f == "random_simple")
        return plain(random_simple(rng, spec.integer("n"), spec.real("p", 0.3), spec.integer("max_degree", 1 << 20)));
    if (f == "fixture")
        return plain(fixture(spec.text("name", "")).graph);
    throw PreconditionError("unknown family '" + f + "'");
}

const std::vector<Fixture>& fixture_catalog()
{
    static const std::vector<Fixture> catalog = make_catalog();
    return catalog;
}

const Fixture& fixture(std::string_view name)
{
    for (const Fixture& f : fixture_catalog())
        if (f.name == name)
            return f;
    throw PreconditionError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace intcol
