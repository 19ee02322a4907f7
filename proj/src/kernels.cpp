#include "intcol/kernels.hpp"

#include "intcol/edge_coloring.hpp"
#include "intcol/verify.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace intcol {

namespace {

void require_interval(const Multigraph& g, const EdgeColoring& c, const char* who)
{
    const VerifyReport report = verify(g, c, VerifyMode::interval);
    if (!report.interval)
        throw std::logic_error(std::string(who) + ": construction produced a non-interval coloring");
}

EdgeColoring total(const PartialColoring& c)
{
    std::vector<Color> out;
    out.reserve(c.size());
    for (const auto& x : c) {
        if (!x)
            throw std::logic_error("partial coloring left an edge uncolored");
        out.push_back(*x);
    }
    return EdgeColoring(std::move(out));
}

// Colored degree and palette bounds of v in the colored subgraph.
struct LocalPalette {
    int degree = 0;
    Color low = 0;
    Color high = 0;
};

LocalPalette local_palette(const Multigraph& host, const PartialColoring& c, Vertex v)
{
    LocalPalette p;
    for (EdgeId e : host.incident(v)) {
        if (!c[e])
            continue;
        if (p.degree == 0) {
            p.low = p.high = *c[e];
        } else {
            p.low = std::min(p.low, *c[e]);
            p.high = std::max(p.high, *c[e]);
        }
        ++p.degree;
    }
    return p;
}

}  // namespace

EdgeColoring color_forest(const Multigraph& g)
{
    if (g.has_loops())
        throw PreconditionError("color_forest: graph has a loop");
    int components = 0;
    component_labels(g, &components);
    if (g.edge_count() != g.vertex_count() - components)
        throw PreconditionError("color_forest: graph contains a cycle");

    std::vector<Color> color(g.edge_count(), 0);
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<std::pair<Vertex, Color>> queue;  // vertex, color of the edge it was entered by
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (seen[root])
            continue;
        seen[root] = 1;
        queue.push({root, 0});
        while (!queue.empty()) {
            auto [v, entered] = queue.front();
            queue.pop();
            Color next = entered + 1;
            for (EdgeId e : g.incident(v)) {
                const Vertex w = g.other(e, v);
                if (seen[w])
                    continue;
                seen[w] = 1;
                color[e] = next++;
                queue.push({w, color[e]});
            }
        }
    }
    EdgeColoring result = normalize(EdgeColoring(std::move(color)));
    require_interval(g, result, "color_forest");
    return result;
}

ColoredGraph color_complete_bipartite(int m, int n)
{
    if (m < 1 || n < 1)
        throw PreconditionError("color_complete_bipartite: part sizes must be positive");
    std::vector<Edge> edges;
    std::vector<Color> color;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            edges.push_back({i, m + j});
            color.push_back(i + j + 1);
        }
    ColoredGraph out{Multigraph(m + n, std::move(edges)), EdgeColoring(std::move(color))};
    require_interval(out.graph, out.coloring, "color_complete_bipartite");
    return out;
}

void extend_pendant(const Multigraph& host, PartialColoring& c, EdgeId e, Vertex at)
{
    if (c[e])
        throw PreconditionError("extend_pendant: edge already colored");
    const Edge& ed = host.edge(e);
    if (ed.is_loop() || (ed.u != at && ed.v != at))
        throw PreconditionError("extend_pendant: edge is not a pendant at the given vertex");
    const Vertex leaf = host.other(e, at);
    if (local_palette(host, c, leaf).degree != 0)
        throw PreconditionError("extend_pendant: second endpoint already present in the colored subgraph");
    const LocalPalette p = local_palette(host, c, at);
    c[e] = p.degree == 0 ? 1 : p.high + 1;
}

void attach_cycle(const Multigraph& host, PartialColoring& c, std::span<const EdgeId> walk, Vertex at)
{
    const int length = static_cast<int>(walk.size());
    if (length < 2)
        throw PreconditionError("attach_cycle: cycle too short");
    const LocalPalette p = local_palette(host, c, at);
    if (p.degree != 1)
        throw PreconditionError("attach_cycle: attachment vertex is not a leaf of the colored subgraph");
    // Check the walk is a closed trail from `at` through fresh vertices.
    Vertex x = at;
    for (int i = 0; i < length; ++i) {
        const EdgeId e = walk[i];
        if (c[e])
            throw PreconditionError("attach_cycle: cycle edge already colored");
        const Edge& ed = host.edge(e);
        if (ed.u != x && ed.v != x)
            throw PreconditionError("attach_cycle: edges do not form a walk");
        x = host.other(e, x);
        if (i + 1 < length && (x == at || local_palette(host, c, x).degree != 0))
            throw PreconditionError("attach_cycle: cycle shares a vertex with the colored subgraph");
    }
    if (x != at)
        throw PreconditionError("attach_cycle: walk does not close at the attachment vertex");

    const Color k = p.low;
    if (length % 2 == 0) {
        for (int i = 0; i < length; ++i)
            c[walk[i]] = k + 1 + (i % 2);
    } else {
        c[walk[0]] = k - 1;
        for (int i = 1; i + 1 < length; ++i)
            c[walk[i]] = (i % 2 == 1) ? k : k - 1;
        c[walk[length - 1]] = k + 1;
    }
}

namespace {

// Bridges via lowlink, keyed on edge ids so parallel edges are handled.
std::vector<char> find_bridges(const Multigraph& g)
{
    const int n = g.vertex_count();
    std::vector<int> order(n, -1), low(n, 0);
    std::vector<char> bridge(g.edge_count(), 0);
    int clock = 0;
    struct Frame {
        Vertex v;
        EdgeId via;
        std::size_t next;
    };
    for (Vertex s = 0; s < n; ++s) {
        if (order[s] >= 0)
            continue;
        std::vector<Frame> stack = {{s, -1, 0}};
        order[s] = low[s] = clock++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                const EdgeId e = inc[f.next++];
                if (e == f.via)
                    continue;
                const Vertex w = g.other(e, f.v);
                if (order[w] < 0) {
                    order[w] = low[w] = clock++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], order[w]);
                }
            } else {
                const Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& parent = stack.back();
                    low[parent.v] = std::min(low[parent.v], low[done.v]);
                    if (low[done.v] > order[parent.v])
                        bridge[done.via] = 1;
                }
            }
        }
    }
    return bridge;
}

}  // namespace

EdgeColoring color_cactus(const Multigraph& g)
{
    if (g.has_loops())
        throw PreconditionError("color_cactus: graph has a loop");
    int components = 0;
    component_labels(g, &components);
    if (components > 1)
        throw PreconditionError("color_cactus: graph must be connected");
    if (g.edge_count() == g.vertex_count() - 1)
        return color_forest(g);
    if (g.max_degree() <= 2)
        throw PreconditionError("color_cactus: a bare cycle is not covered (maximum degree must be at least 3)");

    const std::vector<char> bridge = find_bridges(g);
    std::vector<std::vector<EdgeId>> cycle_edges(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (bridge[e])
            continue;
        cycle_edges[g.edge(e).u].push_back(e);
        cycle_edges[g.edge(e).v].push_back(e);
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!cycle_edges[v].empty() && cycle_edges[v].size() != 2)
            throw PreconditionError("color_cactus: cycles are not pairwise vertex-disjoint");

    auto cycle_walk = [&](Vertex start) {
        std::vector<EdgeId> walk;
        EdgeId e = cycle_edges[start][0];
        Vertex x = start;
        do {
            walk.push_back(e);
            x = g.other(e, x);
            e = cycle_edges[x][0] == e ? cycle_edges[x][1] : cycle_edges[x][0];
        } while (x != start);
        return walk;
    };

    PartialColoring c(g.edge_count());
    std::vector<char> reached(g.vertex_count(), 0);
    std::queue<Vertex> queue;
    const EdgeId root = static_cast<EdgeId>(std::find(bridge.begin(), bridge.end(), 1) - bridge.begin());
    c[root] = 1;
    for (Vertex v : {g.edge(root).u, g.edge(root).v}) {
        reached[v] = 1;
        queue.push(v);
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        // A cut vertex gets its cycle while it is still a leaf.
        if (!cycle_edges[v].empty() && !c[cycle_edges[v][0]]) {
            const auto walk = cycle_walk(v);
            attach_cycle(g, c, walk, v);
            Vertex x = v;
            for (EdgeId e : walk) {
                x = g.other(e, x);
                if (!reached[x]) {
                    reached[x] = 1;
                    queue.push(x);
                }
            }
        }
        for (EdgeId e : g.incident(v)) {
            if (!bridge[e] || c[e])
                continue;
            extend_pendant(g, c, e, v);
            const Vertex w = g.other(e, v);
            reached[w] = 1;
            queue.push(w);
        }
    }
    EdgeColoring result = normalize(total(c));
    require_interval(g, result, "color_cactus");
    return result;
}

PartialColoring color_two_factor_pair(const Multigraph& host, std::span<const EdgeId> fa, std::span<const EdgeId> fb,
                                      Color base)
{
    PartialColoring c(host.edge_count());
    auto color_cycles = [&](std::span<const EdgeId> factor, Color first) {
        std::vector<char> in_factor(host.edge_count(), 0);
        for (EdgeId e : factor) {
            if (in_factor[e] || c[e])
                throw PreconditionError("color_two_factor_pair: factors are not edge-disjoint");
            in_factor[e] = 1;
        }
        std::vector<std::vector<EdgeId>> at(host.vertex_count());
        for (EdgeId e : factor) {
            at[host.edge(e).u].push_back(e);
            at[host.edge(e).v].push_back(e);
        }
        for (Vertex v = 0; v < host.vertex_count(); ++v)
            if (!at[v].empty() && at[v].size() != 2)
                throw PreconditionError("color_two_factor_pair: factor is not a union of cycles");
        for (EdgeId start : factor) {
            if (c[start])
                continue;
            std::vector<EdgeId> walk;
            Vertex x = host.edge(start).u;
            EdgeId e = start;
            const Vertex origin = x;
            do {
                walk.push_back(e);
                x = host.other(e, x);
                e = at[x][0] == e ? at[x][1] : at[x][0];
            } while (x != origin);
            if (walk.size() % 2 != 0)
                throw PreconditionError("color_two_factor_pair: odd cycle present");
            for (std::size_t i = 0; i < walk.size(); ++i)
                c[walk[i]] = first + static_cast<Color>(i % 2);
        }
    };
    color_cycles(fa, base + 1);
    color_cycles(fb, base + 3);
    return c;
}

EdgeColoring color_low_even_bipartite(const Multigraph& g, const BipartitionCert& cert)
{
    if (!cert.valid_for(g))
        throw PreconditionError("color_low_even_bipartite: graph is not bipartite under the certificate");
    const int delta = g.max_degree();
    if (delta % 2 != 0)
        throw PreconditionError("color_low_even_bipartite: maximum degree must be even");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d != 0 && d != 1 && d != 2 && d != delta)
            throw PreconditionError("color_low_even_bipartite: degree " + std::to_string(d) +
                                    " outside {1, 2, Δ}");
    }
    std::vector<Color> color(g.edge_count(), 0);
    std::vector<char> done(g.edge_count(), 0);

    // Components made only of vertices of degree ≤ 2 are paths or even
    // cycles: alternate 1, 2.
    auto alternate_from = [&](Vertex start, EdgeId first) {
        Vertex x = start;
        EdgeId e = first;
        Color next = 1;
        while (e >= 0 && !done[e]) {
            done[e] = 1;
            color[e] = next;
            next = 3 - next;
            x = g.other(e, x);
            EdgeId step = -1;
            for (EdgeId f : g.incident(x))
                if (!done[f])
                    step = f;
            e = step;
        }
    };

    const int r = delta / 2;
    if (r >= 2) {
        const auto is_big = [&](Vertex v) { return g.degree(v) == delta; };
        // Chains: from a big vertex through degree-2 vertices to a big vertex
        // (real) or to a leaf (dangling).
        struct Chain {
            Vertex from = 0;
            Vertex to = 0;  // big endpoint, or -1 if dangling
            std::vector<EdgeId> edges;
        };
        std::vector<Chain> chains;
        std::vector<char> chained(g.edge_count(), 0);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (!is_big(v))
                continue;
            for (EdgeId first : g.incident(v)) {
                if (chained[first])
                    continue;
                Chain chain{v, -1, {}};
                Vertex x = v;
                EdgeId e = first;
                while (true) {
                    chained[e] = 1;
                    chain.edges.push_back(e);
                    x = g.other(e, x);
                    if (is_big(x)) {
                        chain.to = x;
                        break;
                    }
                    if (g.degree(x) == 1)
                        break;
                    const auto inc = g.incident(x);
                    e = inc[0] == e ? inc[1] : inc[0];
                }
                chains.push_back(std::move(chain));
            }
        }
        // Suppressed graph on big vertices: real chains become edges (loops if
        // both ends coincide); dangling chains are paired into virtual edges.
        std::vector<Vertex> big_index(g.vertex_count(), -1);
        int bigs = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (is_big(v))
                big_index[v] = bigs++;
        struct Segment {
            std::vector<EdgeId> edges;  // G edges in order from `a` to `b`
            std::size_t jump = 0;       // index where a virtual jump occurs (0 = none)
        };
        std::vector<Edge> reduced;
        std::vector<Segment> segments;
        std::vector<const Chain*> dangling;
        for (const Chain& chain : chains) {
            if (chain.to >= 0) {
                reduced.push_back({big_index[chain.from], big_index[chain.to]});
                segments.push_back({chain.edges, 0});
            } else {
                dangling.push_back(&chain);
            }
        }
        if (dangling.size() % 2 != 0)
            throw std::logic_error("color_low_even_bipartite: odd number of dangling chains");
        for (std::size_t i = 0; i < dangling.size(); i += 2) {
            const Chain& p = *dangling[i];
            const Chain& q = *dangling[i + 1];
            Segment s;
            s.edges = p.edges;
            s.jump = p.edges.size();
            s.edges.insert(s.edges.end(), q.edges.rbegin(), q.edges.rend());
            reduced.push_back({big_index[p.from], big_index[q.from]});
            segments.push_back(std::move(s));
        }
        const Multigraph suppressed(bigs, reduced, true);
        const TwoFactorization factors = petersen_two_factorization(suppressed);

        for (std::size_t i = 0; i < factors.factors.size(); ++i) {
            const Color low = static_cast<Color>(2 * i + 1);
            const auto& factor = factors.factors[i];
            std::vector<std::vector<EdgeId>> at(bigs);
            for (EdgeId e : factor) {
                at[suppressed.edge(e).u].push_back(e);
                at[suppressed.edge(e).v].push_back(e);
            }
            std::vector<char> used(suppressed.edge_count(), 0);
            for (EdgeId start : factor) {
                if (used[start])
                    continue;
                // Walk the factor cycle, expanding each reduced edge into its
                // G edges; jumps mark where alternation may restart.
                std::vector<EdgeId> sequence;
                std::vector<std::size_t> jumps;
                const Vertex origin = suppressed.edge(start).u;
                Vertex x = origin;
                EdgeId e = start;
                do {
                    used[e] = 1;
                    const Segment& s = segments[e];
                    const bool forward = suppressed.edge(e).u == x;
                    const std::size_t offset = sequence.size();
                    if (forward) {
                        sequence.insert(sequence.end(), s.edges.begin(), s.edges.end());
                        if (s.jump)
                            jumps.push_back(offset + s.jump);
                    } else {
                        sequence.insert(sequence.end(), s.edges.rbegin(), s.edges.rend());
                        if (s.jump)
                            jumps.push_back(offset + s.edges.size() - s.jump);
                    }
                    x = suppressed.other(e, x);
                    EdgeId next = -1;
                    for (EdgeId f : at[x])
                        if (!used[f])
                            next = f;
                    e = next;
                } while (e >= 0);
                std::size_t begin = jumps.empty() ? 0 : jumps.front();
                if (jumps.empty() && sequence.size() % 2 != 0)
                    throw std::logic_error("color_low_even_bipartite: odd closed walk in a bipartite graph");
                for (std::size_t j = 0; j < sequence.size(); ++j) {
                    const EdgeId ge = sequence[(begin + j) % sequence.size()];
                    color[ge] = low + static_cast<Color>(j % 2);
                    done[ge] = 1;
                }
            }
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 1)
            continue;
        const EdgeId e = g.incident(v)[0];
        if (!done[e])
            alternate_from(v, e);
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!done[e])
            alternate_from(g.edge(e).u, e);

    EdgeColoring result(std::move(color));
    require_interval(g, result, "color_low_even_bipartite");
    return result;
}

std::vector<std::vector<std::pair<int, int>>> round_robin(int m)
{
    if (m < 2 || m % 2 != 0)
        throw PreconditionError("round_robin: need an even number of players");
    const int ring = m - 1;
    std::vector<std::vector<std::pair<int, int>>> rounds(ring);
    for (int rho = 0; rho < ring; ++rho) {
        rounds[rho].push_back({ring, rho});
        for (int i = 1; i <= (m - 2) / 2; ++i)
            rounds[rho].push_back({(rho + i) % ring, (rho - i + ring) % ring});
    }
    // Relabel so the first round pairs (0,1), (2,3), ...
    std::vector<int> relabel(m);
    for (std::size_t k = 0; k < rounds[0].size(); ++k) {
        relabel[rounds[0][k].first] = static_cast<int>(2 * k);
        relabel[rounds[0][k].second] = static_cast<int>(2 * k + 1);
    }
    for (auto& round : rounds)
        for (auto& [a, b] : round) {
            a = relabel[a];
            b = relabel[b];
            if (a > b)
                std::swap(a, b);
        }
    return rounds;
}

ColoredGraph color_balanced_multipartite(int n, int r)
{
    if (n < 1 || r < 2)
        throw PreconditionError("color_balanced_multipartite: need n >= 1 and r >= 2");
    if ((n * r) % 2 != 0)
        throw PreconditionError("color_balanced_multipartite: nr must be even");
    std::vector<std::vector<Vertex>> parts(r);
    for (int p = 0; p < r; ++p)
        for (int i = 0; i < n; ++i)
            parts[p].push_back(p * n + i);
    std::vector<Edge> edges;
    const int total_vertices = n * r;
    std::vector<EdgeId> index(static_cast<std::size_t>(total_vertices) * total_vertices, -1);
    for (Vertex a = 0; a < total_vertices; ++a)
        for (Vertex b = a + 1; b < total_vertices; ++b)
            if (a / n != b / n) {
                index[static_cast<std::size_t>(a) * total_vertices + b] = static_cast<EdgeId>(edges.size());
                index[static_cast<std::size_t>(b) * total_vertices + a] = static_cast<EdgeId>(edges.size());
                edges.push_back({a, b});
            }
    std::vector<Color> color(edges.size(), 0);
    color_balanced_parts(
        parts, [&](Vertex a, Vertex b) { return index[static_cast<std::size_t>(a) * total_vertices + b]; }, color);
    ColoredGraph out{Multigraph(total_vertices, std::move(edges)), EdgeColoring(std::move(color))};
    require_interval(out.graph, out.coloring, "color_balanced_multipartite");
    return out;
}

}  // namespace intcol
