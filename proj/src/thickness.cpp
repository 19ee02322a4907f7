#include "intcol/thickness.hpp"

#include "intcol/edge_coloring.hpp"
#include "intcol/kernels.hpp"
#include "intcol/oracles.hpp"
#include "intcol/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace intcol {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Per-edge part and color, turned into a Decomposition at the end.
struct Assembly {
    std::vector<int> part;
    std::vector<Color> color;
    int parts = 0;

    explicit Assembly(int m) : part(m, -1), color(m, 0) {}

    void put(EdgeId e, int p, Color c)
    {
        part[e] = p;
        color[e] = c;
        parts = std::max(parts, p + 1);
    }

    Decomposition finish()
    {
        for (int p : part)
            if (p < 0)
                throw std::logic_error("decomposition left an edge unassigned");
        Decomposition d = Decomposition::from_colors(parts, part, color);
        d.compact();
        return d;
    }
};

void put_part(Assembly& out, const EdgeSubgraph& sub, const EdgeColoring& c, int p)
{
    for (EdgeId i = 0; i < sub.graph.edge_count(); ++i)
        out.put(sub.original[i], p, c[i]);
}

std::vector<std::vector<EdgeId>> classes_of(const EdgeColoring& c, int k)
{
    std::vector<std::vector<EdgeId>> out(k);
    for (EdgeId e = 0; e < c.size(); ++e)
        out[c[e] - 1].push_back(e);
    return out;
}

// ---- general bound -------------------------------------------------------

struct OddCycle {
    std::vector<EdgeId> walk;  // host edges in cyclic order
    std::vector<Vertex> vertices;
};

std::vector<EdgeId> rotate_walk(const Multigraph& host, const OddCycle& c, Vertex at)
{
    const auto it = std::find(c.vertices.begin(), c.vertices.end(), at);
    const std::size_t i = static_cast<std::size_t>(it - c.vertices.begin());
    std::vector<EdgeId> walk;
    for (std::size_t j = 0; j < c.walk.size(); ++j)
        walk.push_back(c.walk[(i + j) % c.walk.size()]);
    (void)host;
    return walk;
}

// One five-color group: `local[e]` in 0..4; classes 0,1 form H and 2..4 form F.
// Writes side 0 (F plus absorbed H paths) or 1 (rest of H) and a color.
void general_group(const Multigraph& host, const std::vector<int>& local, std::vector<int>& side,
                   std::vector<Color>& color)
{
    const int n = host.vertex_count();
    const int m = host.edge_count();
    side.assign(m, -1);
    color.assign(m, 0);

    // Odd cycle components of F.
    std::vector<EdgeId> f_edges;
    for (EdgeId e = 0; e < m; ++e)
        if (local[e] >= 2)
            f_edges.push_back(e);
    const EdgeSubgraph f = edge_subgraph(host, f_edges);
    int comp_count = 0;
    const auto comp = component_labels(f.graph, &comp_count);
    std::vector<int> comp_vertices(comp_count, 0), comp_edges(comp_count, 0), comp_max(comp_count, 0);
    for (Vertex v = 0; v < n; ++v) {
        ++comp_vertices[comp[v]];
        comp_max[comp[v]] = std::max(comp_max[comp[v]], f.graph.degree(v));
    }
    for (EdgeId i = 0; i < f.graph.edge_count(); ++i)
        ++comp_edges[comp[f.graph.edge(i).u]];
    std::vector<int> cycle_of(n, -1);
    std::vector<OddCycle> cycles;
    std::vector<int> cycle_index(comp_count, -1);
    std::vector<char> on_odd_cycle(m, 0);
    for (Vertex v = 0; v < n; ++v) {
        const int k = comp[v];
        if (comp_max[k] != 2 || comp_edges[k] != comp_vertices[k] || comp_edges[k] % 2 == 0)
            continue;
        if (cycle_index[k] >= 0)
            continue;
        cycle_index[k] = static_cast<int>(cycles.size());
        OddCycle c;
        Vertex x = v;
        EdgeId e = f.graph.incident(v)[0];
        do {
            c.vertices.push_back(x);
            c.walk.push_back(f.original[e]);
            on_odd_cycle[f.original[e]] = 1;
            x = f.graph.other(e, x);
            const auto inc = f.graph.incident(x);
            e = inc[0] == e ? inc[1] : inc[0];
        } while (x != v);
        for (Vertex y : c.vertices)
            cycle_of[y] = cycle_index[k];
        cycles.push_back(std::move(c));
    }

    PartialColoring pc(m);
    std::vector<int> colored_degree(n, 0);
    auto mark = [&](EdgeId e) {
        ++colored_degree[host.edge(e).u];
        ++colored_degree[host.edge(e).v];
    };

    // F_0 through the subcubic kernel.
    std::vector<EdgeId> f0;
    for (EdgeId e : f_edges)
        if (!on_odd_cycle[e])
            f0.push_back(e);
    if (!f0.empty()) {
        const EdgeSubgraph sub = edge_subgraph(host, f0);
        std::vector<Color> c3;
        for (EdgeId e : f0)
            c3.push_back(local[e]);
        const EdgeColoring colored = color_subcubic(sub.graph, EdgeColoring(c3));
        for (EdgeId i = 0; i < sub.graph.edge_count(); ++i) {
            pc[sub.original[i]] = colored[i];
            mark(sub.original[i]);
        }
    }

    std::vector<char> absorbed(cycles.size(), 0);
    std::vector<char> used_h(m, 0);
    std::vector<EdgeId> extra;  // cycle edges moved to side 1
    auto is_h = [&](EdgeId e) { return local[e] <= 1; };
    auto attach = [&](int ci, Vertex at) {
        const auto walk = rotate_walk(host, cycles[ci], at);
        attach_cycle(host, pc, walk, at);
        for (EdgeId e : walk)
            mark(e);
        absorbed[ci] = 1;
    };

    for (std::size_t remaining = cycles.size(); remaining > 0; --remaining) {
        // Shortest unused H path from the colored vertices to an unabsorbed odd
        // cycle; internal vertices are uncolored and off every odd cycle.
        std::vector<EdgeId> parent(n, -1);
        std::vector<char> reached(n, 0);
        std::queue<Vertex> queue;
        for (Vertex v = 0; v < n; ++v)
            if (colored_degree[v] > 0) {
                reached[v] = 1;
                queue.push(v);
            }
        Vertex hit = -1;
        while (!queue.empty() && hit < 0) {
            const Vertex v = queue.front();
            queue.pop();
            for (EdgeId e : host.incident(v)) {
                if (!is_h(e) || used_h[e])
                    continue;
                const Vertex w = host.other(e, v);
                if (reached[w])
                    continue;
                reached[w] = 1;
                parent[w] = e;
                if (cycle_of[w] >= 0 && !absorbed[cycle_of[w]]) {
                    hit = w;
                    break;
                }
                queue.push(w);
            }
        }
        if (hit >= 0) {
            std::vector<std::pair<EdgeId, Vertex>> path;  // edge, vertex it leaves from
            for (Vertex x = hit; parent[x] >= 0; x = host.other(parent[x], x))
                path.push_back({parent[x], host.other(parent[x], x)});
            std::reverse(path.begin(), path.end());
            for (auto [e, from] : path) {
                extend_pendant(host, pc, e, from);
                mark(e);
                used_h[e] = 1;
            }
            attach(cycle_of[hit], hit);
            continue;
        }

        // No path: start an island from an H edge leaving the cycle.
        int ci = 0;
        while (absorbed[ci])
            ++ci;
        EdgeId bridge = -1;
        Vertex y = -1;
        for (Vertex v : cycles[ci].vertices)
            for (EdgeId e : host.incident(v))
                if (bridge < 0 && is_h(e) && !used_h[e] && cycle_of[host.other(e, v)] != ci) {
                    bridge = e;
                    y = v;
                }
        if (bridge >= 0) {
            const Vertex z = host.other(bridge, y);
            pc[bridge] = 1;
            mark(bridge);
            used_h[bridge] = 1;
            attach(ci, y);
            if (cycle_of[z] >= 0 && !absorbed[cycle_of[z]]) {
                attach(cycle_of[z], z);
                --remaining;
            }
            continue;
        }

        // Only chords of the cycle (or nothing) in H: the cycle minus one edge
        // stays on side 0 as a path, the edge goes to side 1 with the chords.
        const OddCycle& c = cycles[ci];
        const int length = static_cast<int>(c.walk.size());
        int chosen = -1;
        for (int i = 0; i < length && chosen < 0; ++i) {
            const EdgeId e = c.walk[i];
            // Component of chords + e containing e; reject an odd cycle.
            std::vector<Vertex> stack{host.edge(e).u};
            std::vector<char> in(n, 0);
            in[host.edge(e).u] = 1;
            int vertices = 0, edges2 = 0;
            bool all_two = true;
            while (!stack.empty()) {
                const Vertex v = stack.back();
                stack.pop_back();
                ++vertices;
                int degree = 0;
                for (EdgeId f2 : host.incident(v)) {
                    if (f2 != e && !(is_h(f2) && !used_h[f2]))
                        continue;
                    ++degree;
                    const Vertex w = host.other(f2, v);
                    if (!in[w]) {
                        in[w] = 1;
                        stack.push_back(w);
                    }
                }
                edges2 += degree;
                all_two = all_two && degree == 2;
            }
            const bool odd_cycle = all_two && edges2 / 2 == vertices && vertices % 2 == 1;
            if (!odd_cycle)
                chosen = i;
        }
        if (chosen < 0)
            throw std::logic_error("decompose_general: no edge of an isolated odd cycle can be split off");
        for (int j = 1; j < length; ++j) {
            const EdgeId e = c.walk[(chosen + j) % length];
            pc[e] = j;
            mark(e);
        }
        extra.push_back(c.walk[chosen]);
        absorbed[ci] = 1;
    }

    for (EdgeId e = 0; e < m; ++e)
        if (pc[e]) {
            side[e] = 0;
            color[e] = *pc[e];
        }
    std::vector<EdgeId> rest;
    std::vector<Color> c3;
    std::vector<char> is_extra(m, 0);
    for (EdgeId e : extra)
        is_extra[e] = 1;
    for (EdgeId e = 0; e < m; ++e) {
        if (side[e] == 0)
            continue;
        if (!is_h(e) && !is_extra[e])
            throw std::logic_error("decompose_general: F edge left outside the first part");
        rest.push_back(e);
        c3.push_back(is_extra[e] ? 2 : local[e]);
    }
    if (!rest.empty()) {
        const EdgeSubgraph sub = edge_subgraph(host, rest);
        const EdgeColoring colored = color_subcubic(sub.graph, EdgeColoring(c3));
        for (EdgeId i = 0; i < sub.graph.edge_count(); ++i) {
            side[sub.original[i]] = 1;
            color[sub.original[i]] = colored[i];
        }
    }
}

}  // namespace

Decomposition decompose_general(const Multigraph& g, const EdgeColoring& coloring)
{
    if (g.has_loops())
        throw PreconditionError("decompose_general: graph has a loop");
    if (!verify(g, coloring, VerifyMode::proper).proper)
        throw PreconditionError("decompose_general: coloring is not proper");
    const int m = g.edge_count();
    if (m == 0)
        return {};
    std::vector<Color> distinct(coloring.colors().begin(), coloring.colors().end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const int t = static_cast<int>(distinct.size());
    std::vector<int> rank(m);
    for (EdgeId e = 0; e < m; ++e)
        rank[e] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), coloring[e]) - distinct.begin());

    Assembly out(m);
    for (int group = 0; group * 5 < t; ++group) {
        std::vector<EdgeId> edges;
        std::vector<int> local;
        for (EdgeId e = 0; e < m; ++e)
            if (rank[e] / 5 == group) {
                edges.push_back(e);
                local.push_back(rank[e] % 5);
            }
        const EdgeSubgraph host = edge_subgraph(g, edges);
        std::vector<int> side;
        std::vector<Color> color;
        general_group(host.graph, local, side, color);
        for (EdgeId i = 0; i < host.graph.edge_count(); ++i)
            out.put(host.original[i], 2 * group + side[i], color[i]);
    }
    return out.finish();
}

Decomposition decompose_bipartite(const Multigraph& g, const BipartitionCert& cert)
{
    if (!cert.valid_for(g))
        throw PreconditionError("decompose_bipartite: certificate does not fit the graph");
    const int m = g.edge_count();
    if (m == 0)
        return {};
    Assembly out(m);
    const int delta = g.max_degree();
    if (delta <= 3) {
        const EdgeColoring c = color_subcubic(g, konig_color(g, cert));
        for (EdgeId e = 0; e < m; ++e)
            out.put(e, 0, c[e]);
        return out.finish();
    }
    const int k = ceil_div(delta, 3);
    const EdgeColoring split = equalized_bipartite_color(g, cert, k);
    const auto classes = classes_of(split, k);
    for (int p = 0; p < k; ++p) {
        const EdgeSubgraph sub = edge_subgraph(g, classes[p]);
        put_part(out, sub, color_subcubic(sub.graph, konig_color(sub.graph, cert)), p);
    }
    return out.finish();
}

Decomposition decompose_eulerian_bipartite(const Multigraph& g, const BipartitionCert& cert)
{
    if (!cert.valid_for(g))
        throw PreconditionError("decompose_eulerian_bipartite: certificate does not fit the graph");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0)
            throw PreconditionError("decompose_eulerian_bipartite: vertex " + std::to_string(v) + " has odd degree");
    const int m = g.edge_count();
    if (m == 0)
        return {};
    const int delta = g.max_degree();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (int i = 0; i < (delta - g.degree(v)) / 2; ++i)
            edges.push_back({v, v});
    const Multigraph regular(g.vertex_count(), std::move(edges), true);
    const TwoFactorization f = petersen_two_factorization(regular);

    std::vector<std::vector<EdgeId>> real(f.factors.size());
    for (std::size_t i = 0; i < f.factors.size(); ++i)
        for (EdgeId e : f.factors[i])
            if (e < m)
                real[i].push_back(e);
    Assembly out(m);
    for (std::size_t i = 0; i < real.size(); i += 2) {
        const std::vector<EdgeId> none;
        const auto& second = i + 1 < real.size() ? real[i + 1] : none;
        const PartialColoring c = color_two_factor_pair(g, real[i], second);
        for (EdgeId e = 0; e < m; ++e)
            if (c[e])
                out.put(e, static_cast<int>(i / 2), *c[e]);
    }
    return out.finish();
}

std::optional<std::pair<int, int>> biregular_degrees(const Multigraph& g, const BipartitionCert& cert)
{
    if (!cert.valid_for(g) || g.edge_count() == 0)
        return std::nullopt;
    int dx = -1, dy = -1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int& d = cert.side[v] == Side::X ? dx : dy;
        if (d < 0)
            d = g.degree(v);
        else if (d != g.degree(v))
            return std::nullopt;
    }
    if (dx <= 0 || dy <= 0)
        return std::nullopt;
    const int k = std::min(dx, dy), big = std::max(dx, dy);
    if (big % k != 0 || big / k < 2)
        return std::nullopt;
    return std::pair{k, big};
}

namespace {

// (k, kr)-biregular pieces; `sub` lives on the host's vertex set.
void biregular_parts(const Multigraph& host, const BipartitionCert& cert, const std::vector<EdgeId>& edges, int k,
                     int first_part, Assembly& out)
{
    const EdgeSubgraph sub = edge_subgraph(host, edges);
    auto emit = [&](const std::vector<EdgeId>& local, int p, bool star) {
        const EdgeSubgraph piece = edge_subgraph(sub.graph, local);
        const EdgeColoring c = star ? color_forest(piece.graph) : color_low_even_bipartite(piece.graph, cert);
        for (EdgeId i = 0; i < piece.graph.edge_count(); ++i)
            out.put(sub.original[piece.original[i]], p, c[i]);
    };
    std::vector<EdgeId> all(sub.graph.edge_count());
    std::iota(all.begin(), all.end(), 0);
    if (k == 1) {
        emit(all, first_part, true);
        return;
    }
    if (k == 2) {
        emit(all, first_part, false);
        return;
    }
    if (k == 4) {
        const EulerSplit s = euler_split(sub.graph);
        if (!s.imbalanced.empty())
            throw std::logic_error("decompose_biregular: odd closed trail in a bipartite graph");
        emit(s.red, first_part, false);
        emit(s.blue, first_part + 1, false);
        return;
    }
    // Color class 1 of an equalized k-coloring meets every small-side vertex
    // once and every large-side vertex r times: a star forest.
    const EdgeColoring split = equalized_bipartite_color(sub.graph, cert, k);
    std::vector<EdgeId> star, rest;
    for (EdgeId i = 0; i < sub.graph.edge_count(); ++i)
        (split[i] == 1 ? star : rest).push_back(i);
    emit(star, first_part, true);
    if (k == 3) {
        emit(rest, first_part + 1, false);
        return;
    }
    std::vector<EdgeId> rest_host;
    for (EdgeId i : rest)
        rest_host.push_back(sub.original[i]);
    biregular_parts(host, cert, rest_host, k - 1, first_part + 1, out);
}

}  // namespace

Decomposition decompose_biregular(const Multigraph& g, const BipartitionCert& cert)
{
    const auto degrees = biregular_degrees(g, cert);
    if (!degrees)
        throw PreconditionError("decompose_biregular: graph is not (k, kr)-biregular with r >= 2");
    Assembly out(g.edge_count());
    std::vector<EdgeId> all(g.edge_count());
    std::iota(all.begin(), all.end(), 0);
    biregular_parts(g, cert, all, degrees->first, 0, out);
    return out.finish();
}

Decomposition decompose_star_peel(const Multigraph& g, const BipartitionCert& cert)
{
    if (!cert.valid_for(g))
        throw PreconditionError("decompose_star_peel: certificate does not fit the graph");
    const int m = g.edge_count();
    if (m == 0)
        return {};
    const Side small = cert.max_degree(g, Side::X) <= cert.max_degree(g, Side::Y) ? Side::X : Side::Y;
    std::vector<int> degree(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        degree[v] = g.degree(v);
    std::vector<char> taken(m, 0);
    Assembly out(m);
    for (int round = 0;; ++round) {
        int top = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (cert.side[v] == small)
                top = std::max(top, degree[v]);
        if (top == 0)
            break;
        std::vector<EdgeId> forest;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (cert.side[v] != small || degree[v] != top)
                continue;
            for (EdgeId e : g.incident(v))
                if (!taken[e]) {
                    taken[e] = 1;
                    forest.push_back(e);
                    --degree[g.edge(e).u];
                    --degree[g.edge(e).v];
                    break;
                }
        }
        std::sort(forest.begin(), forest.end());
        const EdgeSubgraph sub = edge_subgraph(g, forest);
        put_part(out, sub, color_forest(sub.graph), round);
    }
    return out.finish();
}

// ---- complete multipartite -------------------------------------------------

int multipartite_thickness_bound(int r)
{
    if (r < 2)
        throw PreconditionError("complete multipartite bound needs at least two parts");
    int t = 0;
    while (r > 1) {
        r = ceil_div(r, 2);
        ++t;
    }
    return t;
}

namespace {

// Pair -> edge lookup for a simple graph.
class PairIndex {
public:
    explicit PairIndex(const Multigraph& g)
    {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const auto key = std::minmax(g.edge(e).u, g.edge(e).v);
            if (!index_.emplace(std::pair{key.first, key.second}, e).second)
                throw PreconditionError("graph has parallel edges");
        }
    }
    EdgeId operator()(Vertex a, Vertex b) const
    {
        const auto it = index_.find(std::minmax(a, b));
        if (it == index_.end())
            throw PreconditionError("missing edge between " + std::to_string(a) + " and " + std::to_string(b));
        return it->second;
    }

private:
    std::map<std::pair<Vertex, Vertex>, EdgeId> index_;
};

void require_complete_multipartite(const Multigraph& g, const std::vector<std::vector<Vertex>>& parts)
{
    long long cross = 0, total = 0;
    std::vector<int> owner(g.vertex_count(), -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty())
            throw PreconditionError("empty part");
        for (Vertex v : parts[p]) {
            if (v < 0 || v >= g.vertex_count() || owner[v] >= 0)
                throw PreconditionError("parts must be disjoint vertex sets of the graph");
            owner[v] = static_cast<int>(p);
        }
        cross += total * static_cast<long long>(parts[p].size());
        total += static_cast<long long>(parts[p].size());
    }
    for (const Edge& e : g.edges())
        if (owner[e.u] < 0 || owner[e.v] < 0 || owner[e.u] == owner[e.v])
            throw PreconditionError("edge inside a part or outside the parts");
    if (cross != g.edge_count())
        throw PreconditionError("graph is not complete multipartite on the given parts");
}

std::vector<Vertex> concat(const std::vector<std::vector<Vertex>>& parts, std::size_t from, std::size_t to)
{
    std::vector<Vertex> out;
    for (std::size_t i = from; i < to; ++i)
        out.insert(out.end(), parts[i].begin(), parts[i].end());
    return out;
}

void color_bipartite_block(const std::vector<Vertex>& xs, const std::vector<Vertex>& ys, const PairIndex& index, int p,
                           Color offset, Assembly& out)
{
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j)
            out.put(index(xs[i], ys[j]), p, offset + static_cast<Color>(i + j) + 1);
}

}  // namespace

Decomposition decompose_complete_multipartite(const Multigraph& g, const std::vector<std::vector<Vertex>>& parts)
{
    if (parts.size() < 2)
        throw PreconditionError("decompose_complete_multipartite: need at least two parts");
    require_complete_multipartite(g, parts);
    const PairIndex index(g);
    Assembly out(g.edge_count());
    // Each level splits every list at ⌈t/2⌉ and joins the halves.
    std::vector<std::vector<std::vector<Vertex>>> level{parts};
    for (int depth = 0; !level.empty(); ++depth) {
        std::vector<std::vector<std::vector<Vertex>>> next;
        for (const auto& list : level) {
            if (list.size() < 2)
                continue;
            const std::size_t half = (list.size() + 1) / 2;
            color_bipartite_block(concat(list, 0, half), concat(list, half, list.size()), index, depth, 0, out);
            next.emplace_back(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(half));
            next.emplace_back(list.begin() + static_cast<std::ptrdiff_t>(half), list.end());
        }
        level = std::move(next);
    }
    return out.finish();
}

Multigraph complete_multipartite_graph(const std::vector<int>& sizes)
{
    std::vector<int> owner;
    for (std::size_t p = 0; p < sizes.size(); ++p) {
        if (sizes[p] < 1)
            throw PreconditionError("part sizes must be positive");
        owner.insert(owner.end(), sizes[p], static_cast<int>(p));
    }
    std::vector<Edge> edges;
    const int n = static_cast<int>(owner.size());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (owner[a] != owner[b])
                edges.push_back({a, b});
    return Multigraph(n, std::move(edges));
}

namespace {

std::vector<std::vector<Vertex>> consecutive_parts(const std::vector<int>& sizes)
{
    std::vector<std::vector<Vertex>> parts;
    Vertex next = 0;
    for (int s : sizes) {
        parts.emplace_back(s);
        std::iota(parts.back().begin(), parts.back().end(), next);
        next += s;
    }
    return parts;
}

std::vector<int> balanced_sizes(int n, int r, BalancedVariant variant)
{
    if (n < 1)
        throw PreconditionError("part size must be positive");
    switch (variant) {
    case BalancedVariant::multipartite:
        if (r < 2)
            throw PreconditionError("K_{n*r} needs r >= 2");
        return std::vector<int>(r, n);
    case BalancedVariant::with_large_part: {
        if (r < 2)
            throw PreconditionError("K_{n*r,nr} needs r >= 2");
        std::vector<int> sizes(r, n);
        sizes.push_back(n * r);
        return sizes;
    }
    case BalancedVariant::odd_complete:
        return std::vector<int>(2 * n + 1, 1);
    }
    return {};
}

}  // namespace

GraphDecomposition decompose_complete_multipartite(const std::vector<int>& sizes)
{
    if (sizes.size() < 2)
        throw PreconditionError("decompose_complete_multipartite: need at least two parts");
    Multigraph g = complete_multipartite_graph(sizes);
    Decomposition d = decompose_complete_multipartite(g, consecutive_parts(sizes));
    return {std::move(g), std::move(d)};
}

int balanced_family_bound(int n, int r, BalancedVariant variant)
{
    switch (variant) {
    case BalancedVariant::multipartite:
        return (n * r) % 2 == 0 ? 1 : 2;
    case BalancedVariant::with_large_part:
        return (n * r) % 2 == 0 ? 1 : 3;
    case BalancedVariant::odd_complete:
        return 2;
    }
    return 0;
}

Decomposition decompose_balanced_family(const Multigraph& g, const std::vector<std::vector<Vertex>>& parts,
                                        BalancedVariant variant)
{
    require_complete_multipartite(g, parts);
    const PairIndex index(g);
    Assembly out(g.edge_count());
    std::vector<Color> color(g.edge_count(), 0);
    auto take_balanced = [&](const std::vector<std::vector<Vertex>>& group, int p, Color offset) {
        std::vector<char> touched(g.edge_count(), 0);
        color_balanced_parts(
            group,
            [&](Vertex a, Vertex b) {
                const EdgeId e = index(a, b);
                touched[e] = 1;
                return e;
            },
            color, offset);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (touched[e])
                out.put(e, p, color[e]);
    };

    switch (variant) {
    case BalancedVariant::multipartite: {
        const int r = static_cast<int>(parts.size());
        const int n = static_cast<int>(parts[0].size());
        for (const auto& p : parts)
            if (static_cast<int>(p.size()) != n)
                throw PreconditionError("K_{n*r} needs equal part sizes");
        if ((n * r) % 2 == 0) {
            take_balanced(parts, 0, 0);
        } else {
            // n and r odd: K_{n*(r-1)} has n(r-1) even; the last part joins it as K_{n, n(r-1)}.
            const std::vector<std::vector<Vertex>> head(parts.begin(), parts.end() - 1);
            take_balanced(head, 0, 0);
            color_bipartite_block(parts.back(), concat(parts, 0, parts.size() - 1), index, 1, 0, out);
        }
        break;
    }
    case BalancedVariant::with_large_part: {
        const std::vector<std::vector<Vertex>> small(parts.begin(), parts.end() - 1);
        const int r = static_cast<int>(small.size());
        if (r < 2)
            throw PreconditionError("K_{n*r,nr} needs r >= 2");
        const int n = static_cast<int>(small[0].size());
        for (const auto& p : small)
            if (static_cast<int>(p.size()) != n)
                throw PreconditionError("K_{n*r,nr} needs equal small parts");
        if (static_cast<int>(parts.back().size()) != n * r)
            throw PreconditionError("K_{n*r,nr} needs a last part of size nr");
        const std::vector<Vertex> xs = concat(small, 0, small.size());
        const std::vector<Vertex>& ys = parts.back();
        const int nr = n * r;
        if (nr % 2 == 0) {
            // Regular K_{n*r} on [1, (r-1)n], then a Latin square on the next nr colors.
            take_balanced(small, 0, 0);
            const Color offset = (r - 1) * n;
            for (int i = 0; i < nr; ++i)
                for (int j = 0; j < nr; ++j)
                    out.put(index(xs[i], ys[j]), 0, offset + (i + j) % nr + 1);
        } else {
            const std::vector<std::vector<Vertex>> head(small.begin(), small.end() - 1);
            take_balanced(head, 0, 0);
            color_bipartite_block(small.back(), concat(small, 0, small.size() - 1), index, 1, 0, out);
            color_bipartite_block(xs, ys, index, 2, 0, out);
        }
        break;
    }
    case BalancedVariant::odd_complete: {
        const int size = static_cast<int>(parts.size());
        if (size < 3 || size % 2 == 0)
            throw PreconditionError("K_{2n+1} needs an odd number (at least 3) of vertices");
        for (const auto& p : parts)
            if (p.size() != 1)
                throw PreconditionError("K_{2n+1} parts are single vertices");
        // K_{2n}: round ρ of the round robin is color ρ+1; the last vertex is a star.
        const auto rounds = round_robin(size - 1);
        for (std::size_t rho = 0; rho < rounds.size(); ++rho)
            for (auto [a, b] : rounds[rho])
                out.put(index(parts[a][0], parts[b][0]), 0, static_cast<Color>(rho) + 1);
        for (int i = 0; i + 1 < size; ++i)
            out.put(index(parts[i][0], parts.back()[0]), 1, i + 1);
        break;
    }
    }
    return out.finish();
}

Multigraph balanced_family_graph(int n, int r, BalancedVariant variant)
{
    return complete_multipartite_graph(balanced_sizes(n, r, variant));
}

GraphDecomposition decompose_balanced_family(int n, int r, BalancedVariant variant)
{
    const std::vector<int> sizes = balanced_sizes(n, r, variant);
    Multigraph g = complete_multipartite_graph(sizes);
    Decomposition d = decompose_balanced_family(g, consecutive_parts(sizes), variant);
    return {std::move(g), std::move(d)};
}

std::optional<std::vector<std::vector<Vertex>>> complete_multipartite_parts(const Multigraph& g)
{
    const int n = g.vertex_count();
    if (n < 2 || n > 4096 || g.edge_count() == 0 || !g.is_simple())
        return std::nullopt;
    std::vector<char> adjacent(static_cast<std::size_t>(n) * n, 0);
    for (const Edge& e : g.edges()) {
        adjacent[static_cast<std::size_t>(e.u) * n + e.v] = 1;
        adjacent[static_cast<std::size_t>(e.v) * n + e.u] = 1;
    }
    std::vector<int> owner(n, -1);
    std::vector<std::vector<Vertex>> parts;
    for (Vertex v = 0; v < n; ++v) {
        if (owner[v] >= 0)
            continue;
        owner[v] = static_cast<int>(parts.size());
        parts.push_back({v});
        for (Vertex w = v + 1; w < n; ++w)
            if (owner[w] < 0 && !adjacent[static_cast<std::size_t>(v) * n + w]) {
                owner[w] = owner[v];
                parts.back().push_back(w);
            }
    }
    if (parts.size() < 2)
        return std::nullopt;
    long long cross = 0, total = 0;
    for (const auto& p : parts) {
        cross += total * static_cast<long long>(p.size());
        total += static_cast<long long>(p.size());
    }
    if (cross != g.edge_count())
        return std::nullopt;
    for (const Edge& e : g.edges())
        if (owner[e.u] == owner[e.v])
            return std::nullopt;
    return parts;
}

Decomposition decompose_forest_peel(const Multigraph& g)
{
    if (g.has_loops())
        throw PreconditionError("decompose_forest_peel: graph has a loop");
    const int m = g.edge_count();
    Assembly out(m);
    std::vector<char> taken(m, 0);
    int left = m;
    std::vector<int> parent(g.vertex_count());
    for (int round = 0; left > 0; ++round) {
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        std::vector<EdgeId> forest;
        for (EdgeId e = 0; e < m; ++e) {
            if (taken[e])
                continue;
            const int a = find(g.edge(e).u), b = find(g.edge(e).v);
            if (a == b)
                continue;
            parent[a] = b;
            taken[e] = 1;
            forest.push_back(e);
        }
        left -= static_cast<int>(forest.size());
        const EdgeSubgraph sub = edge_subgraph(g, forest);
        put_part(out, sub, color_forest(sub.graph), round);
    }
    return out.finish();
}

Decomposition split_cyclic(const Multigraph& g, const EdgeColoring& c, int t)
{
    const VerifyReport report = verify(g, c, VerifyMode::cyclic, t);
    if (!report.cyclic_interval)
        throw PreconditionError("split_cyclic: coloring is not a cyclic interval coloring");
    if (t < 2 * g.max_degree() - 2)
        throw PreconditionError("split_cyclic: t = " + std::to_string(t) + " is below 2Δ - 2");
    const int m = g.edge_count();
    Assembly out(m);
    if (report.interval) {
        for (EdgeId e = 0; e < m; ++e)
            out.put(e, 0, c[e]);
        return out.finish();
    }
    // Over wrapping palettes: longest run starting at 1 (k*) and ending at t (l*).
    int k_star = 0, l_star = 0;
    for (Vertex v : report.non_interval_vertices) {
        const auto p = palette(g, c, v);
        int low = 0;
        while (low < static_cast<int>(p.size()) && p[low] == low + 1)
            ++low;
        int high = 0;
        while (high < static_cast<int>(p.size()) && p[p.size() - 1 - high] == t - high)
            ++high;
        k_star = std::max(k_star, low);
        l_star = std::max(l_star, high);
    }
    if (k_star + l_star > t)
        throw std::logic_error("split_cyclic: k* + l* exceeds t");
    const int cut = t - l_star;
    for (EdgeId e = 0; e < m; ++e) {
        if (c[e] <= cut)
            out.put(e, 0, c[e]);
        else
            out.put(e, 1, c[e] - cut);
    }
    return out.finish();
}

// ---- dispatcher ------------------------------------------------------------

namespace {

struct Outcome {
    Decomposition decomposition;
    BoundTrace trace;
};

using Method = std::function<std::optional<Outcome>(const Multigraph&)>;

Outcome made(Decomposition d, std::string method, int bound, std::string formula)
{
    BoundTrace t;
    t.method = std::move(method);
    t.bound = bound;
    t.formula = std::move(formula);
    return {std::move(d), std::move(t)};
}

bool is_forest(const Multigraph& g)
{
    int components = 0;
    component_labels(g, &components);
    return !g.has_loops() && g.edge_count() == g.vertex_count() - components;
}

std::optional<EdgeColoring> three_coloring(const Multigraph& g)
{
    if (auto cert = bipartition(g))
        return konig_color(g, *cert);
    if (g.is_simple()) {
        EdgeColoring c = vizing_color(g);
        if (c.distinct_colors() <= 3)
            return c;
    }
    if (g.edge_count() <= 20)
        return find_edge_coloring(g, 3);
    return std::nullopt;
}

std::string str(int x) { return std::to_string(x); }

std::vector<std::pair<std::string, Method>> methods()
{
    std::vector<std::pair<std::string, Method>> list;
    list.push_back({"forest", [](const Multigraph& g) -> std::optional<Outcome> {
                        if (!is_forest(g))
                            return std::nullopt;
                        Assembly out(g.edge_count());
                        const EdgeColoring c = color_forest(g);
                        for (EdgeId e = 0; e < g.edge_count(); ++e)
                            out.put(e, 0, c[e]);
                        return made(out.finish(), "forest", 1, "acyclic: 1");
                    }});
    list.push_back({"cactus", [](const Multigraph& g) -> std::optional<Outcome> {
                        int components = 0;
                        component_labels(g, &components);
                        if (components != 1 || g.max_degree() < 3 || is_forest(g))
                            return std::nullopt;
                        Assembly out(g.edge_count());
                        const EdgeColoring c = color_cactus(g);
                        for (EdgeId e = 0; e < g.edge_count(); ++e)
                            out.put(e, 0, c[e]);
                        return made(out.finish(), "cactus", 1, "vertex-disjoint cycles: 1");
                    }});
    list.push_back({"subcubic", [](const Multigraph& g) -> std::optional<Outcome> {
                        if (g.max_degree() > 3 || g.has_loops())
                            return std::nullopt;
                        const auto c3 = three_coloring(g);
                        if (!c3)
                            return std::nullopt;
                        Assembly out(g.edge_count());
                        const EdgeColoring c = color_subcubic(g, *c3);
                        for (EdgeId e = 0; e < g.edge_count(); ++e)
                            out.put(e, 0, c[e]);
                        return made(out.finish(), "subcubic", 1, "Δ = " + str(g.max_degree()) + " ≤ 3, χ' = Δ: 1");
                    }});
    list.push_back({"odd_complete", [](const Multigraph& g) -> std::optional<Outcome> {
                        const auto parts = complete_multipartite_parts(g);
                        if (!parts || parts->size() < 3 || parts->size() % 2 == 0)
                            return std::nullopt;
                        for (const auto& p : *parts)
                            if (p.size() != 1)
                                return std::nullopt;
                        const int n = static_cast<int>(parts->size() - 1) / 2;
                        return made(decompose_balanced_family(g, *parts, BalancedVariant::odd_complete),
                                    "odd_complete", 2, "K_{2n+1} with n = " + str(n) + ": 2");
                    }});
    list.push_back({"balanced", [](const Multigraph& g) -> std::optional<Outcome> {
                        const auto parts = complete_multipartite_parts(g);
                        if (!parts)
                            return std::nullopt;
                        const int n = static_cast<int>((*parts)[0].size());
                        const int r = static_cast<int>(parts->size());
                        for (const auto& p : *parts)
                            if (static_cast<int>(p.size()) != n)
                                return std::nullopt;
                        const int bound = balanced_family_bound(n, r, BalancedVariant::multipartite);
                        return made(decompose_balanced_family(g, *parts, BalancedVariant::multipartite), "balanced",
                                    bound,
                                    "K_{n*r} with n = " + str(n) + ", r = " + str(r) + ", nr " +
                                        ((n * r) % 2 == 0 ? "even: 1" : "odd: 2"));
                    }});
    list.push_back({"balanced_large_part", [](const Multigraph& g) -> std::optional<Outcome> {
                        auto parts = complete_multipartite_parts(g);
                        if (!parts || parts->size() < 3)
                            return std::nullopt;
                        std::stable_sort(parts->begin(), parts->end(),
                                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
                        const int n = static_cast<int>((*parts)[0].size());
                        const int r = static_cast<int>(parts->size()) - 1;
                        for (int i = 0; i < r; ++i)
                            if (static_cast<int>((*parts)[i].size()) != n)
                                return std::nullopt;
                        if (static_cast<int>(parts->back().size()) != n * r)
                            return std::nullopt;
                        const int bound = balanced_family_bound(n, r, BalancedVariant::with_large_part);
                        return made(decompose_balanced_family(g, *parts, BalancedVariant::with_large_part),
                                    "balanced_large_part", bound,
                                    "K_{n*r,nr} with n = " + str(n) + ", r = " + str(r) + ", nr " +
                                        ((n * r) % 2 == 0 ? "even: 1" : "odd: 3"));
                    }});
    list.push_back({"complete_multipartite", [](const Multigraph& g) -> std::optional<Outcome> {
                        const auto parts = complete_multipartite_parts(g);
                        if (!parts)
                            return std::nullopt;
                        const int r = static_cast<int>(parts->size());
                        const int bound = multipartite_thickness_bound(r);
                        return made(decompose_complete_multipartite(g, *parts), "complete_multipartite", bound,
                                    "T(" + str(r) + ") = " + str(bound));
                    }});
    list.push_back({"biregular", [](const Multigraph& g) -> std::optional<Outcome> {
                        const auto cert = bipartition(g);
                        if (!cert)
                            return std::nullopt;
                        const auto degrees = biregular_degrees(g, *cert);
                        if (!degrees)
                            return std::nullopt;
                        const int k = degrees->first;
                        const int bound = k <= 2 ? 1 : k <= 4 ? 2 : k - 2;
                        return made(decompose_biregular(g, *cert), "biregular", bound,
                                    "(" + str(k) + "," + str(degrees->second) + ")-biregular: " + str(bound));
                    }});
    list.push_back({"eulerian_bipartite", [](const Multigraph& g) -> std::optional<Outcome> {
                        const auto cert = bipartition(g);
                        if (!cert || g.edge_count() == 0)
                            return std::nullopt;
                        for (Vertex v = 0; v < g.vertex_count(); ++v)
                            if (g.degree(v) % 2 != 0)
                                return std::nullopt;
                        const int delta = g.max_degree();
                        const int bound = ceil_div(delta, 4);
                        return made(decompose_eulerian_bipartite(g, *cert), "eulerian_bipartite", bound,
                                    "ceil(" + str(delta) + "/4) = " + str(bound));
                    }});
    list.push_back({"bipartite", [](const Multigraph& g) -> std::optional<Outcome> {
                        const auto cert = bipartition(g);
                        if (!cert)
                            return std::nullopt;
                        const int delta = g.max_degree();
                        const int bound = delta <= 3 ? std::min(delta, 1) : ceil_div(delta, 3);
                        return made(decompose_bipartite(g, *cert), "bipartite", bound,
                                    delta <= 3 ? "Δ = " + str(delta) + " ≤ 3: " + str(bound)
                                               : "ceil(" + str(delta) + "/3) = " + str(bound));
                    }});
    list.push_back({"star_peel", [](const Multigraph& g) -> std::optional<Outcome> {
                        const auto cert = bipartition(g);
                        if (!cert)
                            return std::nullopt;
                        const int dx = cert->max_degree(g, Side::X), dy = cert->max_degree(g, Side::Y);
                        return made(decompose_star_peel(g, *cert), "star_peel", std::min(dx, dy),
                                    "min(" + str(dx) + ", " + str(dy) + ") = " + str(std::min(dx, dy)));
                    }});
    auto general = [](std::string name, std::function<std::optional<EdgeColoring>(const Multigraph&)> color) {
        return std::pair{name, Method([name, color](const Multigraph& g) -> std::optional<Outcome> {
                             if (g.has_loops())
                                 return std::nullopt;
                             const auto c = color(g);
                             if (!c)
                                 return std::nullopt;
                             const int t = c->distinct_colors();
                             const int bound = 2 * ceil_div(t, 5);
                             return made(decompose_general(g, *c), name, bound,
                                         "2*ceil(" + str(t) + "/5) = " + str(bound));
                         })};
    };
    list.push_back(general("general_exact", [](const Multigraph& g) -> std::optional<EdgeColoring> {
        if (g.edge_count() > 16)
            return std::nullopt;
        return exact_chromatic_index(g).witness;
    }));
    list.push_back(general("general_vizing", [](const Multigraph& g) -> std::optional<EdgeColoring> {
        if (!g.is_simple())
            return std::nullopt;
        return vizing_color(g);
    }));
    list.push_back(general("general_shannon", [](const Multigraph& g) { return std::optional(shannon_color(g)); }));
    list.push_back({"forest_peel", [](const Multigraph& g) -> std::optional<Outcome> {
                        Decomposition d = decompose_forest_peel(g);
                        const int parts = d.part_count();
                        Outcome o = made(std::move(d), "forest_peel", parts, "forest peeling: no bound promised");
                        if (g.vertex_count() <= kArboricityVertexBudget) {
                            const int gamma = nash_williams_arboricity(g);
                            o.trace.note = "arboricity " + str(gamma) + ", gap " + str(parts - gamma);
                        }
                        return o;
                    }});
    return list;
}

DispatchResult dispatch(const Multigraph& g, bool parallel)
{
    DispatchResult result;
    if (g.edge_count() == 0) {
        result.trace = {"empty", 0, "no edges: 0", 0, true, ""};
        result.candidates.push_back(result.trace);
        return result;
    }
    const auto list = methods();
    const int count = static_cast<int>(list.size());
    std::vector<std::optional<Outcome>> outcomes(count);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (int i = 0; i < count; ++i) {
        try {
            outcomes[i] = list[i].second(g);
            if (outcomes[i]) {
                Outcome& o = *outcomes[i];
                o.trace.parts = o.decomposition.part_count();
                o.trace.certified = verify_decomposition(g, o.decomposition).interval;
            }
        } catch (const std::exception&) {
            outcomes[i].reset();
        }
    }
    int best = -1;
    for (int i = 0; i < count; ++i) {
        if (!outcomes[i])
            continue;
        result.candidates.push_back(outcomes[i]->trace);
        if (!outcomes[i]->trace.certified)
            continue;
        if (best < 0 || outcomes[i]->trace.parts < outcomes[best]->trace.parts)
            best = i;
    }
    if (best < 0)
        throw std::logic_error("dispatch_theta_upper: no method produced a certified decomposition");
    result.decomposition = std::move(outcomes[best]->decomposition);
    result.trace = outcomes[best]->trace;
    return result;
}

}  // namespace

DispatchResult dispatch_theta_upper(const Multigraph& g) { return dispatch(g, true); }

std::vector<std::string> dispatch_methods()
{
    std::vector<std::string> names;
    for (const auto& [name, method] : methods())
        names.push_back(name);
    return names;
}

std::optional<DispatchResult> run_method(const Multigraph& g, const std::string& method)
{
    for (const auto& [name, run] : methods()) {
        if (name != method)
            continue;
        std::optional<Outcome> outcome;
        try {
            outcome = run(g);
        } catch (const PreconditionError&) {
        }
        if (!outcome)
            return std::nullopt;
        outcome->trace.parts = outcome->decomposition.part_count();
        outcome->trace.certified = verify_decomposition(g, outcome->decomposition).interval;
        DispatchResult r;
        r.decomposition = std::move(outcome->decomposition);
        r.trace = outcome->trace;
        r.candidates.push_back(r.trace);
        return r;
    }
    throw PreconditionError("unknown decomposition method '" + method + "'");
}

DispatchResult dispatch_theta_upper_serial(const Multigraph& g) { return dispatch(g, false); }

}  // namespace intcol
