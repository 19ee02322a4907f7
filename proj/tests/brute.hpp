#pragma once

// Brute-force references used only by the tests. Deliberately naive and
// independent of the library's checkers and oracles.

#include "intcol/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace brute {

using intcol::Color;
using intcol::EdgeId;
using intcol::Multigraph;
using intcol::Vertex;

inline std::vector<Color> colors_at(const Multigraph& g, const std::vector<Color>& c, Vertex v)
{
    std::vector<Color> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (ed.u == v || ed.v == v)
            out.push_back(c[e]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool proper(const Multigraph& g, const std::vector<Color>& c)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto s = colors_at(g, c, v);
        if (std::set<Color>(s.begin(), s.end()).size() != s.size())
            return false;
    }
    return true;
}

inline bool interval(const Multigraph& g, const std::vector<Color>& c)
{
    if (!proper(g, c))
        return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto s = colors_at(g, c, v);
        if (!s.empty() && s.back() - s.front() + 1 != static_cast<int>(s.size()))
            return false;
    }
    return true;
}

// Calls f on every assignment of colors 1..k to the edges; stops when f returns true.
inline bool any_assignment(int edges, int k, const std::function<bool(const std::vector<Color>&)>& f)
{
    std::vector<Color> c(edges, 1);
    if (edges == 0)
        return f(c);
    if (k < 1)
        return false;
    while (true) {
        if (f(c))
            return true;
        int i = 0;
        while (i < edges && c[i] == k)
            c[i++] = 1;
        if (i == edges)
            return false;
        ++c[i];
    }
}

// Plain backtracking over colors 1..|E|: a partial coloring is kept only if
// it is proper and every vertex's colors span at most its degree.
inline bool interval_colorable(const Multigraph& g)
{
    const int m = g.edge_count();
    std::vector<Color> c(m, 0);
    std::vector<int> degree(g.vertex_count(), 0);
    for (EdgeId e = 0; e < m; ++e) {
        ++degree[g.edge(e).u];
        ++degree[g.edge(e).v];
    }
    auto feasible = [&](Vertex v) {
        std::vector<Color> s;
        for (EdgeId e = 0; e < m; ++e)
            if (c[e] && (g.edge(e).u == v || g.edge(e).v == v))
                s.push_back(c[e]);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            return false;
        return s.empty() || s.back() - s.front() + 1 <= degree[v];
    };
    std::function<bool(int)> go = [&](int e) {
        if (e == m)
            return true;
        for (Color x = 1; x <= m; ++x) {
            c[e] = x;
            if (feasible(g.edge(e).u) && feasible(g.edge(e).v) && go(e + 1))
                return true;
        }
        c[e] = 0;
        return false;
    };
    return go(0);
}

inline int chromatic_index(const Multigraph& g)
{
    for (int k = 0;; ++k)
        if (any_assignment(g.edge_count(), k, [&](const std::vector<Color>& c) { return proper(g, c); }))
            return k;
}

// Minimum number of parts, each interval colorable, by trying every labelling.
inline int theta(const Multigraph& g)
{
    const int m = g.edge_count();
    if (m == 0)
        return 0;
    std::map<std::vector<EdgeId>, bool> cache;
    auto part_ok = [&](const std::vector<EdgeId>& edges) {
        auto it = cache.find(edges);
        if (it != cache.end())
            return it->second;
        const bool ok = interval_colorable(intcol::edge_subgraph(g, edges).graph);
        cache[edges] = ok;
        return ok;
    };
    for (int k = 1; k <= m; ++k) {
        const bool found = any_assignment(m, k, [&](const std::vector<Color>& label) {
            for (int p = 1; p <= k; ++p) {
                std::vector<EdgeId> edges;
                for (EdgeId e = 0; e < m; ++e)
                    if (label[e] == p)
                        edges.push_back(e);
                if (!part_ok(edges))
                    return false;
            }
            return true;
        });
        if (found)
            return k;
    }
    return m;
}

inline bool acyclic(const Multigraph& g, const std::vector<EdgeId>& edges)
{
    std::vector<int> parent(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i)
        parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (EdgeId e : edges) {
        const int a = find(g.edge(e).u), b = find(g.edge(e).v);
        if (a == b)
            return false;
        parent[a] = b;
    }
    return true;
}

// Fewest forests covering the edges, by trying every labelling.
inline int arboricity(const Multigraph& g)
{
    const int m = g.edge_count();
    if (m == 0)
        return 0;
    for (int k = 1;; ++k) {
        const bool found = any_assignment(m, k, [&](const std::vector<Color>& label) {
            for (int p = 1; p <= k; ++p) {
                std::vector<EdgeId> edges;
                for (EdgeId e = 0; e < m; ++e)
                    if (label[e] == p)
                        edges.push_back(e);
                if (!acyclic(g, edges))
                    return false;
            }
            return true;
        });
        if (found)
            return k;
    }
}

inline Multigraph complete(int n)
{
    std::vector<intcol::Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            edges.push_back({a, b});
    return Multigraph(n, edges);
}

inline Multigraph cycle(int n)
{
    std::vector<intcol::Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return Multigraph(n, edges);
}

inline Multigraph complete_bipartite(int a, int b)
{
    std::vector<intcol::Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.push_back({i, a + j});
    return Multigraph(a + b, edges);
}

// A proper coloring with colors 1..t whose palettes are intervals modulo t,
// found by backtracking over edges in id order. Empty when none exists or
// when `node_limit` steps run out.
inline std::vector<Color> cyclic_coloring(const Multigraph& g, int t, long long node_limit = 20'000'000)
{
    const int m = g.edge_count();
    std::vector<Color> c(m, 0);
    if (m == 0 || t > 30)
        return {};
    std::vector<unsigned> used(g.vertex_count(), 0);
    // fits[v]: the colors at v lie inside one cyclic window of deg(v) colors.
    auto fits = [&](Vertex v) {
        const int d = g.degree(v);
        if (d >= t)
            return true;
        for (int s = 0; s < t; ++s) {
            unsigned window = 0;
            for (int k = 0; k < d; ++k)
                window |= 1u << ((s + k) % t);
            if ((used[v] & ~window) == 0)
                return true;
        }
        return false;
    };
    long long nodes = 0;
    std::function<bool(int)> place = [&](int e) {
        if (e == m)
            return true;
        if (++nodes > node_limit)
            return false;
        const Vertex u = g.edge(e).u, v = g.edge(e).v;
        // Rotating every color is a symmetry, so the first edge takes color 1.
        for (int col = 1; col <= (e == 0 ? 1 : t); ++col) {
            const unsigned bit = 1u << (col - 1);
            if ((used[u] | used[v]) & bit)
                continue;
            used[u] |= bit;
            used[v] |= bit;
            c[e] = col;
            if (fits(u) && fits(v) && place(e + 1))
                return true;
            used[u] &= ~bit;
            used[v] &= ~bit;
        }
        return false;
    };
    if (!place(0))
        return {};
    return c;
}

// Per day every party's busy periods form one block and no period holds a
// teacher twice; lecture counts match b. days[l][i][h] is a teacher or -1.
inline bool timetable_valid(const std::vector<std::vector<int>>& b,
                            const std::vector<std::vector<std::vector<int>>>& days)
{
    const int n = static_cast<int>(b.size()), m = static_cast<int>(b[0].size());
    std::vector<std::vector<int>> count(n, std::vector<int>(m, 0));
    for (const auto& day : days) {
        if (static_cast<int>(day.size()) != n)
            return false;
        const int periods = static_cast<int>(day[0].size());
        std::vector<std::set<int>> class_periods(n), teacher_periods(m);
        for (int i = 0; i < n; ++i)
            for (int h = 0; h < periods; ++h)
                if (day[i][h] >= 0) {
                    ++count[i][day[i][h]];
                    class_periods[i].insert(h);
                    if (!teacher_periods[day[i][h]].insert(h).second)
                        return false;
                }
        for (const auto* group : {&class_periods, &teacher_periods})
            for (const auto& s : *group)
                if (!s.empty() && *s.rbegin() - *s.begin() + 1 != static_cast<int>(s.size()))
                    return false;
    }
    return count == b;
}

}  // namespace brute
