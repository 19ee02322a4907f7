#include "intcol/kernels.hpp"

#include "intcol/verify.hpp"

#include <algorithm>

namespace intcol {

TGraph build_tgraph(const Multigraph& g, const EdgeColoring& c3)
{
    if (g.has_loops())
        throw PreconditionError("build_tgraph: graph has a loop");
    if (g.max_degree() > 3)
        throw PreconditionError("build_tgraph: maximum degree exceeds 3");
    if (c3.size() != g.edge_count())
        throw PreconditionError("build_tgraph: coloring size mismatch");
    if (!verify(g, c3, VerifyMode::proper).proper)
        throw PreconditionError("build_tgraph: coloring is not proper");
    if (c3.distinct_colors() > 3)
        throw PreconditionError("build_tgraph: coloring uses more than three colors");

    const int n = g.vertex_count();
    TGraph t;
    t.member.assign(n, 0);
    t.incident.assign(n, {});
    t.label.assign(n, std::nullopt);
    if (g.edge_count() == 0)
        return t;

    const Color m_color = c3.min_color();
    std::vector<char> in_m(g.edge_count(), 0);
    std::vector<int> rest_degree(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (c3[e] == m_color) {
            in_m[e] = 1;
        } else {
            ++rest_degree[g.edge(e).u];
            ++rest_degree[g.edge(e).v];
        }
    }
    auto add = [&](TGraph::TEdge edge) {
        const int id = static_cast<int>(t.edges.size());
        t.member[edge.a] = t.member[edge.b] = 1;
        t.incident[edge.a].push_back(id);
        t.incident[edge.b].push_back(id);
        t.edges.push_back(std::move(edge));
    };
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (in_m[e])
            add({g.edge(e).u, g.edge(e).v, TEdgeKind::red, e, {}, {}});

    // Maximal paths of G - M, walked from their first endpoint.
    std::vector<char> walked(g.edge_count(), 0);
    for (Vertex s = 0; s < n; ++s) {
        if (rest_degree[s] != 1)
            continue;
        EdgeId first = -1;
        for (EdgeId e : g.incident(s))
            if (!in_m[e])
                first = e;
        if (walked[first])
            continue;
        TGraph::TEdge edge;
        edge.a = s;
        edge.path_vertices.push_back(s);
        Vertex x = s;
        EdgeId e = first;
        while (e >= 0) {
            walked[e] = 1;
            edge.path.push_back(e);
            x = g.other(e, x);
            edge.path_vertices.push_back(x);
            EdgeId next = -1;
            for (EdgeId f : g.incident(x))
                if (!in_m[f] && !walked[f])
                    next = f;
            e = next;
        }
        edge.b = x;
        edge.kind = edge.path.size() % 2 == 0 ? TEdgeKind::blue : TEdgeKind::green;
        add(std::move(edge));
    }
    return t;
}

namespace {

Label flip(Label l) { return l == Label::A ? Label::B : Label::A; }

// One step of a T-walk: the T-edge taken and the vertex it leads to.
struct Step {
    int edge;
    Vertex from;
    Vertex to;
};

// Walk the T-component from `start`, leaving by T-edge `first`, until the walk
// returns to `start` (cycle) or reaches a dead end (path).
std::vector<Step> walk_component(const TGraph& t, Vertex start, int first)
{
    std::vector<Step> steps;
    Vertex x = start;
    int e = first;
    while (e >= 0) {
        const auto& te = t.edges[e];
        const Vertex y = te.a == x ? te.b : te.a;
        steps.push_back({e, x, y});
        if (y == start)
            break;
        int next = -1;
        for (int f : t.incident[y])
            if (f != e)
                next = f;
        x = y;
        e = next;
    }
    return steps;
}

void propagate(TGraph& t, Vertex start, Label first_label, const std::vector<Step>& steps, bool skip_last)
{
    t.label[start] = first_label;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (skip_last && i + 1 == steps.size())
            break;
        const Step& s = steps[i];
        const Label here = *t.label[s.from];
        t.label[s.to] = t.edges[s.edge].kind == TEdgeKind::blue ? flip(here) : here;
    }
}

struct BadRepair {
    int path_edge = -1;  // T-edge of the path P
    Vertex v = -1;
    int distance = 0;    // d_P(u, v)
    Vertex u = -1;
};

}  // namespace

EdgeColoring color_subcubic(const Multigraph& g, const EdgeColoring& c3)
{
    TGraph t = build_tgraph(g, c3);
    const int n = g.vertex_count();
    if (g.edge_count() == 0)
        return EdgeColoring();

    std::vector<char> m_incident(n, 0);
    for (const auto& te : t.edges)
        if (te.kind == TEdgeKind::red)
            m_incident[te.a] = m_incident[te.b] = 1;

    // Components of T: paths first, cycles after (bad cycles need the labels of
    // T-path vertices).
    std::vector<char> seen(t.edges.size(), 0);
    std::vector<std::vector<Step>> cycles;
    std::vector<Vertex> cycle_start;
    for (Vertex v = 0; v < n; ++v) {
        if (!t.member[v] || t.degree(v) != 1 || seen[t.incident[v][0]])
            continue;
        const auto steps = walk_component(t, v, t.incident[v][0]);
        for (const Step& s : steps)
            seen[s.edge] = 1;
        propagate(t, v, Label::A, steps, false);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!t.member[v] || seen[t.incident[v][0]])
            continue;
        auto steps = walk_component(t, v, t.incident[v][0]);
        for (const Step& s : steps)
            seen[s.edge] = 1;
        cycles.push_back(std::move(steps));
        cycle_start.push_back(v);
    }

    std::vector<std::vector<Step>> good_cycles;
    std::vector<BadRepair> repairs;
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
        const auto& steps = cycles[ci];
        int blue = 0;
        std::size_t g_length = 0;
        for (const Step& s : steps) {
            const auto& te = t.edges[s.edge];
            if (te.kind == TEdgeKind::blue)
                ++blue;
            g_length += te.kind == TEdgeKind::red ? 1 : te.path.size();
        }
        if (blue % 2 == 0) {
            propagate(t, cycle_start[ci], Label::A, steps, true);
            continue;
        }
        if (g_length % 2 == 0) {
            propagate(t, cycle_start[ci], Label::A, steps, true);
            good_cycles.push_back(steps);
            continue;
        }
        // Bad cycle: locate a path P with an internal vertex on an M edge.
        BadRepair repair;
        for (const Step& s : steps) {
            const auto& te = t.edges[s.edge];
            if (te.kind == TEdgeKind::red)
                continue;
            for (std::size_t i = 1; i + 1 < te.path_vertices.size(); ++i)
                if (m_incident[te.path_vertices[i]]) {
                    repair = {s.edge, te.a, static_cast<int>(i), te.path_vertices[i]};
                    break;
                }
            if (repair.path_edge >= 0)
                break;
        }
        if (repair.path_edge < 0)
            throw PreconditionError("color_subcubic: a component is an odd cycle");
        if (!t.label[repair.u])
            throw std::logic_error("color_subcubic: vertex u is unlabeled when its bad cycle is processed");
        // Label from v along P so that the red edge at v is the inconsistent one.
        const Label lu = *t.label[repair.u];
        const Label lv = repair.distance % 2 == 0 ? lu : flip(lu);
        const auto from_v = walk_component(t, repair.v, repair.path_edge);
        propagate(t, repair.v, lv, from_v, true);
        repairs.push_back(repair);
    }

    std::vector<Color> color(g.edge_count(), -1);
    std::vector<char> colored(g.edge_count(), 0);
    for (const auto& te : t.edges) {
        if (te.kind == TEdgeKind::red) {
            if (*t.label[te.a] == *t.label[te.b]) {
                color[te.matching_edge] = *t.label[te.a] == Label::A ? 1 : 4;
                colored[te.matching_edge] = 1;
            }
            continue;
        }
        Color next = *t.label[te.a] == Label::A ? 2 : 3;
        for (EdgeId e : te.path) {
            color[e] = next;
            colored[e] = 1;
            next = 5 - next;
        }
    }
    // Remaining G - M edges lie on even cycles.
    for (EdgeId start = 0; start < g.edge_count(); ++start) {
        if (colored[start] || c3[start] == c3.min_color())
            continue;
        Vertex x = g.edge(start).u;
        EdgeId e = start;
        Color next = 2;
        while (e >= 0) {
            color[e] = next;
            colored[e] = 1;
            next = 5 - next;
            x = g.other(e, x);
            EdgeId step = -1;
            for (EdgeId f : g.incident(x))
                if (!colored[f] && c3[f] != c3.min_color())
                    step = f;
            e = step;
        }
    }

    for (const auto& steps : good_cycles) {
        Color next = 2;
        for (const Step& s : steps) {
            const auto& te = t.edges[s.edge];
            std::vector<EdgeId> run;
            if (te.kind == TEdgeKind::red) {
                run.push_back(te.matching_edge);
            } else if (te.a == s.from) {
                run = te.path;
            } else {
                run.assign(te.path.rbegin(), te.path.rend());
            }
            for (EdgeId e : run) {
                color[e] = next;
                colored[e] = 1;
                next = 5 - next;
            }
        }
    }

    for (const BadRepair& r : repairs) {
        const auto& p = t.edges[r.path_edge];
        const Label lu = *t.label[r.u];
        const Label lv = *t.label[r.v];
        const bool even = r.distance % 2 == 0;
        Color first = 0, second = 1, closing = 0;
        if (even && lu == Label::A && lv == Label::A) {
            closing = 2;
        } else if (even && lu == Label::B && lv == Label::B) {
            first = 5, second = 4, closing = 3;
        } else if (!even && lu == Label::A && lv == Label::B) {
            closing = 1;
        } else if (!even && lu == Label::B && lv == Label::A) {
            first = 5, second = 4, closing = 4;
        } else {
            throw std::logic_error("color_subcubic: uncovered label/parity case for a bad cycle");
        }
        // Path edges j = 0..d-1 lie between v and u; position from u decides the color.
        for (int j = 0; j < r.distance; ++j)
            color[p.path[j]] = (r.distance - 1 - j) % 2 == 0 ? first : second;
        EdgeId red = -1;
        for (int te : t.incident[r.v])
            if (t.edges[te].kind == TEdgeKind::red)
                red = t.edges[te].matching_edge;
        if (red < 0)
            throw std::logic_error("color_subcubic: bad-cycle endpoint has no matching edge");
        color[red] = closing;
        colored[red] = 1;
    }

    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!colored[e])
            throw std::logic_error("color_subcubic: edge " + std::to_string(e) + " left uncolored");
    EdgeColoring result(std::move(color));
    const VerifyReport report = verify(g, result, VerifyMode::interval);
    if (!report.interval)
        throw std::logic_error("color_subcubic: construction produced a non-interval coloring");
    return normalize(result);
}

}  // namespace intcol
