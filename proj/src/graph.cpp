#include "intcol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace intcol {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges, bool allows_loops)
    : vertex_count_(vertex_count), allows_loops_(allows_loops), edges_(std::move(edges))
{
    if (vertex_count < 0)
        throw PreconditionError("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            throw PreconditionError("edge endpoint out of range");
        if (e.u == e.v && !allows_loops)
            throw PreconditionError("loop at vertex " + std::to_string(e.u) + " in a loopless graph");
    }
    offsets_.assign(vertex_count + 1, 0);
    for (const Edge& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    incidence_.resize(offsets_.back());
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edge_count(); ++id) {
        incidence_[fill[edges_[id].u]++] = id;
        incidence_[fill[edges_[id].v]++] = id;
    }
}

int Multigraph::max_degree() const
{
    int best = 0;
    for (Vertex v = 0; v < vertex_count_; ++v)
        best = std::max(best, degree(v));
    return best;
}

int Multigraph::min_degree() const
{
    if (vertex_count_ == 0)
        return 0;
    int best = degree(0);
    for (Vertex v = 1; v < vertex_count_; ++v)
        best = std::min(best, degree(v));
    return best;
}

bool Multigraph::has_loops() const
{
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Multigraph::has_parallel_edges() const
{
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Edge& e : edges_) {
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            return true;
    }
    return false;
}

Multigraph build_graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_pairs, bool allows_loops)
{
    std::vector<Edge> edges;
    edges.reserve(edge_pairs.size());
    for (auto [u, v] : edge_pairs)
        edges.push_back({u, v});
    return Multigraph(vertex_count, std::move(edges), allows_loops);
}

Multigraph build_graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edge_pairs,
                       bool allows_loops)
{
    return build_graph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edge_pairs.begin(), edge_pairs.size()),
                       allows_loops);
}

EdgeSubgraph edge_subgraph(const Multigraph& g, std::span<const EdgeId> edges)
{
    std::vector<Edge> kept;
    kept.reserve(edges.size());
    for (EdgeId e : edges)
        kept.push_back(g.edge(e));
    return {Multigraph(g.vertex_count(), std::move(kept), g.allows_loops()),
            std::vector<EdgeId>(edges.begin(), edges.end())};
}

std::vector<int> component_labels(const Multigraph& g, int* component_count)
{
    std::vector<int> label(g.vertex_count(), -1);
    int count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (label[s] >= 0)
            continue;
        label[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(v)) {
                Vertex w = g.other(e, v);
                if (label[w] < 0) {
                    label[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    if (component_count)
        *component_count = count;
    return label;
}

bool BipartitionCert::valid_for(const Multigraph& g) const
{
    if (static_cast<int>(side.size()) != g.vertex_count())
        return false;
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return side[e.u] != side[e.v]; });
}

int BipartitionCert::max_degree(const Multigraph& g, Side s) const
{
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (side[v] == s)
            best = std::max(best, g.degree(v));
    return best;
}

std::optional<BipartitionCert> bipartition(const Multigraph& g)
{
    std::vector<int> colour(g.vertex_count(), -1);
    std::queue<Vertex> queue;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (EdgeId e : g.incident(v)) {
                Vertex w = g.other(e, v);
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    queue.push(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    BipartitionCert cert;
    cert.side.reserve(colour.size());
    for (int c : colour)
        cert.side.push_back(c == 0 ? Side::X : Side::Y);
    return cert;
}

Color EdgeColoring::min_color() const
{
    return colors_.empty() ? 0 : *std::min_element(colors_.begin(), colors_.end());
}

Color EdgeColoring::max_color() const
{
    return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

int EdgeColoring::distinct_colors() const
{
    std::vector<Color> sorted = colors_;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

EdgeColoring normalize(const EdgeColoring& c)
{
    if (c.size() == 0)
        return c;
    const Color shift = 1 - c.min_color();
    std::vector<Color> out(c.colors().begin(), c.colors().end());
    for (Color& x : out)
        x += shift;
    return EdgeColoring(std::move(out));
}

std::vector<EdgeId> Decomposition::part_edges(int p) const
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<int>(part.size()); ++e)
        if (part[e] == p)
            out.push_back(e);
    return out;
}

Decomposition Decomposition::from_colors(int part_count, std::vector<int> part, std::span<const Color> color)
{
    Decomposition d;
    d.part = std::move(part);
    std::vector<std::vector<Color>> certs(part_count);
    for (EdgeId e = 0; e < static_cast<int>(d.part.size()); ++e)
        certs.at(d.part[e]).push_back(color[e]);
    for (auto& cert : certs) {
        if (!cert.empty()) {
            const Color shift = 1 - *std::min_element(cert.begin(), cert.end());
            for (Color& x : cert)
                x += shift;
        }
        d.certificates.emplace_back(std::move(cert));
    }
    return d;
}

std::vector<Color> Decomposition::edge_colors() const
{
    std::vector<Color> out(part.size(), 0);
    std::vector<int> cursor(certificates.size(), 0);
    for (EdgeId e = 0; e < static_cast<int>(part.size()); ++e) {
        const auto& cert = certificates.at(part[e]);
        if (!cert)
            throw PreconditionError("part " + std::to_string(part[e]) + " has no certificate");
        out[e] = cert->at(cursor[part[e]]++);
    }
    return out;
}

void Decomposition::compact()
{
    std::vector<int> used(certificates.size(), 0);
    for (int p : part)
        used.at(p) = 1;
    std::vector<int> remap(certificates.size(), -1);
    std::vector<std::optional<std::vector<Color>>> kept;
    for (int p = 0; p < part_count(); ++p) {
        if (used[p]) {
            remap[p] = static_cast<int>(kept.size());
            kept.push_back(std::move(certificates[p]));
        }
    }
    for (int& p : part)
        p = remap[p];
    certificates = std::move(kept);
}

std::vector<Color> palette(const Multigraph& g, const EdgeColoring& c, Vertex v)
{
    std::vector<Color> out;
    Vertex prev_loop = -1;
    for (EdgeId e : g.incident(v)) {
        if (g.edge(e).is_loop()) {
            if (prev_loop == e)
                continue;
            prev_loop = e;
        }
        out.push_back(c[e]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace intcol
