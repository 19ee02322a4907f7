#include "intcol/edge_coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace intcol {

namespace {

constexpr EdgeId kNone = -1;

// at[v][c] = edge colored c at v, colors 1..k.
class ColorTable {
public:
    ColorTable(const Multigraph& g, int k)
        : g_(g), k_(k), at_(static_cast<std::size_t>(g.vertex_count()) * (k + 1), kNone),
          color_(g.edge_count(), 0)
    {
    }

    int colors() const { return k_; }
    Color color(EdgeId e) const { return color_[e]; }
    EdgeId at(Vertex v, Color c) const { return at_[index(v, c)]; }
    bool missing(Vertex v, Color c) const { return at(v, c) == kNone; }

    Color first_missing(Vertex v) const
    {
        for (Color c = 1; c <= k_; ++c)
            if (missing(v, c))
                return c;
        return 0;
    }

    void set(EdgeId e, Color c)
    {
        const Edge& ed = g_.edge(e);
        if (color_[e] != 0) {
            at_[index(ed.u, color_[e])] = kNone;
            at_[index(ed.v, color_[e])] = kNone;
        }
        color_[e] = c;
        if (c != 0) {
            at_[index(ed.u, c)] = e;
            at_[index(ed.v, c)] = e;
        }
    }

    /// Maximal path from `start` whose edges alternate first, second, first...
    std::vector<EdgeId> kempe_path(Vertex start, Color first, Color second) const
    {
        std::vector<EdgeId> path;
        Vertex x = start;
        Color want = first;
        while (true) {
            EdgeId e = at(x, want);
            if (e == kNone)
                break;
            path.push_back(e);
            x = g_.other(e, x);
            want = want == first ? second : first;
            if (path.size() > static_cast<std::size_t>(g_.edge_count()))
                throw std::logic_error("kempe_path: start vertex lies on an alternating cycle");
        }
        return path;
    }

    void swap_colors(const std::vector<EdgeId>& path, Color a, Color b)
    {
        std::vector<Color> old;
        old.reserve(path.size());
        for (EdgeId e : path)
            old.push_back(color_[e]);
        for (EdgeId e : path)
            set(e, 0);
        for (std::size_t i = 0; i < path.size(); ++i)
            set(path[i], old[i] == a ? b : a);
    }

    EdgeColoring result() const { return EdgeColoring(color_); }

private:
    std::size_t index(Vertex v, Color c) const { return static_cast<std::size_t>(v) * (k_ + 1) + c; }

    const Multigraph& g_;
    int k_;
    std::vector<EdgeId> at_;
    std::vector<Color> color_;
};

void require_loopless(const Multigraph& g, const char* who)
{
    if (g.has_loops())
        throw PreconditionError(std::string(who) + ": loops are not allowed");
}

}  // namespace

EdgeColoring konig_color(const Multigraph& g, const BipartitionCert& cert)
{
    if (!cert.valid_for(g))
        throw PreconditionError("konig_color: bipartition certificate does not match the graph");
    const int delta = g.max_degree();
    ColorTable table(g, delta);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Vertex u = g.edge(e).u;
        const Vertex v = g.edge(e).v;
        const Color a = table.first_missing(u);
        const Color b = table.first_missing(v);
        if (!table.missing(v, a)) {
            // The a/b path from v cannot reach u in a bipartite graph.
            table.swap_colors(table.kempe_path(v, a, b), a, b);
        }
        table.set(e, a);
    }
    return table.result();
}

EdgeColoring vizing_color(const Multigraph& g)
{
    if (!g.is_simple())
        throw PreconditionError("vizing_color: graph must be simple");
    const int k = g.max_degree() + 1;
    ColorTable table(g, k);

    for (EdgeId e0 = 0; e0 < g.edge_count(); ++e0) {
        const Vertex u = g.edge(e0).u;
        // Maximal fan at u: fan_edges[i] joins u to fan[i]; fan_edges[i+1]'s
        // color is missing at fan[i].
        std::vector<Vertex> fan = {g.edge(e0).v};
        std::vector<EdgeId> fan_edges = {e0};
        std::vector<char> in_fan(g.vertex_count(), 0);
        in_fan[fan[0]] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (EdgeId f : g.incident(u)) {
                const Color cf = table.color(f);
                const Vertex w = g.other(f, u);
                if (cf != 0 && !in_fan[w] && table.missing(fan.back(), cf)) {
                    fan.push_back(w);
                    fan_edges.push_back(f);
                    in_fan[w] = 1;
                    grew = true;
                    break;
                }
            }
        }
        const Color c = table.first_missing(u);
        const Color d = table.first_missing(fan.back());
        if (c != d)
            table.swap_colors(table.kempe_path(u, d, c), c, d);

        // First w whose prefix is still a fan and which misses d.
        std::size_t w_index = fan.size();
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0 && !table.missing(fan[i - 1], table.color(fan_edges[i])))
                break;
            if (table.missing(fan[i], d)) {
                w_index = i;
                break;
            }
        }
        if (w_index == fan.size())
            throw std::logic_error("vizing_color: no rotation target in fan");
        for (std::size_t i = 0; i < w_index; ++i) {
            const Color next = table.color(fan_edges[i + 1]);
            table.set(fan_edges[i + 1], 0);
            table.set(fan_edges[i], next);
        }
        table.set(fan_edges[w_index], d);
    }
    return table.result();
}

EdgeColoring shannon_color(const Multigraph& g)
{
    require_loopless(g, "shannon_color");
    const int delta = g.max_degree();
    const int k = std::max(delta, 3 * delta / 2);
    ColorTable table(g, k);

    auto missing_set = [&](Vertex v) {
        std::vector<Color> out;
        for (Color c = 1; c <= k; ++c)
            if (table.missing(v, c))
                out.push_back(c);
        return out;
    };
    auto common = [&](Vertex a, Vertex b) -> Color {
        for (Color c = 1; c <= k; ++c)
            if (table.missing(a, c) && table.missing(b, c))
                return c;
        return 0;
    };

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Vertex x = g.edge(e).u;
        const Vertex y = g.edge(e).v;
        if (Color c = common(x, y)) {
            table.set(e, c);
            continue;
        }
        // Fan x: y, y1 with e1 = x y1 colored delta, delta missing at y.
        const Color delta_color = missing_set(y).front();
        const EdgeId e1 = table.at(x, delta_color);
        const Vertex y1 = g.other(e1, x);

        auto shift = [&](Color alpha) {
            table.set(e1, alpha);
            table.set(e, delta_color);
        };
        if (Color alpha = common(x, y1)) {
            shift(alpha);
            continue;
        }
        const Color beta = common(y, y1);
        if (beta == 0)
            throw std::logic_error("shannon_color: missing sets pairwise disjoint with k >= floor(3Δ/2)");
        const Color alpha = missing_set(x).front();
        // x misses alpha, so its alpha/beta chain is a path starting with beta.
        const auto from_x = table.kempe_path(x, beta, alpha);
        Vertex end = x;
        for (EdgeId f : from_x)
            end = g.other(f, end);
        if (end != y) {
            table.swap_colors(table.kempe_path(y, alpha, beta), alpha, beta);
            table.set(e, alpha);
        } else {
            table.swap_colors(table.kempe_path(y1, alpha, beta), alpha, beta);
            shift(alpha);
        }
    }
    return table.result();
}

EdgeColoring equalized_bipartite_color(const Multigraph& g, const BipartitionCert& cert, int k)
{
    if (k < 1)
        throw PreconditionError("equalized_bipartite_color: k must be positive");
    if (!cert.valid_for(g))
        throw PreconditionError("equalized_bipartite_color: bipartition certificate does not match the graph");
    // Split every vertex into copies of degree k (plus one remainder copy),
    // assigning incident edges in increasing id order.
    std::vector<Vertex> copy_u(g.edge_count()), copy_v(g.edge_count());
    std::vector<Side> sides;
    int copies = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int seen = 0;
        int base = copies;
        for (EdgeId e : g.incident(v)) {
            const Vertex c = base + seen / k;
            if (g.edge(e).u == v)
                copy_u[e] = c;
            else
                copy_v[e] = c;
            ++seen;
        }
        const int made = std::max(1, (seen + k - 1) / k);
        for (int i = 0; i < made; ++i)
            sides.push_back(cert.side[v]);
        copies += made;
    }
    std::vector<Edge> split_edges;
    split_edges.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        split_edges.push_back({copy_u[e], copy_v[e]});
    Multigraph split(copies, std::move(split_edges));
    return konig_color(split, BipartitionCert{std::move(sides)});
}

std::vector<EulerTrail> euler_trails(const Multigraph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0)
            throw PreconditionError("euler trail: vertex " + std::to_string(v) + " has odd degree");
    std::vector<char> used(g.edge_count(), 0);
    std::vector<std::size_t> cursor(g.vertex_count(), 0);
    std::vector<EulerTrail> trails;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (g.degree(s) == 0 || cursor[s] == g.incident(s).size())
            continue;
        bool fresh = false;
        for (EdgeId e : g.incident(s))
            fresh = fresh || !used[e];
        if (!fresh)
            continue;
        EulerTrail trail;
        std::vector<std::pair<Vertex, EdgeId>> stack = {{s, kNone}};
        while (!stack.empty()) {
            const Vertex v = stack.back().first;
            auto inc = g.incident(v);
            while (cursor[v] < inc.size() && used[inc[cursor[v]]])
                ++cursor[v];
            if (cursor[v] < inc.size()) {
                const EdgeId e = inc[cursor[v]];
                used[e] = 1;
                stack.push_back({g.other(e, v), e});
            } else {
                trail.vertices.push_back(v);
                if (stack.back().second != kNone)
                    trail.edges.push_back(stack.back().second);
                stack.pop_back();
            }
        }
        trails.push_back(std::move(trail));
    }
    return trails;
}

EulerSplit euler_split(const Multigraph& g)
{
    EulerSplit out;
    for (const EulerTrail& trail : euler_trails(g)) {
        for (std::size_t i = 0; i < trail.edges.size(); ++i)
            (i % 2 == 0 ? out.red : out.blue).push_back(trail.edges[i]);
        if (trail.edges.size() % 2 == 1)
            out.imbalanced.push_back(trail.vertices.front());
    }
    std::sort(out.red.begin(), out.red.end());
    std::sort(out.blue.begin(), out.blue.end());
    return out;
}

TwoFactorization petersen_two_factorization(const Multigraph& g)
{
    TwoFactorization out;
    if (g.vertex_count() == 0)
        return out;
    const int degree = g.degree(0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != degree)
            throw PreconditionError("petersen_two_factorization: graph is not regular");
    if (degree % 2 != 0)
        throw PreconditionError("petersen_two_factorization: degree must be even");
    const int r = degree / 2;
    if (r == 0)
        return out;
    // Orient along Euler trails: in- and out-degree r everywhere. The
    // out/in split graph is r-regular bipartite; its color classes are
    // perfect matchings, i.e. 2-factors of g.
    const int n = g.vertex_count();
    std::vector<Edge> directed(g.edge_count());
    for (const EulerTrail& trail : euler_trails(g))
        for (std::size_t i = 0; i < trail.edges.size(); ++i)
            directed[trail.edges[i]] = {trail.vertices[i], n + trail.vertices[i + 1]};
    Multigraph split(2 * n, std::move(directed));
    BipartitionCert cert;
    cert.side.assign(2 * n, Side::X);
    std::fill(cert.side.begin() + n, cert.side.end(), Side::Y);
    const EdgeColoring matching = konig_color(split, cert);
    out.factors.resize(r);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out.factors[matching[e] - 1].push_back(e);
    return out;
}

namespace {

class EdgeColorSearch {
public:
    EdgeColorSearch(const Multigraph& g, int k) : g_(g), k_(k), used_(g.vertex_count(), 0), color_(g.edge_count(), 0)
    {
    }

    bool run() { return assign(0, 0); }
    EdgeColoring result() const { return EdgeColoring(color_); }

private:
    std::uint64_t available(EdgeId e, int limit) const
    {
        const Edge& ed = g_.edge(e);
        const std::uint64_t mask = (limit >= 63) ? ~0ULL : ((1ULL << limit) - 1) << 1;
        return mask & ~(used_[ed.u] | used_[ed.v]) & (((1ULL << k_) - 1) << 1);
    }

    bool assign(int done, int max_used)
    {
        if (done == g_.edge_count())
            return true;
        // Most constrained uncolored edge against the full palette.
        EdgeId best = kNone;
        int best_count = 1 << 30;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (color_[e] != 0)
                continue;
            const int count = std::popcount(available(e, k_));
            if (count == 0)
                return false;
            if (count < best_count) {
                best_count = count;
                best = e;
            }
        }
        const int limit = std::min(k_, max_used + 1);
        std::uint64_t options = available(best, limit);
        const Edge& ed = g_.edge(best);
        while (options) {
            const int c = std::countr_zero(options);
            options &= options - 1;
            color_[best] = c;
            used_[ed.u] |= 1ULL << c;
            used_[ed.v] |= 1ULL << c;
            if (assign(done + 1, std::max(max_used, c)))
                return true;
            used_[ed.u] &= ~(1ULL << c);
            used_[ed.v] &= ~(1ULL << c);
            color_[best] = 0;
        }
        return false;
    }

    const Multigraph& g_;
    int k_;
    std::vector<std::uint64_t> used_;
    std::vector<Color> color_;
};

}  // namespace

std::optional<EdgeColoring> find_edge_coloring(const Multigraph& g, int k)
{
    require_loopless(g, "find_edge_coloring");
    if (k > 62)
        throw PreconditionError("find_edge_coloring: at most 62 colors supported");
    if (g.edge_count() == 0)
        return EdgeColoring{};
    if (k < g.max_degree())
        return std::nullopt;
    EdgeColorSearch search(g, k);
    if (!search.run())
        return std::nullopt;
    return search.result();
}

ChromaticIndex exact_chromatic_index(const Multigraph& g, int edge_limit)
{
    if (g.edge_count() > edge_limit)
        throw BudgetExceeded("exact_chromatic_index: " + std::to_string(g.edge_count()) + " edges exceed budget " +
                             std::to_string(edge_limit));
    require_loopless(g, "exact_chromatic_index");
    const int delta = g.max_degree();
    for (int k = delta;; ++k) {
        if (auto c = find_edge_coloring(g, k))
            return {k, std::move(*c)};
    }
}

}  // namespace intcol
