#include "intcol/oracles.hpp"

#include "intcol/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace intcol {

namespace {

void check_budget(const char* who, int size, int budget, int hard_limit, const char* unit)
{
    if (budget > hard_limit)
        throw PreconditionError(std::string(who) + ": budget " + std::to_string(budget) + " exceeds the hard limit " +
                                std::to_string(hard_limit));
    if (size > budget)
        throw BudgetExceeded(std::string(who) + ": " + std::to_string(size) + " " + unit + " exceed the budget of " +
                             std::to_string(budget));
}

// Backtracking over one connected component. Colors live in [1, ceiling];
// a vertex of degree d whose assigned colors span [lo, hi] can only take
// colors in [hi - d + 1, lo + d - 1].
class IntervalSearch {
public:
    IntervalSearch(const Multigraph& g, std::vector<EdgeId> edges)
        : g_(g), edges_(std::move(edges)), ceiling_(static_cast<int>(edges_.size())),
          mask_(g.vertex_count(), 0), color_(g.edge_count(), 0)
    {
    }

    bool run() { return place(0); }
    Color color(EdgeId e) const { return color_[e]; }

private:
    std::uint32_t window(Vertex v) const
    {
        const std::uint32_t full = ((1u << ceiling_) - 1u) << 1;  // bits 1..ceiling
        const std::uint32_t m = mask_[v];
        if (m == 0)
            return full;
        const int d = g_.degree(v);
        const int lo = std::countr_zero(m);
        const int hi = 31 - std::countl_zero(m);
        const int from = std::max(1, hi - d + 1), to = std::min(ceiling_, lo + d - 1);
        if (from > to)
            return 0;
        const std::uint32_t upto = to >= 31 ? ~0u : ((1u << (to + 1)) - 1u);
        return upto & ~((1u << from) - 1u) & ~m;
    }

    std::uint32_t candidates(EdgeId e) const
    {
        const Edge& ed = g_.edge(e);
        return window(ed.u) & window(ed.v);
    }

    bool place(int assigned)
    {
        if (assigned == ceiling_)
            return true;
        // Most constrained uncolored edge.
        EdgeId best = -1;
        std::uint32_t best_set = 0;
        int best_count = 64;
        for (EdgeId e : edges_) {
            if (color_[e] != 0)
                continue;
            const std::uint32_t set = candidates(e);
            const int count = std::popcount(set);
            if (count == 0)
                return false;
            if (count < best_count) {
                best = e;
                best_set = set;
                best_count = count;
            }
        }
        // Reflection c -> ceiling + 1 - c maps solutions to solutions, so the
        // first edge only needs the lower half.
        if (assigned == 0) {
            std::uint32_t half = 0;
            for (int c = 1; 2 * c <= ceiling_ + 1; ++c)
                half |= 1u << c;
            best_set &= half;
        }
        const Edge& ed = g_.edge(best);
        for (std::uint32_t set = best_set; set != 0; set &= set - 1) {
            const int c = std::countr_zero(set);
            color_[best] = c;
            mask_[ed.u] |= 1u << c;
            mask_[ed.v] |= 1u << c;
            if (place(assigned + 1))
                return true;
            mask_[ed.u] &= ~(1u << c);
            mask_[ed.v] &= ~(1u << c);
            color_[best] = 0;
        }
        return false;
    }

    const Multigraph& g_;
    std::vector<EdgeId> edges_;
    int ceiling_;
    std::vector<std::uint32_t> mask_;
    std::vector<Color> color_;
};

std::optional<EdgeColoring> interval_search(const Multigraph& g)
{
    int components = 0;
    const auto label = component_labels(g, &components);
    std::vector<std::vector<EdgeId>> by_component(components);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        by_component[label[g.edge(e).u]].push_back(e);
    std::vector<Color> colors(g.edge_count(), 0);
    for (auto& edges : by_component) {
        if (edges.empty())
            continue;
        IntervalSearch search(g, edges);
        if (!search.run())
            return std::nullopt;
        for (EdgeId e : edges)
            colors[e] = search.color(e);
    }
    EdgeColoring c(std::move(colors));
    if (!verify(g, c, VerifyMode::interval).interval)
        throw std::logic_error("exact_interval_colorable: witness failed verification");
    return c;
}

template <bool Parallel>
int arboricity(const Multigraph& g, int vertex_budget)
{
    check_budget("nash_williams_arboricity", g.vertex_count(), vertex_budget, kArboricityVertexBudget, "vertices");
    if (g.has_loops())
        throw PreconditionError("nash_williams_arboricity: graph has a loop");
    const int n = g.vertex_count();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ends;
    for (const Edge& e : g.edges())
        ends.push_back({1u << e.u, 1u << e.v});
    const long long subsets = 1LL << n;
    int best = 0;
#pragma omp parallel for schedule(static) reduction(max : best) if (Parallel)
    for (long long s = 0; s < subsets; ++s) {
        const auto set = static_cast<std::uint32_t>(s);
        const int size = std::popcount(set);
        if (size < 2)
            continue;
        int inside = 0;
        for (auto [a, b] : ends)
            inside += (set & a) && (set & b);
        best = std::max(best, (inside + size - 2) / (size - 1));
    }
    return best;
}

}  // namespace

std::optional<EdgeColoring> exact_interval_colorable(const Multigraph& g, int edge_budget)
{
    check_budget("exact_interval_colorable", g.edge_count(), edge_budget, kIntervalEdgeBudget, "edges");
    if (g.has_loops())
        throw PreconditionError("exact_interval_colorable: graph has a loop");
    return interval_search(g);
}

int exact_theta(const Multigraph& g, int edge_budget)
{
    check_budget("exact_theta", g.edge_count(), edge_budget, kThetaEdgeBudget, "edges");
    if (g.has_loops())
        throw PreconditionError("exact_theta: graph has a loop");
    const int m = g.edge_count();
    const int full = (1 << m) - 1;
    if (m == 0)
        return 0;
    std::vector<char> colorable(full + 1, 0);
    for (int s = 1; s <= full; ++s) {
        std::vector<EdgeId> edges;
        for (EdgeId e = 0; e < m; ++e)
            if (s >> e & 1)
                edges.push_back(e);
        colorable[s] = interval_search(edge_subgraph(g, edges).graph).has_value();
    }
    // Partitions are enumerated with the part holding the lowest remaining edge first.
    std::vector<int> best(full + 1, m + 1);
    best[0] = 0;
    for (int s = 1; s <= full; ++s) {
        const int low = s & -s;
        const int rest = s ^ low;
        for (int sub = rest;; sub = (sub - 1) & rest) {
            const int part = sub | low;
            if (colorable[part])
                best[s] = std::min(best[s], best[s ^ part] + 1);
            if (sub == 0)
                break;
        }
    }
    return best[full];
}

int nash_williams_arboricity(const Multigraph& g, int vertex_budget) { return arboricity<true>(g, vertex_budget); }

int nash_williams_arboricity_serial(const Multigraph& g, int vertex_budget)
{
    return arboricity<false>(g, vertex_budget);
}

}  // namespace intcol
