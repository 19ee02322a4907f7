#include "intcol/verify.hpp"

#include <algorithm>
#include <cstdint>

namespace intcol {

bool is_interval_palette(std::span<const Color> sorted)
{
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] != sorted[i - 1] + 1)
            return false;
    return true;
}

bool is_cyclic_interval_palette(std::span<const Color> sorted, int cycle_length)
{
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            return false;
    const int n = static_cast<int>(sorted.size());
    if (n <= 1 || n == cycle_length)
        return true;
    // Consecutive modulo t iff exactly one member has its successor missing.
    int run_ends = 0;
    for (int i = 0; i < n; ++i) {
        const Color next = sorted[i] % cycle_length + 1;
        if (!std::binary_search(sorted.begin(), sorted.end(), next))
            ++run_ends;
    }
    return run_ends == 1;
}

namespace {

enum VertexFault : std::uint8_t { kImproper = 1, kNonInterval = 2, kNonCyclic = 4 };

void check_preconditions(const Multigraph& g, const EdgeColoring& c, VerifyMode mode, int t)
{
    if (c.size() != g.edge_count())
        throw PreconditionError("coloring has " + std::to_string(c.size()) + " entries for " +
                                std::to_string(g.edge_count()) + " edges");
    if (mode == VerifyMode::cyclic) {
        if (t < 1)
            throw PreconditionError("cyclic mode needs a positive cycle length");
        for (Color x : c.colors())
            if (x < 1 || x > t)
                throw PreconditionError("color " + std::to_string(x) + " outside [1," + std::to_string(t) + "]");
    }
}

std::uint8_t vertex_faults(const Multigraph& g, const EdgeColoring& c, VerifyMode mode, int t, Vertex v,
                           std::vector<Color>& scratch)
{
    scratch.clear();
    EdgeId prev_loop = -1;
    for (EdgeId e : g.incident(v)) {
        if (g.edge(e).is_loop()) {
            if (prev_loop == e)
                continue;
            prev_loop = e;
        }
        scratch.push_back(c[e]);
    }
    std::sort(scratch.begin(), scratch.end());
    std::uint8_t faults = 0;
    const bool distinct = std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
    if (!distinct)
        faults |= kImproper;
    if (mode != VerifyMode::proper && !(distinct && is_interval_palette(scratch)))
        faults |= kNonInterval;
    if (mode == VerifyMode::cyclic && !is_cyclic_interval_palette(scratch, t))
        faults |= kNonCyclic;
    return faults;
}

VerifyReport assemble(const Multigraph& g, VerifyMode mode, const std::vector<std::uint8_t>& faults)
{
    VerifyReport report;
    std::vector<char> edge_flag(g.edge_count(), 0);
    const std::uint8_t relevant = mode == VerifyMode::proper ? kImproper
                                  : mode == VerifyMode::interval ? (kImproper | kNonInterval)
                                                                 : (kImproper | kNonInterval | kNonCyclic);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const std::uint8_t f = faults[v];
        if (f & kImproper)
            report.improper_vertices.push_back(v);
        if (f & kNonInterval)
            report.non_interval_vertices.push_back(v);
        if (f & kNonCyclic)
            report.non_cyclic_vertices.push_back(v);
        if (f & relevant)
            for (EdgeId e : g.incident(v))
                edge_flag[e] = 1;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (edge_flag[e])
            report.bad_edges.push_back(e);
    report.proper = report.improper_vertices.empty();
    report.interval = report.non_interval_vertices.empty();
    report.cyclic_interval = report.non_cyclic_vertices.empty();
    return report;
}

}  // namespace

VerifyReport verify_serial(const Multigraph& g, const EdgeColoring& c, VerifyMode mode, int cycle_length)
{
    check_preconditions(g, c, mode, cycle_length);
    std::vector<std::uint8_t> faults(g.vertex_count(), 0);
    std::vector<Color> scratch;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        faults[v] = vertex_faults(g, c, mode, cycle_length, v, scratch);
    return assemble(g, mode, faults);
}

VerifyReport verify(const Multigraph& g, const EdgeColoring& c, VerifyMode mode, int cycle_length)
{
    check_preconditions(g, c, mode, cycle_length);
    const int n = g.vertex_count();
    std::vector<std::uint8_t> faults(n, 0);
#pragma omp parallel if (n > 4096)
    {
        std::vector<Color> scratch;
#pragma omp for schedule(static)
        for (Vertex v = 0; v < n; ++v)
            faults[v] = vertex_faults(g, c, mode, cycle_length, v, scratch);
    }
    return assemble(g, mode, faults);
}

VerifyReport verify_decomposition(const Multigraph& g, const Decomposition& d)
{
    VerifyReport report;
    auto fail = [&](std::string why) {
        report.interval = false;
        report.proper = false;
        if (report.message.empty())
            report.message = std::move(why);
    };
    if (static_cast<int>(d.part.size()) != g.edge_count()) {
        fail("decomposition covers " + std::to_string(d.part.size()) + " of " + std::to_string(g.edge_count()) +
             " edges");
        return report;
    }
    std::vector<std::vector<EdgeId>> members(d.part_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (d.part[e] < 0 || d.part[e] >= d.part_count()) {
            report.bad_edges.push_back(e);
            fail("edge " + std::to_string(e) + " assigned to nonexistent part");
            continue;
        }
        members[d.part[e]].push_back(e);
    }
    if (!report.interval)
        return report;
    for (int p = 0; p < d.part_count(); ++p) {
        if (members[p].empty())
            continue;
        if (!d.certificates[p])
            throw PreconditionError("part " + std::to_string(p) + " is nonempty but has no certificate");
        const auto& cert = *d.certificates[p];
        if (cert.size() != members[p].size()) {
            fail("certificate of part " + std::to_string(p) + " has wrong length");
            continue;
        }
        EdgeSubgraph sub = edge_subgraph(g, members[p]);
        VerifyReport part_report = verify(sub.graph, EdgeColoring(cert), VerifyMode::interval);
        if (!part_report.interval) {
            for (Vertex v : part_report.non_interval_vertices)
                report.non_interval_vertices.push_back(v);
            for (EdgeId e : part_report.bad_edges)
                report.bad_edges.push_back(sub.original[e]);
            fail("part " + std::to_string(p) + " certificate is not an interval coloring");
        }
    }
    std::sort(report.non_interval_vertices.begin(), report.non_interval_vertices.end());
    report.non_interval_vertices.erase(
        std::unique(report.non_interval_vertices.begin(), report.non_interval_vertices.end()),
        report.non_interval_vertices.end());
    return report;
}

}  // namespace intcol
