#pragma once

#include "intcol/graph.hpp"

#include <cstdint>

namespace intcol {

/// Coloring of some of a host graph's edges; unset entries are outside the
/// colored subgraph. Internal colors may be any integers.
using PartialColoring = std::vector<std::optional<Color>>;

struct ColoredGraph {
    Multigraph graph;
    EdgeColoring coloring;
};

/// Interval coloring of an acyclic graph: each tree is rooted at its smallest
/// vertex, the root's edges take 1..d and a vertex entered with color c gives
/// its other edges c+1, c+2, ...
EdgeColoring color_forest(const Multigraph& g);

/// K_{m,n} with x_i = i, y_j = m + j (0-based), edges in row-major order;
/// edge (x_i, y_j) is colored i + j + 1.
ColoredGraph color_complete_bipartite(int m, int n);

/// Colors host edge `e` (one endpoint `at` in the colored subgraph, the other
/// endpoint not yet touched) with max S(at) + 1.
void extend_pendant(const Multigraph& host, PartialColoring& c, EdgeId e, Vertex at);

/// Colors the cycle `walk` (edges in order from `at` back to `at`) where `at`
/// has exactly one colored edge, colored k, and every other cycle vertex is
/// untouched. Even length: k+1, k+2, ...; odd length: k-1, then k, k-1, ...,
/// and k+1 on the closing edge.
void attach_cycle(const Multigraph& host, PartialColoring& c, std::span<const EdgeId> walk, Vertex at);

/// Interval coloring of a connected graph whose cycles are pairwise
/// vertex-disjoint and which is not itself a cycle.
EdgeColoring color_cactus(const Multigraph& g);

enum class TEdgeKind : std::uint8_t { red, blue, green };
enum class Label : std::uint8_t { A, B };

/// Auxiliary graph built from a proper 3-edge-coloring with matching M (the
/// first color class): red edges are M, blue/green edges join the ends of the
/// maximal paths of G - M of even/odd length.
struct TGraph {
    struct TEdge {
        Vertex a = 0;
        Vertex b = 0;
        TEdgeKind kind = TEdgeKind::red;
        EdgeId matching_edge = -1;  // red only
        std::vector<EdgeId> path;   // blue/green: G - M path from a to b
        std::vector<Vertex> path_vertices;
    };
    std::vector<char> member;                 // per host vertex
    std::vector<TEdge> edges;
    std::vector<std::vector<int>> incident;   // per host vertex, T-edge indices
    std::vector<std::optional<Label>> label;  // per host vertex

    int degree(Vertex v) const { return static_cast<int>(incident[v].size()); }
};

/// `c3` must be a proper coloring of g with at most three distinct colors; the
/// smallest one is taken as M.
TGraph build_tgraph(const Multigraph& g, const EdgeColoring& c3);

/// Interval coloring of a graph with Δ ≤ 3 from a proper 3-edge-coloring,
/// provided no component is an odd cycle. Uses at most six colors.
EdgeColoring color_subcubic(const Multigraph& g, const EdgeColoring& c3);

/// Bipartite graph with every degree in {1, 2, 2r}, Δ = 2r: interval
/// 2r-coloring where degree-2 vertices see {2i-1, 2i} and degree-2r vertices
/// see [1, 2r].
EdgeColoring color_low_even_bipartite(const Multigraph& g, const BipartitionCert& cert);

/// Colors two edge-disjoint unions of even cycles: `fa` alternately base+1,
/// base+2 and `fb` alternately base+3, base+4.
PartialColoring color_two_factor_pair(const Multigraph& host, std::span<const EdgeId> fa,
                                      std::span<const EdgeId> fb, Color base = 0);

/// Interval (r-1)n-coloring of the regular graph K_{n*r} (nr even). Parts are
/// consecutive vertex blocks of size n; edges in lexicographic order.
ColoredGraph color_balanced_multipartite(int n, int r);

/// Same construction on host vertices: `parts` must be r equal-size
/// independent sets forming a complete multipartite subgraph of `host`;
/// `edge_of(a, b)` returns the host edge joining a and b.
template <class EdgeLookup>
void color_balanced_parts(const std::vector<std::vector<Vertex>>& parts, EdgeLookup&& edge_of,
                          std::vector<Color>& out, Color offset = 0);

/// Round-robin schedule: rounds[ρ] is a perfect matching of {0..m-1} (m even).
/// The first round is {(0,1), (2,3), ...}.
std::vector<std::vector<std::pair<int, int>>> round_robin(int m);

// ---------------------------------------------------------------------------

template <class EdgeLookup>
void color_balanced_parts(const std::vector<std::vector<Vertex>>& parts, EdgeLookup&& edge_of,
                          std::vector<Color>& out, Color offset)
{
    const int r = static_cast<int>(parts.size());
    if (r < 2)
        throw PreconditionError("balanced multipartite coloring needs at least two parts");
    const int n = static_cast<int>(parts[0].size());
    for (const auto& p : parts)
        if (static_cast<int>(p.size()) != n)
            throw PreconditionError("balanced multipartite coloring needs equal part sizes");
    if ((n * r) % 2 != 0)
        throw PreconditionError("K_{n*r} has no interval coloring when nr is odd");

    // Blocks of size `width`; blocks belonging to the same part meet only in
    // the first round, which is skipped. Every remaining round is a perfect
    // matching of blocks, each pair a K_{w,w} colored by a Latin square.
    std::vector<std::vector<Vertex>> blocks;
    if (r % 2 == 0) {
        blocks = parts;
    } else {
        for (const auto& p : parts) {
            blocks.emplace_back(p.begin(), p.begin() + n / 2);
            blocks.emplace_back(p.begin() + n / 2, p.end());
        }
    }
    const int width = static_cast<int>(blocks[0].size());
    const auto rounds = round_robin(static_cast<int>(blocks.size()));
    const bool skip_first = r % 2 != 0;
    Color base = offset;
    for (std::size_t rho = skip_first ? 1 : 0; rho < rounds.size(); ++rho) {
        for (auto [p, q] : rounds[rho]) {
            for (int i = 0; i < width; ++i)
                for (int j = 0; j < width; ++j)
                    out[edge_of(blocks[p][i], blocks[q][j])] = base + (i + j) % width + 1;
        }
        base += width;
    }
}

}  // namespace intcol
