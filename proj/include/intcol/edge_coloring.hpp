#pragma once

#include "intcol/graph.hpp"

namespace intcol {

/// Proper Δ-edge-coloring of a bipartite multigraph (colors 1..Δ) by
/// alternating-path recoloring.
EdgeColoring konig_color(const Multigraph& g, const BipartitionCert& cert);

/// Proper edge-coloring of a simple graph with at most Δ+1 colors
/// (Misra–Gries fan rotation).
EdgeColoring vizing_color(const Multigraph& g);

/// Proper edge-coloring of a loopless multigraph with at most ⌊3Δ/2⌋ colors.
EdgeColoring shannon_color(const Multigraph& g);

/// k-coloring of a bipartite multigraph, not necessarily proper, in which the
/// number of edges of any two colors at a vertex differs by at most one.
/// Colors are 1..k.
EdgeColoring equalized_bipartite_color(const Multigraph& g, const BipartitionCert& cert, int k);

/// Alternate red/blue split along closed Euler trails. Vertices listed in
/// `imbalanced` are trail starts of components with an odd number of edges;
/// everywhere else each degree is exactly halved.
struct EulerSplit {
    std::vector<EdgeId> red;
    std::vector<EdgeId> blue;
    std::vector<Vertex> imbalanced;
};
EulerSplit euler_split(const Multigraph& g);

/// Closed Euler trail of the component containing `start`, as an edge
/// sequence with its vertex sequence (vertices.size() == edges.size() + 1).
struct EulerTrail {
    std::vector<EdgeId> edges;
    std::vector<Vertex> vertices;
};
/// One closed trail per nontrivial component; all degrees must be even.
std::vector<EulerTrail> euler_trails(const Multigraph& g);

/// Decomposition of a 2r-regular multigraph (loops allowed, counted twice)
/// into r edge-disjoint 2-factors.
struct TwoFactorization {
    std::vector<std::vector<EdgeId>> factors;
};
TwoFactorization petersen_two_factorization(const Multigraph& g);

/// Exact chromatic index with a witness coloring (colors 1..χ'), by
/// backtracking. Throws BudgetExceeded above `edge_limit` edges.
struct ChromaticIndex {
    int value = 0;
    EdgeColoring witness;
};
ChromaticIndex exact_chromatic_index(const Multigraph& g, int edge_limit = 20);

/// Proper k-edge-coloring by exhaustive search, or nullopt when none exists.
std::optional<EdgeColoring> find_edge_coloring(const Multigraph& g, int k);

}  // namespace intcol
