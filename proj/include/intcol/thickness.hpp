#pragma once

#include "intcol/graph.hpp"

#include <string>

namespace intcol {

/// Audit record for one decomposition: which method ran, the bound it
/// promises on this input, and what it delivered.
struct BoundTrace {
    std::string method;
    int bound = 0;
    std::string formula;  // the bound instantiated on this input
    int parts = 0;
    bool certified = false;
    std::string note;
};

struct GraphDecomposition {
    Multigraph graph;
    Decomposition decomposition;
};

/// At most 2⌈t/5⌉ parts from a proper coloring with t distinct colors.
Decomposition decompose_general(const Multigraph& g, const EdgeColoring& coloring);

/// One part when Δ ≤ 3, otherwise ⌈Δ/3⌉ parts whose degrees at every vertex
/// differ pairwise by at most one.
Decomposition decompose_bipartite(const Multigraph& g, const BipartitionCert& cert);

/// ⌈Δ/4⌉ parts for a bipartite graph with all degrees even.
Decomposition decompose_eulerian_bipartite(const Multigraph& g, const BipartitionCert& cert);

/// (k, kr)-biregular bipartite graph, r ≥ 2: one part for k ≤ 2, two for
/// k = 3, 4 and k - 2 for k ≥ 5. The small-degree side is detected.
Decomposition decompose_biregular(const Multigraph& g, const BipartitionCert& cert);

/// Degrees (k, kr) of a biregular bipartite graph, or nullopt.
std::optional<std::pair<int, int>> biregular_degrees(const Multigraph& g, const BipartitionCert& cert);

/// min(Δ(X), Δ(Y)) star forests, each interval colored.
Decomposition decompose_star_peel(const Multigraph& g, const BipartitionCert& cert);

/// T(r) parts by recursive halving of the part list; T(2) = 1,
/// T(r) = T(⌈r/2⌉) + 1.
int multipartite_thickness_bound(int r);
Decomposition decompose_complete_multipartite(const Multigraph& g, const std::vector<std::vector<Vertex>>& parts);
GraphDecomposition decompose_complete_multipartite(const std::vector<int>& sizes);

enum class BalancedVariant {
    multipartite,         // K_{n*r}
    with_large_part,      // K_{n*r,nr}: K_{n*r} plus one more part of size nr
    odd_complete,         // K_{2n+1}
};
/// Bound of the balanced-family table for the given parameters.
int balanced_family_bound(int n, int r, BalancedVariant variant);
/// For odd_complete, `parts` are 2n+1 singletons. For with_large_part the
/// last entry of `parts` is the large part.
Decomposition decompose_balanced_family(const Multigraph& g, const std::vector<std::vector<Vertex>>& parts,
                                        BalancedVariant variant);
/// Canonical graphs: parts are consecutive vertex blocks, edges in
/// lexicographic order. For odd_complete, r is ignored and K_{2n+1} is built.
GraphDecomposition decompose_balanced_family(int n, int r, BalancedVariant variant);

Multigraph complete_multipartite_graph(const std::vector<int>& sizes);
Multigraph balanced_family_graph(int n, int r, BalancedVariant variant);

/// Parts of g when g is a simple complete multipartite graph with at least
/// two parts (each part an independent set, all cross pairs adjacent).
std::optional<std::vector<std::vector<Vertex>>> complete_multipartite_parts(const Multigraph& g);

/// Repeatedly removes a maximal spanning forest.
Decomposition decompose_forest_peel(const Multigraph& g);

/// Two parts from a cyclic interval t-coloring with t ≥ 2Δ - 2 (one part if
/// the coloring is already interval).
Decomposition split_cyclic(const Multigraph& g, const EdgeColoring& c, int t);

struct DispatchResult {
    Decomposition decomposition;
    BoundTrace trace;
    std::vector<BoundTrace> candidates;  // every applicable method, in priority order
};

/// Runs every applicable method, certifies each result and returns the one
/// with the fewest parts; ties go to the earlier method in priority order.
DispatchResult dispatch_theta_upper(const Multigraph& g);
/// Same selection with candidates evaluated one after another.
DispatchResult dispatch_theta_upper_serial(const Multigraph& g);

/// Dispatcher methods in priority order.
std::vector<std::string> dispatch_methods();
/// Runs a single dispatcher method; nullopt when it does not apply to g,
/// including when one of its preconditions fails.
/// Throws PreconditionError for an unknown name.
std::optional<DispatchResult> run_method(const Multigraph& g, const std::string& method);

}  // namespace intcol
