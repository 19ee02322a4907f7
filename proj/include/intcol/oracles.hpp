#pragma once

#include "intcol/edge_coloring.hpp"
#include "intcol/graph.hpp"

namespace intcol {

inline constexpr int kIntervalEdgeBudget = 16;
inline constexpr int kThetaEdgeBudget = 10;
inline constexpr int kArboricityVertexBudget = 14;

/// Witness interval coloring (colors within [1, |E|]) or nullopt when none
/// exists. Throws BudgetExceeded above `edge_budget` edges; the budget itself
/// may not exceed kIntervalEdgeBudget.
std::optional<EdgeColoring> exact_interval_colorable(const Multigraph& g, int edge_budget = kIntervalEdgeBudget);

/// Exact interval coloring thickness.
int exact_theta(const Multigraph& g, int edge_budget = kThetaEdgeBudget);

/// Exact arboricity max ⌈|E(X)| / (|X| - 1)⌉ over vertex subsets with |X| ≥ 2.
int nash_williams_arboricity(const Multigraph& g, int vertex_budget = kArboricityVertexBudget);
int nash_williams_arboricity_serial(const Multigraph& g, int vertex_budget = kArboricityVertexBudget);

}  // namespace intcol
