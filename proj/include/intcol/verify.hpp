#pragma once

#include "intcol/graph.hpp"

namespace intcol {

enum class VerifyMode { proper, interval, cyclic };

/// Outcome of checking a coloring. Each flag is true iff its vertex list is
/// empty. A vertex fails `interval` when its incident colors are not distinct
/// consecutive integers; it fails `cyclic_interval` when they are not distinct
/// and consecutive modulo t. Only the flags implied by the mode are computed;
/// the others stay true.
struct VerifyReport {
    bool proper = true;
    bool interval = true;
    bool cyclic_interval = true;
    std::vector<Vertex> improper_vertices;
    std::vector<Vertex> non_interval_vertices;
    std::vector<Vertex> non_cyclic_vertices;
    std::vector<EdgeId> bad_edges;  // edges of the offending vertices or uncovered edges
    std::string message;

    bool ok(VerifyMode mode) const
    {
        switch (mode) {
        case VerifyMode::proper:
            return proper;
        case VerifyMode::interval:
            return interval;
        case VerifyMode::cyclic:
            return cyclic_interval;
        }
        return false;
    }
};

/// OpenMP kernel: vertices are checked in parallel, the report lists are in
/// increasing vertex order regardless of the thread count.
VerifyReport verify(const Multigraph& g, const EdgeColoring& c, VerifyMode mode, int cycle_length = 0);

/// Single-threaded reference implementation with identical output.
VerifyReport verify_serial(const Multigraph& g, const EdgeColoring& c, VerifyMode mode, int cycle_length = 0);

/// Checks that `d` partitions E(g) and that every nonempty part's certificate
/// is an interval coloring of the part subgraph. Result flags: `interval`
/// carries the overall verdict.
VerifyReport verify_decomposition(const Multigraph& g, const Decomposition& d);

/// Convenience: interval check of a single vertex palette (sorted input).
bool is_interval_palette(std::span<const Color> sorted);
bool is_cyclic_interval_palette(std::span<const Color> sorted, int cycle_length);

}  // namespace intcol
