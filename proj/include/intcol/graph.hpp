#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace intcol {

using Vertex = int;
using EdgeId = int;
using Color = int;

/// Raised when an operation's input violates its precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by exponential oracles when the instance exceeds the hard budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    bool is_loop() const { return u == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite undirected multigraph with dense edge ids. Parallel edges are
/// distinct edges; loops exist only when `allows_loops` is set and count
/// twice towards the degree of their vertex.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int vertex_count, std::vector<Edge> edges, bool allows_loops = false);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool allows_loops() const { return allows_loops_; }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }

    /// Edges incident to v, in increasing id order; a loop is listed twice.
    std::span<const EdgeId> incident(Vertex v) const
    {
        return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
    }

    int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    int max_degree() const;
    int min_degree() const;

    /// Endpoint of e opposite to v (v itself for a loop).
    Vertex other(EdgeId e, Vertex v) const
    {
        const Edge& ed = edges_[e];
        return ed.u == v ? ed.v : ed.u;
    }

    bool has_loops() const;
    bool has_parallel_edges() const;
    bool is_simple() const { return !has_loops() && !has_parallel_edges(); }

private:
    int vertex_count_ = 0;
    bool allows_loops_ = false;
    std::vector<Edge> edges_;
    std::vector<int> offsets_ = {0};
    std::vector<EdgeId> incidence_;
};

Multigraph build_graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_pairs,
                       bool allows_loops = false);
Multigraph build_graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edge_pairs,
                       bool allows_loops = false);

/// Subgraph on the same vertex set keeping `edges` (renumbered densely in the
/// given order). `original[i]` is the host id of the subgraph's edge i.
struct EdgeSubgraph {
    Multigraph graph;
    std::vector<EdgeId> original;
};
EdgeSubgraph edge_subgraph(const Multigraph& g, std::span<const EdgeId> edges);

/// Connected component index per vertex (isolated vertices get their own).
std::vector<int> component_labels(const Multigraph& g, int* component_count = nullptr);

enum class Side : std::uint8_t { X, Y };

struct BipartitionCert {
    std::vector<Side> side;

    bool valid_for(const Multigraph& g) const;
    int max_degree(const Multigraph& g, Side s) const;
};

/// Two-coloring of the vertices, or nullopt if g contains an odd cycle
/// (a loop counts as an odd cycle).
std::optional<BipartitionCert> bipartition(const Multigraph& g);

/// Total assignment of integer colors to edge ids.
class EdgeColoring {
public:
    EdgeColoring() = default;
    explicit EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}
    EdgeColoring(std::initializer_list<Color> colors) : colors_(colors) {}

    int size() const { return static_cast<int>(colors_.size()); }
    Color operator[](EdgeId e) const { return colors_[e]; }
    Color& operator[](EdgeId e) { return colors_[e]; }
    std::span<const Color> colors() const { return colors_; }

    Color min_color() const;
    Color max_color() const;
    int distinct_colors() const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    std::vector<Color> colors_;
};

/// Shift so the smallest color is 1. Empty colorings are returned unchanged.
EdgeColoring normalize(const EdgeColoring& c);

/// Partition of the edges into parts, each with an optional interval-coloring
/// certificate. A certificate lists the colors of the part's edges in
/// increasing edge-id order.
struct Decomposition {
    std::vector<int> part;
    std::vector<std::optional<std::vector<Color>>> certificates;

    int part_count() const { return static_cast<int>(certificates.size()); }
    std::vector<EdgeId> part_edges(int p) const;

    /// Build from per-edge part and color; each part's colors are normalized.
    static Decomposition from_colors(int part_count, std::vector<int> part, std::span<const Color> color);

    /// Color of every edge under its part's certificate (requires all certified).
    std::vector<Color> edge_colors() const;

    /// Drop empty parts; the remaining parts keep their relative order.
    void compact();
};

/// Per-vertex palette S(v, c) as a sorted list (duplicates kept).
std::vector<Color> palette(const Multigraph& g, const EdgeColoring& c, Vertex v);

}  // namespace intcol
