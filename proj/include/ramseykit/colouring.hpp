#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ramseykit/graph.hpp"

namespace ramsey {

/// Total assignment of a colour index in [0, colour_count) to every edge of
/// an associated Graph. Stored densely; cells for non-edges hold -1.
/// The association is by convention: operations taking (Graph, EdgeColouring)
/// expect is_total_on(graph) to hold.
class EdgeColouring {
public:
    EdgeColouring() = default;
    EdgeColouring(int vertex_count, int colour_count);

    static EdgeColouring uniform(const Graph& g, int colour_count, int colour);
    /// colour_of(u, v) is consulted once per edge of g, with u < v.
    static EdgeColouring build(const Graph& g, int colour_count,
                               const std::function<int(int, int)>& colour_of);

    int vertex_span() const { return n_; }
    int colour_count() const { return colours_; }
    int coloured_edge_count() const { return assigned_; }

    /// Colour of {u, v}, or -1 when unset / not an edge.
    int colour(int u, int v) const { return cells_[idx(u, v)]; }

    void set(int u, int v, int colour);
    void unset(int u, int v);

    /// True iff every edge of g is coloured, no non-edge carries a colour,
    /// and every colour index is within range.
    bool is_total_on(const Graph& g) const;

    /// Applies a colour relabelling: new colour of an edge = perm[old colour].
    EdgeColouring permuted_colours(const std::vector<int>& perm) const;

    /// Restriction to the first m vertices (keeps colours of surviving edges).
    EdgeColouring restricted_to_prefix(int m) const;

    bool operator==(const EdgeColouring&) const = default;

private:
    int idx(int u, int v) const { return u * n_ + v; }

    int n_ = 0;
    int colours_ = 0;
    int assigned_ = 0;
    std::vector<std::int8_t> cells_;
};

/// Spanning subgraph of g containing exactly the edges coloured i.
/// Throws PreconditionError when i is out of range.
Graph colour_class(const Graph& g, const EdgeColouring& c, int i);

/// Spanning subgraph whose edges carry a colour from `colours`.
/// Throws PreconditionError when the set is empty or holds an out-of-range index.
Graph union_subgraph(const Graph& g, const EdgeColouring& c, const std::vector<int>& colours);

/// Per-colour adjacency rows: result[i][v] = i-coloured neighbours of v.
std::vector<std::vector<Bits>> colour_adjacency(const Graph& g, const EdgeColouring& c);

} // namespace ramsey
