#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "ramseykit/bitset.hpp"

namespace ramsey {

using Edge = std::pair<int, int>; // stored normalised as (min, max)

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Sorted duplicate-free set of vertex indices. Ordering of whole sets is
/// lexicographic on the sorted element lists, which is the tie-break order
/// used by every search in this library.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> xs) : v_(xs) { normalise(); }
    explicit VertexSet(std::vector<int> xs) : v_(std::move(xs)) { normalise(); }

    static VertexSet range(int n) {
        std::vector<int> xs(n);
        for (int i = 0; i < n; ++i) xs[i] = i;
        return VertexSet(std::move(xs));
    }

    static VertexSet from_bits(const Bits& b) { return VertexSet(b.to_vector()); }

    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    bool contains(int x) const;
    bool valid_for(int vertex_count) const;
    bool disjoint_with(const VertexSet& o) const;
    bool subset_of(const VertexSet& o) const;

    VertexSet unioned(const VertexSet& o) const;
    VertexSet minus(const VertexSet& o) const;

    Bits to_bits(int width) const {
        Bits b(width);
        for (int x : v_) b.set(x);
        return b;
    }

    const std::vector<int>& elements() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

private:
    void normalise();

    std::vector<int> v_;
};

/// Simple undirected graph on dense vertex indices [0, N).
/// Adjacency rows are fixed-width bitsets; instances are immutable after
/// construction and safe to share across threads.
class Graph {
public:
    explicit Graph(int vertex_count);

    static Graph complete(int vertex_count);
    /// Throws PreconditionError on self-loops, duplicate edges or out-of-range endpoints.
    static Graph from_edges(int vertex_count, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }
    const Bits& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    /// All edges as normalised pairs in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    int m_ = 0;
    std::vector<Bits> adj_;
};

/// K_m. The empty and single-vertex cases yield edgeless graphs.
Graph complete_graph(int m);

/// Induced subgraph on `vs` together with the map from new indices to
/// original ones (new vertex i corresponds to map[i] in g).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs);

} // namespace ramsey
