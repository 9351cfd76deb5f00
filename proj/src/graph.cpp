#include "ramseykit/graph.hpp"

#include <algorithm>

#include "ramseykit/errors.hpp"

namespace ramsey {

void VertexSet::normalise() {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

bool VertexSet::contains(int x) const {
    return std::binary_search(v_.begin(), v_.end(), x);
}

bool VertexSet::valid_for(int vertex_count) const {
    return std::all_of(v_.begin(), v_.end(),
                       [vertex_count](int x) { return x >= 0 && x < vertex_count; });
}

bool VertexSet::disjoint_with(const VertexSet& o) const {
    auto a = v_.begin();
    auto b = o.v_.begin();
    while (a != v_.end() && b != o.v_.end()) {
        if (*a == *b) return false;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return true;
}

bool VertexSet::subset_of(const VertexSet& o) const {
    return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
}

VertexSet VertexSet::unioned(const VertexSet& o) const {
    std::vector<int> out;
    out.reserve(v_.size() + o.v_.size());
    std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet VertexSet::minus(const VertexSet& o) const {
    std::vector<int> out;
    std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

Graph::Graph(int vertex_count) : n_(vertex_count), adj_(vertex_count, Bits(vertex_count)) {
    if (vertex_count < 0) throw PreconditionError("negative vertex count");
}

void Graph::add_edge_unchecked(int u, int v) {
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

Graph Graph::complete(int vertex_count) {
    Graph g(vertex_count);
    for (int u = 0; u < vertex_count; ++u)
        for (int v = u + 1; v < vertex_count; ++v) g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::from_edges(int vertex_count, const std::vector<Edge>& edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " +
                                    std::to_string(v));
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        if (g.adj_[u].test(v))
            throw PreconditionError("duplicate edge " + std::to_string(u) + " " +
                                    std::to_string(v));
        g.add_edge_unchecked(u, v);
    }
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

Graph complete_graph(int m) { return Graph::complete(m); }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs) {
    if (!vs.valid_for(g.vertex_count()))
        throw PreconditionError("vertex set not contained in the graph");
    const auto& map = vs.elements();
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < vs.size(); ++i) pos[map[i]] = i;

    std::vector<Edge> edges;
    for (int i = 0; i < vs.size(); ++i) {
        const Bits& row = g.neighbours(map[i]);
        for (int v = row.next(map[i] + 1); v >= 0; v = row.next(v + 1))
            if (pos[v] >= 0) edges.emplace_back(i, pos[v]);
    }
    return {Graph::from_edges(vs.size(), edges), map};
}

} // namespace ramsey
