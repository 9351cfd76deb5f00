#include "ramseykit/colouring.hpp"

#include "ramseykit/errors.hpp"

namespace ramsey {

EdgeColouring::EdgeColouring(int vertex_count, int colour_count)
    : n_(vertex_count), colours_(colour_count), cells_(vertex_count * vertex_count, -1) {
    if (vertex_count < 0 || vertex_count > 255)
        throw PreconditionError("vertex count out of supported range");
    if (colour_count < 1 || colour_count > 120) throw PreconditionError("bad colour count");
}

EdgeColouring EdgeColouring::uniform(const Graph& g, int colour_count, int colour) {
    return build(g, colour_count, [colour](int, int) { return colour; });
}

EdgeColouring EdgeColouring::build(const Graph& g, int colour_count,
                                   const std::function<int(int, int)>& colour_of) {
    EdgeColouring c(g.vertex_count(), colour_count);
    for (auto [u, v] : g.edges()) c.set(u, v, colour_of(u, v));
    return c;
}

void EdgeColouring::set(int u, int v, int colour) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw PreconditionError("bad edge for colouring");
    if (colour < 0 || colour >= colours_) throw PreconditionError("colour index out of range");
    if (cells_[idx(u, v)] < 0) ++assigned_;
    cells_[idx(u, v)] = static_cast<std::int8_t>(colour);
    cells_[idx(v, u)] = static_cast<std::int8_t>(colour);
}

void EdgeColouring::unset(int u, int v) {
    if (cells_[idx(u, v)] >= 0) --assigned_;
    cells_[idx(u, v)] = -1;
    cells_[idx(v, u)] = -1;
}

bool EdgeColouring::is_total_on(const Graph& g) const {
    if (g.vertex_count() != n_) return false;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            int col = cells_[idx(u, v)];
            if (g.has_edge(u, v)) {
                if (col < 0 || col >= colours_) return false;
            } else if (col != -1) {
                return false;
            }
        }
    }
    return true;
}

EdgeColouring EdgeColouring::permuted_colours(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != colours_)
        throw PreconditionError("permutation size does not match colour count");
    EdgeColouring out(n_, colours_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (cells_[idx(u, v)] >= 0) out.set(u, v, perm[cells_[idx(u, v)]]);
    return out;
}

EdgeColouring EdgeColouring::restricted_to_prefix(int m) const {
    if (m < 0 || m > n_) throw PreconditionError("bad restriction size");
    EdgeColouring out(m, colours_);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (cells_[idx(u, v)] >= 0) out.set(u, v, cells_[idx(u, v)]);
    return out;
}

Graph colour_class(const Graph& g, const EdgeColouring& c, int i) {
    if (i < 0 || i >= c.colour_count()) throw PreconditionError("colour index out of range");
    return union_subgraph(g, c, {i});
}

Graph union_subgraph(const Graph& g, const EdgeColouring& c, const std::vector<int>& colours) {
    if (colours.empty()) throw PreconditionError("empty colour set");
    std::vector<bool> keep(c.colour_count(), false);
    for (int i : colours) {
        if (i < 0 || i >= c.colour_count()) throw PreconditionError("colour index out of range");
        keep[i] = true;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int col = c.colour(u, v);
        if (col >= 0 && keep[col]) edges.emplace_back(u, v);
    }
    return Graph::from_edges(g.vertex_count(), edges);
}

std::vector<std::vector<Bits>> colour_adjacency(const Graph& g, const EdgeColouring& c) {
    int n = g.vertex_count();
    std::vector<std::vector<Bits>> rows(c.colour_count(), std::vector<Bits>(n, Bits(n)));
    for (auto [u, v] : g.edges()) {
        int col = c.colour(u, v);
        if (col >= 0) {
            rows[col][u].set(v);
            rows[col][v].set(u);
        }
    }
    return rows;
}

} // namespace ramsey
