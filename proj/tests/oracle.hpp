// Naive reference implementations used as test oracles. These deliberately
// share no code with the search paths they check: plain subset enumeration
// and full colouring enumeration only.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ramseykit/colouring.hpp"
#include "ramseykit/graph.hpp"

namespace oracle {

using ramsey::EdgeColouring;
using ramsey::Graph;
using ramsey::VertexSet;

// all k-subsets of `pool` in lexicographic order; stop when fn returns true
inline bool for_each_subset(const std::vector<int>& pool, int k,
                            const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(pick.size()) == k) return fn(pick);
        if (pool.size() - start < k - pick.size()) return false;
        for (std::size_t i = start; i < pool.size(); ++i) {
            pick.push_back(pool[i]);
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

inline bool is_mono_clique(const Graph& g, const EdgeColouring& c, int colour,
                           const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j]) || c.colour(vs[i], vs[j]) != colour) return false;
    return true;
}

inline std::optional<VertexSet> find_mono_clique(const Graph& g, const EdgeColouring& c,
                                                 int colour, int k, const VertexSet& within) {
    std::optional<VertexSet> found;
    for_each_subset(within.elements(), k, [&](const std::vector<int>& vs) {
        if (is_mono_clique(g, c, colour, vs)) {
            found = VertexSet(vs);
            return true;
        }
        return false;
    });
    return found;
}

inline bool mono_clique_exists(const Graph& g, const EdgeColouring& c, int k) {
    std::vector<int> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    for (int colour = 0; colour < c.colour_count(); ++colour) {
        bool hit = for_each_subset(
            all, k, [&](const std::vector<int>& vs) { return is_mono_clique(g, c, colour, vs); });
        if (hit) return true;
    }
    return false;
}

inline bool mono_pair_exists(const Graph& g, const EdgeColouring& c, int colour, int n) {
    std::vector<int> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    return for_each_subset(all, n, [&](const std::vector<int>& big) {
        if (!is_mono_clique(g, c, colour, big)) return false;
        std::vector<int> rest;
        for (int v : all)
            if (std::find(big.begin(), big.end(), v) == big.end()) rest.push_back(v);
        return for_each_subset(rest, n - 1, [&](const std::vector<int>& small) {
            return is_mono_clique(g, c, colour, small);
        });
    });
}

// largest clique entirely in one colour inside `within`
inline int max_mono_clique_size(const Graph& g, const EdgeColouring& c, int colour,
                                const VertexSet& within) {
    int best = 0;
    for (int k = within.size(); k >= 1; --k) {
        if (find_mono_clique(g, c, colour, k, within)) {
            best = k;
            break;
        }
    }
    return best;
}

// enumerates every r-colouring of g's edges; true iff all contain a mono K_n
inline bool arrows(const Graph& g, int colours, int clique) {
    auto edges = g.edges();
    EdgeColouring c(g.vertex_count(), colours);
    std::function<bool(std::size_t)> rec = [&](std::size_t at) -> bool {
        if (at == edges.size()) return mono_clique_exists(g, c, clique);
        for (int col = 0; col < colours; ++col) {
            c.set(edges[at].first, edges[at].second, col);
            if (!rec(at + 1)) return false; // found an avoiding colouring
        }
        return true;
    };
    return rec(0);
}

inline bool proper_colouring_exists(const Graph& g, int k) {
    if (k <= 0) return g.vertex_count() == 0;
    std::vector<int> cls(g.vertex_count(), -1);
    std::function<bool(int)> rec = [&](int v) {
        if (v == g.vertex_count()) return true;
        for (int col = 0; col < k; ++col) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.has_edge(u, v) && cls[u] == col) {
                    ok = false;
                    break;
                }
            if (ok) {
                cls[v] = col;
                if (rec(v + 1)) return true;
                cls[v] = -1;
            }
        }
        return false;
    };
    return rec(0);
}

inline bool triangle_free(const Graph& g) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) return false;
    return true;
}

// --- seeded random instances ------------------------------------------------

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution flip(p);
    std::vector<ramsey::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline EdgeColouring random_colouring(std::mt19937_64& rng, const Graph& g, int colours) {
    std::uniform_int_distribution<int> pick(0, colours - 1);
    EdgeColouring c(g.vertex_count(), colours);
    for (auto [u, v] : g.edges()) c.set(u, v, pick(rng));
    return c;
}

inline Graph petersen() {
    std::vector<ramsey::Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer cycle
        edges.emplace_back(i, i + 5);               // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5); // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

} // namespace oracle
