#include "ramseykit/detect.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ramseykit/errors.hpp"

namespace ramsey::detect {

namespace {

// Lexicographically-first k-clique over the rows `adj`, restricted to the
// candidate set. Vertices are tried in ascending order, so the first hit is
// the lexicographic minimum; pruning on |prefix| + |candidates| keeps the
// absent case cheap.
bool lex_first_clique(const std::vector<Bits>& adj, Bits candidates, int k,
                      std::vector<int>& prefix) {
    int have = static_cast<int>(prefix.size());
    if (have == k) return true;
    if (have + candidates.count() < k) return false;
    for (int v = candidates.next(0); v >= 0; v = candidates.next(v + 1)) {
        prefix.push_back(v);
        Bits next = candidates & adj[v];
        // only allow vertices above v so each clique is enumerated once, sorted
        for (int w = next.next(0); w >= 0 && w <= v; w = next.next(w + 1)) next.reset(w);
        if (lex_first_clique(adj, next, k, prefix)) return true;
        prefix.pop_back();
    }
    return false;
}

std::optional<VertexSet> clique_in_rows(const std::vector<Bits>& adj, const Bits& within, int k) {
    if (k <= 0) return VertexSet{};
    std::vector<int> prefix;
    prefix.reserve(k);
    if (lex_first_clique(adj, within, k, prefix)) return VertexSet(prefix);
    return std::nullopt;
}

std::vector<Bits> colour_rows(const Graph& g, const EdgeColouring& c, int colour) {
    int n = g.vertex_count();
    std::vector<Bits> rows(n, Bits(n));
    for (auto [u, v] : g.edges()) {
        if (c.colour(u, v) == colour) {
            rows[u].set(v);
            rows[v].set(u);
        }
    }
    return rows;
}

} // namespace

std::optional<VertexSet> find_clique(const Graph& g, int k, const VertexSet& within) {
    if (k < 1) throw PreconditionError("clique size must be at least 1");
    if (!within.valid_for(g.vertex_count()))
        throw PreconditionError("within-set not contained in the graph");
    std::vector<Bits> adj(g.vertex_count(), Bits(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbours(v);
    return clique_in_rows(adj, within.to_bits(g.vertex_count()), k);
}

std::optional<CliqueWitness> find_mono_clique(const Graph& g, const EdgeColouring& c, int colour,
                                              int k, const VertexSet& within) {
    if (k < 1) throw PreconditionError("clique size must be at least 1");
    if (colour < 0 || colour >= c.colour_count())
        throw PreconditionError("colour index out of range");
    if (!within.valid_for(g.vertex_count()))
        throw PreconditionError("within-set not contained in the graph");
    auto rows = colour_rows(g, c, colour);
    if (auto vs = clique_in_rows(rows, within.to_bits(g.vertex_count()), k))
        return CliqueWitness{colour, *vs};
    return std::nullopt;
}

namespace {

// Enumerates i-coloured n-cliques in lexicographic order, invoking f on each;
// stops when f returns true.
bool for_each_clique(const std::vector<Bits>& adj, Bits candidates, int k,
                     std::vector<int>& prefix, const std::function<bool(const std::vector<int>&)>& f) {
    if (static_cast<int>(prefix.size()) == k) return f(prefix);
    if (static_cast<int>(prefix.size()) + candidates.count() < k) return false;
    for (int v = candidates.next(0); v >= 0; v = candidates.next(v + 1)) {
        prefix.push_back(v);
        Bits next = candidates & adj[v];
        for (int w = next.next(0); w >= 0 && w <= v; w = next.next(w + 1)) next.reset(w);
        if (for_each_clique(adj, next, k, prefix, f)) return true;
        prefix.pop_back();
    }
    return false;
}

} // namespace

std::optional<DisjointPairWitness> find_mono_pair(const Graph& g, const EdgeColouring& c,
                                                  int colour, int n) {
    if (n < 2) throw PreconditionError("pair target needs n >= 2");
    if (colour < 0 || colour >= c.colour_count())
        throw PreconditionError("colour index out of range");
    auto rows = colour_rows(g, c, colour);
    Bits all = Bits::full(g.vertex_count());

    std::optional<DisjointPairWitness> found;
    std::vector<int> prefix;
    for_each_clique(rows, all, n, prefix, [&](const std::vector<int>& big) {
        Bits rest = all;
        for (int v : big) rest.reset(v);
        std::vector<int> small_prefix;
        if (lex_first_clique(rows, rest, n - 1, small_prefix)) {
            found = DisjointPairWitness{colour, VertexSet(big), VertexSet(small_prefix)};
            return true;
        }
        return false;
    });
    return found;
}

VertexSet largest_capped_clique(const Graph& g, const EdgeColouring& c, int colour,
                                const VertexSet& within, int cap) {
    if (cap < 0) throw PreconditionError("cap must be non-negative");
    if (colour < 0 || colour >= c.colour_count())
        throw PreconditionError("colour index out of range");
    if (!within.valid_for(g.vertex_count()))
        throw PreconditionError("within-set not contained in the graph");
    if (within.empty() || cap == 0) return VertexSet{};

    auto rows = colour_rows(g, c, colour);
    Bits inside = within.to_bits(g.vertex_count());
    // largest clique first: descending size scan, each absent size prunes fast
    for (int size = within.size(); size >= 1; --size) {
        if (auto vs = clique_in_rows(rows, inside, size)) {
            if (vs->size() <= cap) return *vs;
            std::vector<int> head(vs->elements().begin(), vs->elements().begin() + cap);
            return VertexSet(head);
        }
    }
    return VertexSet{}; // unreachable: a single vertex is always a 1-clique
}

namespace {

struct ColouringSearch {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<int> order;   // vertices, highest degree first
    std::vector<int> classes; // by original vertex index, -1 = unassigned

    ColouringSearch(const Graph& graph, std::uint64_t max_nodes)
        : g(graph), budget(max_nodes), classes(graph.vertex_count(), -1) {
        order.resize(g.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    bool assign(std::size_t pos, int k, int used) {
        if (++nodes > budget) throw BudgetError("chromatic-number search budget exhausted");
        if (pos == order.size()) return true;
        int v = order[pos];
        // introducing at most one fresh class breaks colour-permutation symmetry
        int limit = std::min(k - 1, used);
        for (int col = 0; col <= limit; ++col) {
            bool clash = false;
            for (int u = g.neighbours(v).next(0); u >= 0; u = g.neighbours(v).next(u + 1)) {
                if (classes[u] == col) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            classes[v] = col;
            if (assign(pos + 1, k, std::max(used, col + 1))) return true;
            classes[v] = -1;
        }
        return false;
    }
};

int greedy_colour_count(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> cls(n, -1);
    int used = 0;
    for (int v = 0; v < n; ++v) {
        std::vector<bool> taken(used + 1, false);
        for (int u = g.neighbours(v).next(0); u >= 0; u = g.neighbours(v).next(u + 1))
            if (cls[u] >= 0) taken[cls[u]] = true;
        int col = 0;
        while (col < used && taken[col]) ++col;
        cls[v] = col;
        used = std::max(used, col + 1);
    }
    return used;
}

} // namespace

ChromaticResult chromatic_colouring(const Graph& g, const SearchBudget& budget) {
    int n = g.vertex_count();
    if (n == 0) return {0, {}};
    if (g.edge_count() == 0) return {1, std::vector<int>(n, 0)};

    // clique number bounds chi from below; greedy bounds it from above
    int lb = 2;
    for (int size = std::min(n, greedy_colour_count(g)); size >= 2; --size) {
        if (find_clique(g, size, VertexSet::range(n))) {
            lb = size;
            break;
        }
    }
    int ub = greedy_colour_count(g);

    std::uint64_t remaining = budget.max_nodes;
    for (int k = lb; k < ub; ++k) {
        ColouringSearch search(g, remaining);
        bool ok = false;
        try {
            ok = search.assign(0, k, 0);
        } catch (const BudgetError&) {
            throw BudgetError("chromatic-number search budget exhausted at k = " +
                              std::to_string(k));
        }
        remaining -= std::min(remaining, search.nodes);
        if (ok) return {k, search.classes};
    }
    // the greedy colouring itself witnesses ub
    ColouringSearch search(g, budget.max_nodes);
    if (!search.assign(0, ub, 0))
        throw InternalError("greedy upper bound not realisable"); // cannot happen
    return {ub, search.classes};
}

int chromatic_number(const Graph& g, const SearchBudget& budget) {
    return chromatic_colouring(g, budget).chi;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbours(u).intersects(g.neighbours(v))) return false;
    return true;
}

} // namespace ramsey::detect
