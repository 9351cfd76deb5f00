#include "ramseykit/scan.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "ramseykit/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ramsey::scan {

namespace {

constexpr std::uint64_t kNoHit = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

// Lexicographic unranking of a k-subset of [0, n).
void unrank_subset(std::uint64_t rank, int n, int k, std::vector<int>& out) {
    out.clear();
    int v = 0;
    for (int picked = 0; picked < k; ++picked) {
        while (true) {
            std::uint64_t block = binomial(n - v - 1, k - picked - 1);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        out.push_back(v++);
    }
}

bool subset_is_mono_clique(const Graph& g, const EdgeColouring& c, int colour,
                           const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.has_edge(vs[i], vs[j])) return false;
            if (c.colour(vs[i], vs[j]) != colour) return false;
        }
    return true;
}

} // namespace

std::optional<CliqueWitness> find_mono_clique_subsets(const Graph& g, const EdgeColouring& c,
                                                      int colour, int k, Mode mode) {
    if (k < 1) throw PreconditionError("clique size must be at least 1");
    if (colour < 0 || colour >= c.colour_count())
        throw PreconditionError("colour index out of range");
    int n = g.vertex_count();
    if (k > n) return std::nullopt;
    std::uint64_t total = binomial(n, k);
    std::uint64_t hit = kNoHit;

    if (mode == Mode::serial) {
        std::vector<int> vs;
        for (std::uint64_t rank = 0; rank < total; ++rank) {
            unrank_subset(rank, n, k, vs);
            if (subset_is_mono_clique(g, c, colour, vs)) {
                hit = rank;
                break;
            }
        }
    } else {
#ifdef _OPENMP
        const std::int64_t totals = static_cast<std::int64_t>(total);
#pragma omp parallel reduction(min : hit)
        {
            std::vector<int> vs;
#pragma omp for schedule(static)
            for (std::int64_t rank = 0; rank < totals; ++rank) {
                unrank_subset(static_cast<std::uint64_t>(rank), n, k, vs);
                if (subset_is_mono_clique(g, c, colour, vs))
                    hit = std::min(hit, static_cast<std::uint64_t>(rank));
            }
        }
#else
        return find_mono_clique_subsets(g, c, colour, k, Mode::serial);
#endif
    }

    if (hit == kNoHit) return std::nullopt;
    std::vector<int> vs;
    unrank_subset(hit, n, k, vs);
    return CliqueWitness{colour, VertexSet(vs)};
}

std::optional<CliqueWitness> find_mono_clique_any(const Graph& g, const EdgeColouring& c, int k,
                                                  Mode mode) {
    for (int colour = 0; colour < c.colour_count(); ++colour)
        if (auto w = find_mono_clique_subsets(g, c, colour, k, mode)) return w;
    return std::nullopt;
}

bool no_mono_clique(const Graph& g, const EdgeColouring& c, int k, Mode mode) {
    return !find_mono_clique_any(g, c, k, mode).has_value();
}

std::optional<DisjointPairWitness> find_mono_pair_any(const Graph& g, const EdgeColouring& c,
                                                      int n, Mode mode) {
    // pair scan: first mono n-clique rank with a disjoint mono (n-1)-clique,
    // inner set scanned serially (it is tiny once the n-clique is fixed)
    if (n < 2) throw PreconditionError("pair target needs n >= 2");
    int N = g.vertex_count();
    if (n > N) return std::nullopt;
    std::uint64_t big_total = binomial(N, n);

    auto small_for = [&](int colour, const std::vector<int>& big)
        -> std::optional<VertexSet> {
        std::vector<int> rest;
        rest.reserve(N - n);
        for (int v = 0; v < N; ++v)
            if (std::find(big.begin(), big.end(), v) == big.end()) rest.push_back(v);
        std::uint64_t small_total = binomial(static_cast<int>(rest.size()), n - 1);
        std::vector<int> pick, mapped;
        for (std::uint64_t rank = 0; rank < small_total; ++rank) {
            unrank_subset(rank, static_cast<int>(rest.size()), n - 1, pick);
            mapped.clear();
            for (int i : pick) mapped.push_back(rest[i]);
            if (subset_is_mono_clique(g, c, colour, mapped)) return VertexSet(mapped);
        }
        return std::nullopt;
    };

    for (int colour = 0; colour < c.colour_count(); ++colour) {
        std::uint64_t hit = kNoHit;
        if (mode == Mode::serial) {
            std::vector<int> big;
            for (std::uint64_t rank = 0; rank < big_total; ++rank) {
                unrank_subset(rank, N, n, big);
                if (subset_is_mono_clique(g, c, colour, big) && small_for(colour, big)) {
                    hit = rank;
                    break;
                }
            }
        } else {
#ifdef _OPENMP
            const std::int64_t totals = static_cast<std::int64_t>(big_total);
#pragma omp parallel reduction(min : hit)
            {
                std::vector<int> big;
#pragma omp for schedule(static)
                for (std::int64_t rank = 0; rank < totals; ++rank) {
                    unrank_subset(static_cast<std::uint64_t>(rank), N, n, big);
                    if (subset_is_mono_clique(g, c, colour, big) && small_for(colour, big))
                        hit = std::min(hit, static_cast<std::uint64_t>(rank));
                }
            }
#else
            return find_mono_pair_any(g, c, n, Mode::serial);
#endif
        }
        if (hit != kNoHit) {
            std::vector<int> big;
            unrank_subset(hit, N, n, big);
            return DisjointPairWitness{colour, VertexSet(big), *small_for(colour, big)};
        }
    }
    return std::nullopt;
}

bool colouring_avoids(const Graph& g, const EdgeColouring& c, const AvoidTarget& target) {
    if (target.kind == AvoidTarget::Kind::clique)
        return no_mono_clique(g, c, target.n, Mode::serial);
    return !find_mono_pair_any(g, c, target.n, Mode::serial).has_value();
}

std::uint64_t colouring_space_size(int colours, int edge_count) {
    std::uint64_t cap = std::uint64_t{1} << 63;
    std::uint64_t total = 1;
    for (int i = 0; i < edge_count; ++i) {
        if (total > cap / static_cast<std::uint64_t>(colours)) return cap;
        total *= static_cast<std::uint64_t>(colours);
    }
    return total;
}

namespace {

// Checks one colouring index without materialising an EdgeColouring:
// digits are decoded into a flat colour-per-edge array, then cliques are
// sought per colour among that colour's edges only.
struct IndexChecker {
    const Graph& g;
    std::vector<Edge> edges;
    int colours;
    AvoidTarget target;

    IndexChecker(const Graph& graph, int r, const AvoidTarget& t)
        : g(graph), edges(graph.edges()), colours(r), target(t) {}

    EdgeColouring materialise(std::uint64_t index) const {
        EdgeColouring c(g.vertex_count(), colours);
        std::uint64_t rest = index;
        for (const auto& [u, v] : edges) {
            c.set(u, v, static_cast<int>(rest % colours));
            rest /= colours;
        }
        return c;
    }

    bool avoids(std::uint64_t index) const {
        EdgeColouring c = materialise(index);
        return colouring_avoids(g, c, target);
    }
};

} // namespace

ExhaustiveResult exhaustive_avoiding_colouring(const Graph& g, int colours,
                                               const AvoidTarget& target, std::uint64_t limit,
                                               Mode mode) {
    if (colours < 1) throw PreconditionError("need at least one colour");
    IndexChecker checker(g, colours, target);
    std::uint64_t space = colouring_space_size(colours, g.edge_count());
    std::uint64_t end = std::min(space, limit);
    std::uint64_t hit = kNoHit;

    if (mode == Mode::serial) {
        for (std::uint64_t idx = 0; idx < end; ++idx) {
            if (checker.avoids(idx)) {
                hit = idx;
                break;
            }
        }
    } else {
#ifdef _OPENMP
        const std::int64_t n = static_cast<std::int64_t>(end);
#pragma omp parallel for schedule(static) reduction(min : hit)
        for (std::int64_t idx = 0; idx < n; ++idx)
            if (checker.avoids(static_cast<std::uint64_t>(idx)))
                hit = std::min(hit, static_cast<std::uint64_t>(idx));
#else
        return exhaustive_avoiding_colouring(g, colours, target, limit, Mode::serial);
#endif
    }

    ExhaustiveResult out;
    if (hit != kNoHit) {
        out.status = ExhaustiveResult::Status::found;
        out.colouring = checker.materialise(hit);
        out.index = hit;
        // canonical count, independent of kernel mode
        out.inspected = hit + 1;
    } else {
        out.status = (end == space) ? ExhaustiveResult::Status::absent
                                    : ExhaustiveResult::Status::capped;
        out.inspected = end;
    }
    return out;
}

} // namespace ramsey::scan
