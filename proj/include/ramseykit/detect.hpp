#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramseykit/witness.hpp"

namespace ramsey::detect {

/// Node limit for the searches that can blow up (chromatic number,
/// avoidance backtracking). The seed feeds randomised test drivers only;
/// the searches themselves are deterministic.
struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
    std::uint64_t deterministic_seed = 0;
};

/// Lexicographically first k-clique of g inside `within`, or nullopt.
/// Search is exhaustive; k >= 1.
std::optional<VertexSet> find_clique(const Graph& g, int k, const VertexSet& within);

/// Lexicographically first k-clique in colour i inside `within`, or nullopt.
std::optional<CliqueWitness> find_mono_clique(const Graph& g, const EdgeColouring& c,
                                              int colour, int k, const VertexSet& within);

/// Monochromatic K_n + K_{n-1} in colour i: enumerates n-cliques in that
/// colour lexicographically and pairs each with the first disjoint
/// (n-1)-clique. Exhaustive; nullopt means none exists.
std::optional<DisjointPairWitness> find_mono_pair(const Graph& g, const EdgeColouring& c,
                                                  int colour, int n);

/// Vertex set of a largest i-coloured clique inside `within`, capped:
/// the lexicographically smallest maximum clique, truncated to its first
/// `cap` vertices when larger. An unused colour yields the smallest
/// singleton of `within`; empty `within` (or cap = 0) yields the empty set.
VertexSet largest_capped_clique(const Graph& g, const EdgeColouring& c,
                                int colour, const VertexSet& within, int cap);

struct ChromaticResult {
    int chi = 0;
    std::vector<int> classes; // proper colouring with chi classes
};

/// Exact chromatic number by branch and bound; throws BudgetError when the
/// node budget is exhausted before the bound closes.
ChromaticResult chromatic_colouring(const Graph& g, const SearchBudget& budget);
int chromatic_number(const Graph& g, const SearchBudget& budget);

bool is_triangle_free(const Graph& g);

} // namespace ramsey::detect
