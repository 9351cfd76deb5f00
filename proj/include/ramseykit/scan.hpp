#pragma once

#include <cstdint>
#include <optional>

#include "ramseykit/witness.hpp"

namespace ramsey::scan {

/// Kernel selection. The parallel kernels are OpenMP worksharing loops over
/// subset ranks / colouring indices; the serial kernels walk the same ranges
/// in ascending order and are kept as the reference implementation. Both
/// return the canonical (lowest-rank) hit, so results are identical and
/// independent of thread count.
enum class Mode { serial, parallel };

/// Scan of all k-subsets of [0, N) in lexicographic order for a clique of
/// colour i. Returns the lexicographically first witness.
std::optional<CliqueWitness> find_mono_clique_subsets(const Graph& g, const EdgeColouring& c,
                                                      int colour, int k, Mode mode);

/// First monochromatic k-clique over all colours in ascending colour order.
std::optional<CliqueWitness> find_mono_clique_any(const Graph& g, const EdgeColouring& c,
                                                  int k, Mode mode);

bool no_mono_clique(const Graph& g, const EdgeColouring& c, int k, Mode mode);

/// First monochromatic K_n + K_{n-1} over all colours, or nullopt.
std::optional<DisjointPairWitness> find_mono_pair_any(const Graph& g, const EdgeColouring& c,
                                                      int n, Mode mode);

struct AvoidTarget {
    enum class Kind { clique, pair };
    Kind kind = Kind::clique;
    int n = 3; // pair means K_n + K_{n-1}

    static AvoidTarget clique(int n) { return {Kind::clique, n}; }
    static AvoidTarget pair(int n) { return {Kind::pair, n}; }
};

bool colouring_avoids(const Graph& g, const EdgeColouring& c, const AvoidTarget& target);

/// Exhaustive enumeration of the r^M colourings of g's edges (edge e takes
/// digit (index / r^e) mod r), scanning indices [0, limit). Complete when
/// limit >= r^M. Returns the lowest-index avoiding colouring if any.
struct ExhaustiveResult {
    enum class Status {
        found,    // avoiding colouring at `index`
        absent,   // the full space was scanned; none avoids the target
        capped,   // limit cut the scan short without a hit
    };
    Status status = Status::absent;
    std::optional<EdgeColouring> colouring;
    std::uint64_t index = 0;
    std::uint64_t inspected = 0;
};

ExhaustiveResult exhaustive_avoiding_colouring(const Graph& g, int colours,
                                               const AvoidTarget& target,
                                               std::uint64_t limit, Mode mode);

/// Number of colourings the full space holds, saturated at 2^63.
std::uint64_t colouring_space_size(int colours, int edge_count);

} // namespace ramsey::scan
