#pragma once

#include "ramseykit/colouring.hpp"
#include "ramseykit/graph.hpp"

namespace ramsey {

/// Parameters of an equivalence question: clique order n and colour count r.
struct ProblemSpec {
    ProblemSpec(int clique_order, int colour_count);

    int n;
    int r;
};

/// (colour, vertex set) claimed to induce a complete subgraph entirely in
/// the stated colour.
struct CliqueWitness {
    int colour = 0;
    VertexSet vertices;

    bool operator==(const CliqueWitness&) const = default;
};

/// (colour, n-set, (n-1)-set) claimed to be a monochromatic K_n + K_{n-1}:
/// two vertex-disjoint cliques of consecutive sizes in one colour.
struct DisjointPairWitness {
    int colour = 0;
    VertexSet big;
    VertexSet small;

    bool operator==(const DisjointPairWitness&) const = default;
};

/// Replay check of a claimed witness against the graph and colouring it was
/// stated for. Never throws: malformed indices simply yield false.
bool validate_witness(const Graph& g, const EdgeColouring& c, const CliqueWitness& w);
bool validate_witness(const Graph& g, const EdgeColouring& c, const DisjointPairWitness& w);

} // namespace ramsey
