#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ramseykit/avoidance.hpp"
#include "ramseykit/detect.hpp"
#include "ramseykit/witness.hpp"

namespace ramsey::equiv {

/// Outcome of the A/B partition step. Colours are relabelled by `relabel`
/// (new = relabel[old]) so that the chosen monochromatic K_n carries the
/// last colour index r-1; v_sets[i] is V_{i+1} in that relabelled space,
/// with v_sets[r-1] the K_n itself. a_set is their union, b_set the rest.
struct PartitionResult {
    std::vector<VertexSet> v_sets;
    VertexSet a_set;
    VertexSet b_set;
    std::vector<int> relabel;

    std::vector<int> inverse_relabel() const;
};

/// Requires a monochromatic K_n in some colour (PreconditionError otherwise).
/// The K_n is the lexicographically smallest over (colour, vertex set); each
/// remaining V_i is the largest i-coloured clique outside it, capped at n.
/// |a_set| <= r*n always holds.
PartitionResult build_partition(const Graph& g, const EdgeColouring& c, const ProblemSpec& spec);

/// The core recolouring for n, r >= 3, (n, r) != (3, 3): given a colouring
/// with a monochromatic K_n but no monochromatic K_n + K_{n-1}, recolours
/// G[A] with a K_n-free (r-1)-colouring and all A-B edges with the last
/// colour. The result is verified to contain no monochromatic K_n at all
/// and is returned in the caller's colour space.
EdgeColouring general_recolouring(const Graph& g, const EdgeColouring& c, const ProblemSpec& spec);

/// Lifts a K_n-free colouring of a complete graph through a proper vertex
/// colouring: edge {u, v} takes the base colour of {class(u), class(v)}.
/// Any monochromatic clique of the output would project to one in the base,
/// so the output inherits the base guarantee.
EdgeColouring chvatal_recolouring(const Graph& g, const std::vector<int>& proper_classes,
                                  const avoid::KnownColouring& base);

/// Carried by the obs2_extract failure path: every vertex lies on the three
/// triangles or is isolated from the rest, which caps the chromatic number.
struct NoOutsideEdge {
    int chi_core = 0;  // chromatic number of the triangle-vertex core
    int chi_bound = 0; // chi_core + 1, always <= 10
};

/// Given valid monochromatic triangles in all three colours, finds an edge
/// avoiding all their vertices and returns it paired with the triangle of
/// its colour. When no such edge exists, returns the diagnostic bound
/// instead (the graph's chromatic number is then at most 10, so it cannot
/// be 3-Ramsey for K_3).
struct Obs2Result {
    std::optional<DisjointPairWitness> pair;
    std::optional<NoOutsideEdge> diagnostic;
};
Obs2Result obs2_extract(const Graph& g, const EdgeColouring& c,
                        const std::array<CliqueWitness, 3>& triangles);

/// The explicit triangle-free 3-colouring of a graph that decomposes into a
/// K_6 and a triangle-free remainder: with v the smallest vertex of the
/// K_6, the other five split into a red and a blue 5-cycle, the star of v
/// is yellow, the remainder is blue, remainder-to-(K-v) edges are yellow
/// and remainder-to-v edges are red. Output verified triangle-free.
EdgeColouring obs3_colouring(const Graph& g, const VertexSet& k_set);

/// A triangle of g vertex-disjoint from k_set, or nullopt.
std::optional<VertexSet> find_disjoint_triangle(const Graph& g, const VertexSet& k_set);

enum class OutcomeKind { mono_pair_found, ramsey_refuted, inconclusive };
const char* to_string(OutcomeKind k);

struct TraceStep {
    std::string action;
    std::string detail;
    std::string citation; // literature citation when a trusted result is invoked
};

/// The dichotomy delivered by the equivalence argument: either a verified
/// monochromatic K_n + K_{n-1} in the given colouring, or a verified
/// K_n-free colouring refuting r-Ramseyness, or inconclusive under budget.
struct EquivalenceOutcome {
    OutcomeKind kind = OutcomeKind::inconclusive;
    std::optional<DisjointPairWitness> pair;
    std::optional<EdgeColouring> refuting_colouring;
    std::vector<TraceStep> trace;
};

/// Case analysis for n = r = 3 over the colour classes R, B, Y: return an
/// existing monochromatic K_3 + K_2 if any; otherwise decide 2-Ramseyness
/// of the three pairwise unions and follow the branch the decisions allow
/// (forced triangles in all colours, a K_6 inside an arrowing union, or the
/// trusted K_6-free lemma). Budget exhaustion yields inconclusive.
EquivalenceOutcome case33_driver(const Graph& g, const EdgeColouring& c,
                                 const detect::SearchBudget& budget);

/// Top-level dispatcher for n, r >= 3: mono pair if present, the input
/// colouring itself as refutation when it has no monochromatic K_n, the
/// general recolouring otherwise, and the (3,3) driver for that case.
EquivalenceOutcome theorem_check(const Graph& g, const EdgeColouring& c,
                                 const ProblemSpec& spec, const detect::SearchBudget& budget);

} // namespace ramsey::equiv
