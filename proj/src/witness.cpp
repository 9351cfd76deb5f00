#include "ramseykit/witness.hpp"

#include "ramseykit/errors.hpp"

namespace ramsey {

ProblemSpec::ProblemSpec(int clique_order, int colour_count) : n(clique_order), r(colour_count) {
    if (n < 3) throw PreconditionError("clique order must be at least 3");
    if (r < 2) throw PreconditionError("colour count must be at least 2");
}

namespace {

bool clique_in_colour(const Graph& g, const EdgeColouring& c, const VertexSet& vs, int colour) {
    const auto& xs = vs.elements();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (!g.has_edge(xs[i], xs[j])) return false;
            if (c.colour(xs[i], xs[j]) != colour) return false;
        }
    }
    return true;
}

} // namespace

bool validate_witness(const Graph& g, const EdgeColouring& c, const CliqueWitness& w) {
    if (w.colour < 0 || w.colour >= c.colour_count()) return false;
    if (!w.vertices.valid_for(g.vertex_count())) return false;
    return clique_in_colour(g, c, w.vertices, w.colour);
}

bool validate_witness(const Graph& g, const EdgeColouring& c, const DisjointPairWitness& w) {
    if (w.colour < 0 || w.colour >= c.colour_count()) return false;
    if (!w.big.valid_for(g.vertex_count()) || !w.small.valid_for(g.vertex_count())) return false;
    if (!w.big.disjoint_with(w.small)) return false;
    if (w.big.size() != w.small.size() + 1 || w.small.size() < 1) return false;
    return clique_in_colour(g, c, w.big, w.colour) && clique_in_colour(g, c, w.small, w.colour);
}

} // namespace ramsey
