#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramseykit/colouring.hpp"
#include "ramseykit/graph.hpp"

namespace ramsey::cnf {

/// One propositional variable per (edge, colour): variable numbering is
/// edge_index * r + colour + 1 over the lexicographically sorted edge list.
struct ArrowingCnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<Edge> edge_order;
    int colours = 0;
    int clique = 0;
};

/// Encodes "g has an r-colouring without a monochromatic K_n" as CNF:
/// satisfiable iff g does not arrow (K_n)_r. Symmetry breaking adds
/// colour-precedence clauses (colour c+1 may appear on edge e only after
/// colour c appeared on an earlier edge); off by default.
ArrowingCnf encode_arrowing(const Graph& g, int colours, int clique,
                            bool symmetry_breaking = false);

std::string to_dimacs(const ArrowingCnf& f);

/// Sidecar variable map: one line per variable, `var u v colour`.
std::string var_map_text(const ArrowingCnf& f);

struct SolverResult {
    enum class Status { sat, unsat };
    Status status = Status::unsat;
    std::vector<int> true_literals; // positive variable indices set true
};

/// Accepts either a bare `SAT`/`UNSAT` first token followed by literals, or
/// DIMACS output (`s SATISFIABLE` / `s UNSATISFIABLE` plus `v` lines).
SolverResult parse_solver_result(std::string_view text);

/// Built-in fallback decision procedure: DPLL with unit propagation.
/// Returns a model (assignment per variable, 1-based at index var) or
/// nullopt when unsatisfiable. Deterministic.
std::optional<std::vector<bool>> dpll_satisfiable(int num_vars,
                                                  const std::vector<std::vector<int>>& clauses);

/// Turns a model of the encoding back into an edge colouring of g.
/// Throws ParseError when the model does not give every edge exactly one colour.
EdgeColouring decode_model(const ArrowingCnf& f, const std::vector<bool>& model, const Graph& g);
EdgeColouring decode_model(const ArrowingCnf& f, const std::vector<int>& true_literals,
                           const Graph& g);

} // namespace ramsey::cnf
