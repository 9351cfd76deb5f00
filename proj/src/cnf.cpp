#include "ramseykit/cnf.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ramseykit/detect.hpp"
#include "ramseykit/errors.hpp"

namespace ramsey::cnf {

namespace {

void clique_subset_clauses(const Graph& g, int clique, int colours,
                           const std::vector<int>& edge_index_flat, int n,
                           std::vector<std::vector<int>>& clauses) {
    // one clause per (n-subset inducing a clique, colour): not all its edges
    // may take that colour
    std::vector<int> subset(clique);
    std::vector<int> edge_vars;
    std::function<void(int, int)> rec = [&](int depth, int start) {
        if (depth == clique) {
            edge_vars.clear();
            for (int i = 0; i < clique; ++i)
                for (int j = i + 1; j < clique; ++j) {
                    int ei = edge_index_flat[subset[i] * n + subset[j]];
                    edge_vars.push_back(ei);
                }
            for (int c = 0; c < colours; ++c) {
                std::vector<int> clause;
                clause.reserve(edge_vars.size());
                for (int ei : edge_vars) clause.push_back(-(ei * colours + c + 1));
                clauses.push_back(std::move(clause));
            }
            return;
        }
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int i = 0; i < depth; ++i)
                if (!g.has_edge(subset[i], v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            subset[depth] = v;
            rec(depth + 1, v + 1);
        }
    };
    rec(0, 0);
}

} // namespace

ArrowingCnf encode_arrowing(const Graph& g, int colours, int clique, bool symmetry_breaking) {
    if (colours < 1) throw PreconditionError("need at least one colour");
    if (clique < 2) throw PreconditionError("clique target needs n >= 2");

    ArrowingCnf f;
    f.colours = colours;
    f.clique = clique;
    f.edge_order = g.edges();
    int m = static_cast<int>(f.edge_order.size());
    f.num_vars = m * colours;

    int n = g.vertex_count();
    std::vector<int> edge_index_flat(n * n, -1);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = f.edge_order[e];
        edge_index_flat[u * n + v] = e;
        edge_index_flat[v * n + u] = e;
    }

    auto var = [colours](int edge, int colour) { return edge * colours + colour + 1; };

    // at least one colour per edge
    for (int e = 0; e < m; ++e) {
        std::vector<int> clause;
        for (int c = 0; c < colours; ++c) clause.push_back(var(e, c));
        f.clauses.push_back(std::move(clause));
    }
    // at most one colour per edge
    for (int e = 0; e < m; ++e)
        for (int c1 = 0; c1 < colours; ++c1)
            for (int c2 = c1 + 1; c2 < colours; ++c2)
                f.clauses.push_back({-var(e, c1), -var(e, c2)});

    clique_subset_clauses(g, clique, colours, edge_index_flat, n, f.clauses);

    if (symmetry_breaking) {
        // colour precedence: edge e may take colour c only if some earlier
        // edge already took colour c-1
        for (int c = 1; c < colours; ++c) {
            for (int e = 0; e < m; ++e) {
                std::vector<int> clause;
                clause.push_back(-var(e, c));
                for (int earlier = 0; earlier < e; ++earlier)
                    clause.push_back(var(earlier, c - 1));
                f.clauses.push_back(std::move(clause));
            }
        }
    }
    return f;
}

std::string to_dimacs(const ArrowingCnf& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

std::string var_map_text(const ArrowingCnf& f) {
    std::ostringstream out;
    for (int e = 0; e < static_cast<int>(f.edge_order.size()); ++e)
        for (int c = 0; c < f.colours; ++c)
            out << (e * f.colours + c + 1) << ' ' << f.edge_order[e].first << ' '
                << f.edge_order[e].second << ' ' << c << '\n';
    return out.str();
}

SolverResult parse_solver_result(std::string_view text) {
    std::istringstream in{std::string(text)};
    SolverResult out;
    bool status_seen = false;
    std::string line;

    auto read_literals = [&](std::istringstream& ls) {
        int lit;
        while (ls >> lit)
            if (lit > 0) out.true_literals.push_back(lit);
    };

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c") continue;
        if (head == "s") {
            std::string word;
            ls >> word;
            if (word == "SATISFIABLE")
                out.status = SolverResult::Status::sat;
            else if (word == "UNSATISFIABLE")
                out.status = SolverResult::Status::unsat;
            else
                throw ParseError("unrecognised status line: " + line);
            status_seen = true;
        } else if (head == "v") {
            read_literals(ls);
        } else if (head == "SAT" || head == "SATISFIABLE") {
            out.status = SolverResult::Status::sat;
            status_seen = true;
            read_literals(ls);
        } else if (head == "UNSAT" || head == "UNSATISFIABLE") {
            out.status = SolverResult::Status::unsat;
            status_seen = true;
        } else if (status_seen && out.status == SolverResult::Status::sat) {
            // bare literal continuation lines after a SAT header
            std::istringstream full(line);
            read_literals(full);
        } else {
            throw ParseError("unrecognised solver output line: " + line);
        }
    }
    if (!status_seen) throw ParseError("solver output holds no SAT/UNSAT status");
    return out;
}

namespace {

// Plain DPLL with unit propagation; branches lowest variable first, true
// before false. Complete and deterministic, adequate for desk-scale CNF.
struct Dpll {
    int num_vars;
    const std::vector<std::vector<int>>& clauses;
    std::vector<int> assign; // 1-based: -1 unset, 0 false, 1 true

    Dpll(int nv, const std::vector<std::vector<int>>& cl)
        : num_vars(nv), clauses(cl), assign(nv + 1, -1) {}

    int lit_value(int lit) const {
        int v = assign[std::abs(lit)];
        if (v < 0) return -1;
        return (lit > 0) == (v == 1) ? 1 : 0;
    }

    // returns false on conflict; appends set variables to trail
    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& clause : clauses) {
                int unassigned = 0, last_free = 0;
                bool satisfied = false;
                for (int lit : clause) {
                    int v = lit_value(lit);
                    if (v == 1) {
                        satisfied = true;
                        break;
                    }
                    if (v == -1) {
                        ++unassigned;
                        last_free = lit;
                    }
                }
                if (satisfied) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) {
                    assign[std::abs(last_free)] = last_free > 0 ? 1 : 0;
                    trail.push_back(std::abs(last_free));
                    changed = true;
                }
            }
        }
        return true;
    }

    bool solve() {
        std::vector<int> trail;
        if (!propagate(trail)) {
            for (int v : trail) assign[v] = -1;
            return false;
        }
        int branch = 0;
        for (int v = 1; v <= num_vars; ++v)
            if (assign[v] < 0) {
                branch = v;
                break;
            }
        if (branch == 0) return true;
        for (int value : {1, 0}) {
            assign[branch] = value;
            if (solve()) return true;
            assign[branch] = -1;
        }
        for (int v : trail) assign[v] = -1;
        return false;
    }
};

} // namespace

std::optional<std::vector<bool>> dpll_satisfiable(int num_vars,
                                                  const std::vector<std::vector<int>>& clauses) {
    Dpll solver(num_vars, clauses);
    if (!solver.solve()) return std::nullopt;
    std::vector<bool> model(num_vars + 1, false);
    for (int v = 1; v <= num_vars; ++v) model[v] = solver.assign[v] == 1;
    return model;
}

EdgeColouring decode_model(const ArrowingCnf& f, const std::vector<bool>& model, const Graph& g) {
    EdgeColouring c(g.vertex_count(), f.colours);
    for (int e = 0; e < static_cast<int>(f.edge_order.size()); ++e) {
        int chosen = -1;
        for (int col = 0; col < f.colours; ++col) {
            int v = e * f.colours + col + 1;
            if (v < static_cast<int>(model.size()) && model[v]) {
                if (chosen >= 0) throw ParseError("model sets two colours on one edge");
                chosen = col;
            }
        }
        if (chosen < 0) throw ParseError("model leaves an edge uncoloured");
        c.set(f.edge_order[e].first, f.edge_order[e].second, chosen);
    }
    if (!c.is_total_on(g)) throw ParseError("decoded colouring is not total on the graph");
    return c;
}

EdgeColouring decode_model(const ArrowingCnf& f, const std::vector<int>& true_literals,
                           const Graph& g) {
    std::vector<bool> model(f.num_vars + 1, false);
    for (int lit : true_literals)
        if (lit > 0 && lit <= f.num_vars) model[lit] = true;
    return decode_model(f, model, g);
}

} // namespace ramsey::cnf
