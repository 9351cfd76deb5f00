#include "ramseykit/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ramseykit/errors.hpp"

namespace ramsey::equiv {

namespace {

constexpr const char* kTrustedLemmaBL =
    "every K6-free graph that arrows (K3, K3) also arrows (K3+K2, K3+K2) "
    "[Bloom-Liebenau]";

std::string set_text(const VertexSet& vs) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int v : vs) {
        if (!first) out << ' ';
        out << v;
        first = false;
    }
    out << '}';
    return out.str();
}

// Lexicographically smallest monochromatic K_n over (colour, vertex set).
std::optional<CliqueWitness> first_mono_clique(const Graph& g, const EdgeColouring& c, int n) {
    for (int colour = 0; colour < c.colour_count(); ++colour)
        if (auto w = detect::find_mono_clique(g, c, colour, n,
                                              VertexSet::range(g.vertex_count())))
            return w;
    return std::nullopt;
}

std::optional<DisjointPairWitness> first_mono_pair(const Graph& g, const EdgeColouring& c,
                                                   int n) {
    for (int colour = 0; colour < c.colour_count(); ++colour)
        if (auto w = detect::find_mono_pair(g, c, colour, n)) return w;
    return std::nullopt;
}

} // namespace

std::vector<int> PartitionResult::inverse_relabel() const {
    std::vector<int> inv(relabel.size());
    for (std::size_t i = 0; i < relabel.size(); ++i) inv[relabel[i]] = static_cast<int>(i);
    return inv;
}

PartitionResult build_partition(const Graph& g, const EdgeColouring& c, const ProblemSpec& spec) {
    if (c.colour_count() != spec.r)
        throw PreconditionError("colouring colour count does not match the problem");

    auto witness = first_mono_clique(g, c, spec.n);
    if (!witness)
        throw PreconditionError("no monochromatic K_" + std::to_string(spec.n) +
                                " present; the colouring itself refutes arrowing");

    PartitionResult out;
    // relabel swaps the witness colour with the last index
    out.relabel.resize(spec.r);
    std::iota(out.relabel.begin(), out.relabel.end(), 0);
    std::swap(out.relabel[witness->colour], out.relabel[spec.r - 1]);

    EdgeColouring relabelled = c.permuted_colours(out.relabel);
    VertexSet everyone = VertexSet::range(g.vertex_count());
    VertexSet rest = everyone.minus(witness->vertices);

    out.v_sets.resize(spec.r);
    out.v_sets[spec.r - 1] = witness->vertices;
    out.a_set = witness->vertices;
    for (int i = 0; i < spec.r - 1; ++i) {
        out.v_sets[i] = detect::largest_capped_clique(g, relabelled, i, rest, spec.n);
        out.a_set = out.a_set.unioned(out.v_sets[i]);
    }
    out.b_set = everyone.minus(out.a_set);
    return out;
}

EdgeColouring general_recolouring(const Graph& g, const EdgeColouring& c,
                                  const ProblemSpec& spec) {
    if (spec.n < 3 || spec.r < 3)
        throw PreconditionError("general recolouring needs n, r >= 3");
    if (spec.n == 3 && spec.r == 3)
        throw PreconditionError("the (3,3) case is handled by the dedicated driver");
    if (!c.is_total_on(g)) throw PreconditionError("colouring is not total on the graph");
    if (auto pair = first_mono_pair(g, c, spec.n))
        throw PreconditionError("input already has a monochromatic K_" + std::to_string(spec.n) +
                                "+K_" + std::to_string(spec.n - 1) + " in colour " +
                                std::to_string(pair->colour));

    PartitionResult part = build_partition(g, c, spec);
    EdgeColouring relabelled = c.permuted_colours(part.relabel);

    // K_n-free (r-1)-colouring of a complete graph covering A, pulled back
    // through the ascending enumeration of A
    const auto& a = part.a_set.elements();
    EdgeColouring base = avoid::kn_free_complete_colouring(static_cast<int>(a.size()),
                                                           spec.r - 1, spec.n);
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(a.size()); ++i) pos[a[i]] = i;

    EdgeColouring result(g.vertex_count(), spec.r);
    for (auto [u, v] : g.edges()) {
        bool ua = pos[u] >= 0, va = pos[v] >= 0;
        if (ua && va)
            result.set(u, v, base.colour(pos[u], pos[v]));
        else if (ua || va)
            result.set(u, v, spec.r - 1);
        else
            result.set(u, v, relabelled.colour(u, v));
    }

    if (auto bad = first_mono_clique(g, result, spec.n))
        throw InternalError("recoloured graph still has a monochromatic K_" +
                            std::to_string(spec.n) + " in colour " +
                            std::to_string(bad->colour));

    return result.permuted_colours(part.inverse_relabel());
}

EdgeColouring chvatal_recolouring(const Graph& g, const std::vector<int>& proper_classes,
                                  const avoid::KnownColouring& base) {
    if (static_cast<int>(proper_classes.size()) != g.vertex_count())
        throw PreconditionError("class list size does not match the graph");
    int k = 0;
    for (int cls : proper_classes) {
        if (cls < 0) throw PreconditionError("negative class index");
        k = std::max(k, cls + 1);
    }
    if (k > base.graph.vertex_count())
        throw PreconditionError("proper colouring uses " + std::to_string(k) +
                                " classes but the base colouring has only " +
                                std::to_string(base.graph.vertex_count()) + " vertices");
    for (auto [u, v] : g.edges())
        if (proper_classes[u] == proper_classes[v])
            throw PreconditionError("vertex colouring is not proper on edge " +
                                    std::to_string(u) + "-" + std::to_string(v));
    // replay the base guarantee before relying on it
    if (!scan::no_mono_clique(base.graph, base.colouring, base.guarantee_clique,
                              scan::Mode::parallel))
        throw PreconditionError("base colouring fails its clique-freeness guarantee");

    return EdgeColouring::build(g, base.colouring.colour_count(), [&](int u, int v) {
        return base.colouring.colour(proper_classes[u], proper_classes[v]);
    });
}

Obs2Result obs2_extract(const Graph& g, const EdgeColouring& c,
                        const std::array<CliqueWitness, 3>& triangles) {
    if (c.colour_count() != 3) throw PreconditionError("needs a 3-colouring");
    std::array<bool, 3> seen{};
    VertexSet core;
    for (const auto& t : triangles) {
        if (t.vertices.size() != 3 || !validate_witness(g, c, t))
            throw PreconditionError("invalid triangle witness");
        if (t.colour < 0 || t.colour >= 3 || seen[t.colour])
            throw PreconditionError("need one triangle per colour");
        seen[t.colour] = true;
        core = core.unioned(t.vertices);
    }

    // first edge entirely outside the triangle vertices
    for (auto [u, v] : g.edges()) {
        if (core.contains(u) || core.contains(v)) continue;
        int colour = c.colour(u, v);
        for (const auto& t : triangles) {
            if (t.colour == colour) {
                DisjointPairWitness w{colour, t.vertices, VertexSet{u, v}};
                if (!validate_witness(g, c, w))
                    throw InternalError("extracted pair failed replay");
                return {w, std::nullopt};
            }
        }
    }

    // no outside edge: every edge meets the <= 9 core vertices, so the
    // chromatic number is at most chi(core) + 1 <= 10
    auto induced = induced_subgraph(g, core);
    int chi_core = detect::chromatic_number(induced.graph, detect::SearchBudget{});
    return {std::nullopt, NoOutsideEdge{chi_core, chi_core + 1}};
}

EdgeColouring obs3_colouring(const Graph& g, const VertexSet& k_set) {
    if (k_set.size() != 6) throw PreconditionError("k_set must have exactly 6 vertices");
    if (!k_set.valid_for(g.vertex_count()))
        throw PreconditionError("k_set not contained in the graph");
    const auto& ks = k_set.elements();
    for (std::size_t i = 0; i < ks.size(); ++i)
        for (std::size_t j = i + 1; j < ks.size(); ++j)
            if (!g.has_edge(ks[i], ks[j]))
                throw PreconditionError("k_set does not induce a complete graph");

    VertexSet remainder = VertexSet::range(g.vertex_count()).minus(k_set);
    auto induced = induced_subgraph(g, remainder);
    if (!detect::is_triangle_free(induced.graph))
        throw PreconditionError("remainder after removing k_set is not triangle-free");

    constexpr int red = 0, blue = 1, yellow = 2;
    int v = ks[0]; // lexicographically smallest member
    std::vector<int> ring(ks.begin() + 1, ks.end());
    std::vector<int> ring_pos(g.vertex_count(), -1);
    for (int i = 0; i < 5; ++i) ring_pos[ring[i]] = i;
    std::vector<bool> in_k(g.vertex_count(), false);
    for (int x : ks) in_k[x] = true;

    return EdgeColouring::build(g, 3, [&](int a, int b) {
        bool ka = in_k[a], kb = in_k[b];
        if (ka && kb) {
            if (a == v || b == v) return yellow; // star of v inside the K_6
            int d = std::abs(ring_pos[a] - ring_pos[b]);
            return (d == 1 || d == 4) ? red : blue; // red 5-cycle, blue complement
        }
        if (!ka && !kb) return blue; // remainder is blue
        int k_end = ka ? a : b;
        return k_end == v ? red : yellow; // v-to-remainder red, rest yellow
    });
}

std::optional<VertexSet> find_disjoint_triangle(const Graph& g, const VertexSet& k_set) {
    VertexSet rest = VertexSet::range(g.vertex_count()).minus(k_set);
    return detect::find_clique(g, 3, rest);
}

const char* to_string(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::mono_pair_found: return "mono_pair_found";
        case OutcomeKind::ramsey_refuted: return "ramsey_refuted";
        case OutcomeKind::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

void add_step(EquivalenceOutcome& out, std::string action, std::string detail = {},
              std::string citation = {}) {
    out.trace.push_back({std::move(action), std::move(detail), std::move(citation)});
}

EquivalenceOutcome pair_found(EquivalenceOutcome out, const Graph& g, const EdgeColouring& c,
                              const DisjointPairWitness& w, const std::string& how) {
    if (!validate_witness(g, c, w)) throw InternalError("pair witness failed replay");
    out.kind = OutcomeKind::mono_pair_found;
    out.pair = w;
    add_step(out, "mono_pair_found",
             how + ": colour " + std::to_string(w.colour) + ", cliques " + set_text(w.big) +
                 " and " + set_text(w.small));
    return out;
}

EquivalenceOutcome refuted(EquivalenceOutcome out, const Graph& g, const EdgeColouring& c,
                           EdgeColouring refutation, int n, const std::string& how) {
    if (!refutation.is_total_on(g)) throw InternalError("refuting colouring is not total");
    if (!scan::no_mono_clique(g, refutation, n, scan::Mode::parallel))
        throw InternalError("refuting colouring failed replay");
    (void)c;
    out.kind = OutcomeKind::ramsey_refuted;
    out.refuting_colouring = std::move(refutation);
    add_step(out, "ramsey_refuted", how);
    return out;
}

// Combined colouring: the avoidance 2-colouring w of the union of colours
// {i, j} replaces those classes; the third class stays.
EdgeColouring combine_union_recolouring(const Graph& g, const EdgeColouring& c, int ci, int cj,
                                        int other, const EdgeColouring& w) {
    return EdgeColouring::build(g, 3, [&](int u, int v) {
        int col = c.colour(u, v);
        if (col == other) return other;
        return w.colour(u, v) == 0 ? ci : cj;
    });
}

// Used when every edge meets a 9-vertex core: the chromatic number is at
// most 10, so a proper vertex colouring lifts the 16-vertex triangle-free
// base into a refutation.
EquivalenceOutcome refute_by_lifting(EquivalenceOutcome out, const Graph& g,
                                     const EdgeColouring& c, const detect::SearchBudget& budget) {
    try {
        auto chroma = detect::chromatic_colouring(g, budget);
        EdgeColouring lifted =
            chvatal_recolouring(g, chroma.classes, avoid::known_colouring("gf16_triple"));
        return refuted(std::move(out), g, c, lifted, 3,
                       "low chromatic number admits a triangle-free 3-colouring");
    } catch (const BudgetError&) {
        add_step(out, "inconclusive", "chromatic-number search exhausted its budget");
        return out;
    }
}

} // namespace

EquivalenceOutcome case33_driver(const Graph& g, const EdgeColouring& c,
                                 const detect::SearchBudget& budget) {
    if (c.colour_count() != 3) throw PreconditionError("case (3,3) needs exactly 3 colours");
    if (!c.is_total_on(g)) throw PreconditionError("colouring is not total on the graph");

    EquivalenceOutcome out;

    // (a) an existing monochromatic K_3 + K_2 settles everything
    if (auto pair = first_mono_pair(g, c, 3))
        return pair_found(std::move(out), g, c, *pair, "present in the input colouring");

    // a colouring without any monochromatic triangle refutes by itself
    if (!first_mono_clique(g, c, 3)) {
        add_step(out, "no_mono_triangle", "input colouring has no monochromatic K_3");
        return refuted(std::move(out), g, c, c, 3, "input colouring is its own refutation");
    }

    // (b/c) decide 2-Ramseyness of the three pairwise unions
    struct UnionDecision {
        int ci, cj, other;
        Graph graph{0};
        avoid::ArrowingCertificate cert;
    };
    std::vector<UnionDecision> unions;
    for (auto [ci, cj, other] : {std::array{0, 1, 2}, std::array{0, 2, 1}, std::array{1, 2, 0}}) {
        UnionDecision d{ci, cj, other, Graph{0}, {}};
        d.graph = union_subgraph(g, c, {ci, cj});
        d.cert = avoid::decide_arrows(d.graph, 2, 3, avoid::Strategy::backtracking, budget);
        add_step(out, "union_arrowing_decision",
                 "colours {" + std::to_string(ci) + "," + std::to_string(cj) + "}: " +
                     avoid::to_string(d.cert.outcome) + " (K_3, 2 colours, " +
                     avoid::to_string(d.cert.method) + ")");
        unions.push_back(std::move(d));
    }

    auto arrowing = std::find_if(unions.begin(), unions.end(), [](const UnionDecision& d) {
        return d.cert.outcome == avoid::ArrowsOutcome::arrows;
    });

    if (arrowing == unions.end()) {
        if (std::any_of(unions.begin(), unions.end(), [](const UnionDecision& d) {
                return d.cert.outcome == avoid::ArrowsOutcome::inconclusive;
            })) {
            add_step(out, "inconclusive", "an arrowing decision exhausted its budget");
            return out;
        }
        // none arrows: each union can be recoloured triangle-free, forcing a
        // triangle in the remaining colour (else that recolouring refutes)
        std::array<std::optional<CliqueWitness>, 3> forced;
        for (const auto& d : unions) {
            auto tri = detect::find_mono_clique(g, c, d.other, 3,
                                                VertexSet::range(g.vertex_count()));
            if (!tri) {
                EdgeColouring combined =
                    combine_union_recolouring(g, c, d.ci, d.cj, d.other, *d.cert.witness);
                add_step(out, "recolouring_refutes",
                         "union {" + std::to_string(d.ci) + "," + std::to_string(d.cj) +
                             "} recoloured triangle-free and colour " + std::to_string(d.other) +
                             " has no triangle");
                return refuted(std::move(out), g, c, combined, 3,
                               "triangle-free recolouring of a union plus the untouched class");
            }
            forced[d.other] = tri;
            add_step(out, "forced_triangle",
                     "colour " + std::to_string(d.other) + " triangle " +
                         set_text(tri->vertices) + " (union of the other two colours does not arrow)");
        }
        auto res = obs2_extract(g, c, {*forced[0], *forced[1], *forced[2]});
        if (res.pair)
            return pair_found(std::move(out), g, c, *res.pair,
                              "edge outside the three forced triangles");
        add_step(out, "no_outside_edge",
                 "chromatic number at most " + std::to_string(res.diagnostic->chi_bound) +
                     "; lifting a triangle-free colouring through a proper vertex colouring");
        return refute_by_lifting(std::move(out), g, c, budget);
    }

    // (c) some union arrows K_3 in 2 colours
    const auto& d = *arrowing;
    auto k6 = detect::find_clique(d.graph, 6, VertexSet::range(g.vertex_count()));
    if (!k6) {
        // trusted result: that union also arrows the pair target, so the
        // input colouring restricted to it must hold a monochromatic pair —
        // which step (a) would have found already
        add_step(out, "trusted_lemma",
                 "union {" + std::to_string(d.ci) + "," + std::to_string(d.cj) +
                     "} arrows K_3 and has no K_6",
                 kTrustedLemmaBL);
        for (int colour : {d.ci, d.cj})
            if (auto pair = detect::find_mono_pair(g, c, colour, 3))
                return pair_found(std::move(out), g, c, *pair, "inside the arrowing union");
        add_step(out, "inconsistency",
                 "no monochromatic pair despite the trusted lemma: the arrowing decision "
                 "or the input data is unsound");
        return out; // inconclusive
    }

    // a K_6 inside the arrowing union: it must hold triangles of both union
    // colours (a same-coloured disjoint edge would have been a pair already)
    add_step(out, "k6_found", "K_6 " + set_text(*k6) + " inside union {" +
                                  std::to_string(d.ci) + "," + std::to_string(d.cj) + "}");
    std::optional<CliqueWitness> tri_i, tri_j;
    for (int colour : {d.ci, d.cj}) {
        auto tri = detect::find_mono_clique(g, c, colour, 3, *k6);
        if (colour == d.ci)
            tri_i = tri;
        else
            tri_j = tri;
    }
    if (!tri_i || !tri_j) {
        // R(3,3) = 6 forces a triangle in one colour; the other three
        // vertices then span the second colour unless a pair existed
        add_step(out, "inconsistency",
                 "K_6 without triangles in both union colours contradicts step (a)");
        return out;
    }

    auto disjoint = find_disjoint_triangle(g, *k6);
    if (!disjoint) {
        // the graph decomposes into the K_6 and a triangle-free remainder:
        // the explicit 3-colouring refutes
        add_step(out, "no_disjoint_triangle",
                 "no triangle avoids the K_6; explicit triangle-free colouring applies");
        EdgeColouring explicit_col = obs3_colouring(g, *k6);
        return refuted(std::move(out), g, c, explicit_col, 3,
                       "K_6-plus-triangle-free-remainder decomposition");
    }
    add_step(out, "disjoint_triangle", "triangle " + set_text(*disjoint) + " avoids the K_6");

    // an edge of that triangle in a union colour closes a pair with the
    // same-coloured triangle inside the K_6
    const auto& tv = disjoint->elements();
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int colour = c.colour(tv[i], tv[j]);
            if (colour == d.ci || colour == d.cj) {
                const auto& tri = colour == d.ci ? *tri_i : *tri_j;
                DisjointPairWitness w{colour, tri.vertices, VertexSet{tv[i], tv[j]}};
                return pair_found(std::move(out), g, c, w,
                                  "edge of the disjoint triangle matches a K_6 triangle");
            }
        }

    // otherwise the disjoint triangle is monochromatic in the third colour:
    // triangles in all three colours exist
    CliqueWitness third{d.other, *disjoint};
    if (!validate_witness(g, c, third)) {
        add_step(out, "inconsistency", "disjoint triangle is not monochromatic; unexpected");
        return out;
    }
    std::array<CliqueWitness, 3> all{};
    all[d.ci] = *tri_i;
    all[d.cj] = *tri_j;
    all[d.other] = third;
    add_step(out, "triangles_all_colours", "triangles found in all three colours");
    auto res = obs2_extract(g, c, {all[0], all[1], all[2]});
    if (res.pair)
        return pair_found(std::move(out), g, c, *res.pair, "edge outside the three triangles");
    add_step(out, "no_outside_edge",
             "chromatic number at most " + std::to_string(res.diagnostic->chi_bound) +
                 "; lifting a triangle-free colouring through a proper vertex colouring");
    return refute_by_lifting(std::move(out), g, c, budget);
}

EquivalenceOutcome theorem_check(const Graph& g, const EdgeColouring& c, const ProblemSpec& spec,
                                 const detect::SearchBudget& budget) {
    if (spec.n < 3 || spec.r < 3) throw PreconditionError("theorem check needs n, r >= 3");
    if (c.colour_count() != spec.r)
        throw PreconditionError("colouring colour count does not match the problem");
    if (!c.is_total_on(g)) throw PreconditionError("colouring is not total on the graph");

    EquivalenceOutcome out;
    if (auto pair = first_mono_pair(g, c, spec.n))
        return pair_found(std::move(out), g, c, *pair, "present in the input colouring");

    if (!first_mono_clique(g, c, spec.n)) {
        add_step(out, "no_mono_clique",
                 "input colouring has no monochromatic K_" + std::to_string(spec.n));
        return refuted(std::move(out), g, c, c, spec.n,
                       "input colouring is its own refutation");
    }

    if (spec.n == 3 && spec.r == 3) {
        add_step(out, "case_33", "dispatching to the three-colour triangle driver");
        auto inner = case33_driver(g, c, budget);
        out.kind = inner.kind;
        out.pair = inner.pair;
        out.refuting_colouring = inner.refuting_colouring;
        for (auto& step : inner.trace) out.trace.push_back(std::move(step));
        return out;
    }

    add_step(out, "general_recolouring",
             "monochromatic K_" + std::to_string(spec.n) +
                 " present but no monochromatic pair: rebuilding the colouring over the "
                 "A/B partition");
    EdgeColouring recoloured = general_recolouring(g, c, spec);
    return refuted(std::move(out), g, c, recoloured, spec.n,
                   "recoloured graph has no monochromatic K_" + std::to_string(spec.n));
}

} // namespace ramsey::equiv
