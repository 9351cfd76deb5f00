#include "ramseykit/avoidance.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ramseykit/errors.hpp"

namespace ramsey::avoid {

namespace {

void verify_guarantee_or_throw(const KnownColouring& k, const char* context) {
    if (!k.colouring.is_total_on(k.graph))
        throw RegistryError(std::string(context) + ": colouring is not total on " + k.name);
    if (auto w = scan::find_mono_clique_any(k.graph, k.colouring, k.guarantee_clique,
                                            scan::Mode::parallel)) {
        throw RegistryError(std::string(context) + ": " + k.name + " has a monochromatic K_" +
                            std::to_string(k.guarantee_clique) + " in colour " +
                            std::to_string(w->colour));
    }
}

KnownColouring make_c5_pair() {
    // K_5 split into two 5-cycles: consecutive pairs red, the rest blue
    Graph g = Graph::complete(5);
    EdgeColouring c = EdgeColouring::build(g, 2, [](int u, int v) {
        int d = v - u;
        return (d == 1 || d == 4) ? 0 : 1;
    });
    return {"c5_pair", std::move(g), std::move(c), 2, 3};
}

KnownColouring make_paley17() {
    // colour by quadratic residuosity of the difference mod 17
    std::array<bool, 17> residue{};
    for (int x = 1; x < 17; ++x) residue[(x * x) % 17] = true;
    Graph g = Graph::complete(17);
    EdgeColouring c = EdgeColouring::build(
        g, 2, [&residue](int u, int v) { return residue[(v - u + 17) % 17] ? 0 : 1; });
    return {"paley17", std::move(g), std::move(c), 2, 4};
}

KnownColouring make_gf16_triple() {
    // GF(16) as GF(2)[x]/(x^4 + x + 1); the multiplicative group is cyclic
    // of order 15 and the cubic residues form its index-3 subgroup. Colour
    // of {u, v} is the coset of u xor v, i.e. discrete log mod 3.
    std::array<int, 16> log{};
    int value = 1;
    for (int e = 0; e < 15; ++e) {
        log[value] = e;
        value <<= 1;
        if (value & 16) value = (value & 15) ^ 3; // reduce by x^4 = x + 1
    }
    Graph g = Graph::complete(16);
    EdgeColouring c =
        EdgeColouring::build(g, 3, [&log](int u, int v) { return log[u ^ v] % 3; });
    return {"gf16_triple", std::move(g), std::move(c), 3, 3};
}

} // namespace

std::vector<std::string> known_colouring_names() { return {"c5_pair", "paley17", "gf16_triple"}; }

KnownColouring known_colouring(std::string_view name) {
    KnownColouring k;
    if (name == "c5_pair")
        k = make_c5_pair();
    else if (name == "paley17")
        k = make_paley17();
    else if (name == "gf16_triple")
        k = make_gf16_triple();
    else
        throw RegistryError("unknown colouring name: " + std::string(name));
    verify_guarantee_or_throw(k, "registry load");
    return k;
}

KnownColouring two_colour_step_up(const KnownColouring& k) {
    if (k.guarantee_colours != 2)
        throw PreconditionError("two-colour step-up needs a 2-colour guarantee");
    verify_guarantee_or_throw(k, "step-up input");

    int m = k.graph.vertex_count();
    int n = k.guarantee_clique;
    Graph g = Graph::complete(m + n);
    EdgeColouring c = EdgeColouring::build(g, 2, [&](int u, int v) {
        if (v < m) return k.colouring.colour(u, v); // old-old unchanged
        if (u >= m) return 0;                       // new-new: colour 0
        return 1;                                   // new-old: colour 1
    });

    KnownColouring out{k.name + "+step2", std::move(g), std::move(c), 2, n + 1};
    verify_guarantee_or_throw(out, "two-colour step-up output");
    return out;
}

KnownColouring multicolour_step_up(const KnownColouring& k) {
    if (k.guarantee_clique < 3)
        throw PreconditionError("multicolour step-up needs clique guarantee n >= 3");
    verify_guarantee_or_throw(k, "step-up input");

    int m = k.graph.vertex_count();
    int n = k.guarantee_clique;
    int r = k.guarantee_colours + 1;
    Graph g = Graph::complete(m + n);
    // inside the fresh n-set: star of its first vertex in colour 0, the rest
    // colour 1, so neither colour holds all of K_n there
    EdgeColouring c = EdgeColouring::build(g, r, [&](int u, int v) {
        if (v < m) return k.colouring.colour(u, v);
        if (u < m) return r - 1; // new-old: the fresh colour
        return u == m ? 0 : 1;
    });

    KnownColouring out{k.name + "+colour", std::move(g), std::move(c), r, n};
    verify_guarantee_or_throw(out, "multicolour step-up output");
    return out;
}

namespace {

// Largest known K_n-free r-colouring reachable from the registry by step-up
// chains, or nullopt when the registry covers no (r, n) chain.
std::optional<KnownColouring> best_known(int colours, int clique) {
    if (colours < 2 || clique < 3) return std::nullopt;
    KnownColouring base;
    if (colours == 2 && clique == 3) {
        base = known_colouring("c5_pair");
    } else if (clique == 3) {
        base = known_colouring("gf16_triple"); // (3, 3), 16 vertices
    } else {
        base = known_colouring("paley17"); // (2, 4), 17 vertices
        for (int target = 5; target <= clique; ++target) base = two_colour_step_up(base);
    }
    while (base.guarantee_colours < colours) base = multicolour_step_up(base);
    return base;
}

} // namespace

EdgeColouring kn_free_complete_colouring(int m, int colours, int clique) {
    if (m < 0) throw PreconditionError("negative vertex count");
    if (colours < 1) throw PreconditionError("need at least one colour");
    if (m < clique) return EdgeColouring::uniform(Graph::complete(m), colours, 0);

    if (auto chain = best_known(colours, clique); chain && chain->graph.vertex_count() >= m) {
        EdgeColouring c = chain->colouring.restricted_to_prefix(m);
        Graph g = Graph::complete(m);
        if (!scan::no_mono_clique(g, c, clique, scan::Mode::parallel))
            throw InternalError("restriction of a verified colouring failed replay");
        return c;
    }

    auto result = search_avoiding_colouring(Graph::complete(m), colours,
                                            AvoidTarget::clique(clique), detect::SearchBudget{});
    if (result.status == SearchOutcome::Status::found) return *result.colouring;
    throw InfeasibleError("no K_" + std::to_string(clique) + "-free " + std::to_string(colours) +
                          "-colouring of K_" + std::to_string(m) +
                          (result.status == SearchOutcome::Status::proven_absent
                               ? " exists"
                               : " found within budget"));
}

namespace {

std::vector<int> degeneracy_positions(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n), pos(n, -1);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        pos[best] = step;
        for (int u = g.neighbours(best).next(0); u >= 0; u = g.neighbours(best).next(u + 1))
            if (!removed[u]) --deg[u];
    }
    return pos;
}

struct AvoidanceSearch {
    const Graph& g;
    int colours;
    AvoidTarget target;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<Edge> order;
    EdgeColouring partial;
    std::vector<std::vector<Bits>> rows; // per colour, updated incrementally

    AvoidanceSearch(const Graph& graph, int r, const AvoidTarget& t, std::uint64_t budget)
        : g(graph), colours(r), target(t), max_nodes(budget),
          partial(graph.vertex_count(), r),
          rows(r, std::vector<Bits>(graph.vertex_count(), Bits(graph.vertex_count()))) {
        order = g.edges();
        auto pos = degeneracy_positions(g);
        std::stable_sort(order.begin(), order.end(), [&pos](const Edge& a, const Edge& b) {
            auto key = [&pos](const Edge& e) {
                return std::pair(std::max(pos[e.first], pos[e.second]),
                                 std::min(pos[e.first], pos[e.second]));
            };
            return key(a) < key(b);
        });
    }

    // would assigning colour c to (u, v) complete a monochromatic clique of
    // size `size` through that edge?
    bool completes_clique(int u, int v, int c, int size) {
        if (size <= 2) return true;
        Bits common = rows[c][u] & rows[c][v];
        return extend_clique(common, c, size - 2);
    }

    bool extend_clique(Bits candidates, int c, int need) {
        if (need == 0) return true;
        if (candidates.count() < need) return false;
        for (int w = candidates.next(0); w >= 0; w = candidates.next(w + 1)) {
            Bits next = candidates & rows[c][w];
            for (int x = next.next(0); x >= 0 && x <= w; x = next.next(x + 1)) next.reset(x);
            if (extend_clique(next, c, need - 1)) return true;
            candidates.reset(w);
        }
        return false;
    }

    // pair target: a monochromatic K_n with a disjoint K_{n-1} in colour c,
    // where the new edge (u, v) participates in one of the two parts
    bool completes_pair(int u, int v, int c) {
        int n = target.n;
        // collect cliques of size n that use edge (u, v), then search for a
        // disjoint (n-1)-clique; and symmetrically for size n-1
        return pair_with_edge(u, v, c, n, n - 1) || pair_with_edge(u, v, c, n - 1, n);
    }

    bool pair_with_edge(int u, int v, int c, int through_size, int other_size) {
        if (through_size < 2) return false;
        Bits common = rows[c][u] & rows[c][v];
        std::vector<int> members;
        return enumerate_through(common, c, through_size - 2, u, v, members, other_size);
    }

    bool enumerate_through(Bits candidates, int c, int need, int u, int v,
                           std::vector<int>& members, int other_size) {
        if (need == 0) {
            Bits forbidden(g.vertex_count());
            forbidden.set(u);
            forbidden.set(v);
            for (int w : members) forbidden.set(w);
            Bits everyone = Bits::full(g.vertex_count());
            everyone.subtract(forbidden);
            return exists_clique_avoiding(everyone, c, other_size);
        }
        for (int w = candidates.next(0); w >= 0; w = candidates.next(w + 1)) {
            members.push_back(w);
            Bits next = candidates & rows[c][w];
            if (enumerate_through(next, c, need - 1, u, v, members, other_size)) return true;
            members.pop_back();
            candidates.reset(w);
        }
        return false;
    }

    bool exists_clique_avoiding(Bits candidates, int c, int size) {
        if (size == 0) return true;
        return extend_clique(candidates, c, size);
    }

    bool blocked(int u, int v, int c) {
        if (target.kind == AvoidTarget::Kind::clique)
            return completes_clique(u, v, c, target.n);
        return completes_pair(u, v, c);
    }

    bool search(std::size_t at) {
        if (at == order.size()) return true;
        if (++nodes > max_nodes) {
            exhausted = true;
            return false;
        }
        auto [u, v] = order[at];
        for (int c = 0; c < colours; ++c) {
            if (blocked(u, v, c)) continue;
            rows[c][u].set(v);
            rows[c][v].set(u);
            partial.set(u, v, c);
            if (search(at + 1)) return true;
            rows[c][u].reset(v);
            rows[c][v].reset(u);
            partial.unset(u, v);
            if (exhausted) return false;
        }
        return false;
    }
};

} // namespace

SearchOutcome search_avoiding_colouring(const Graph& g, int colours, const AvoidTarget& target,
                                        const detect::SearchBudget& budget) {
    if (colours < 1) throw PreconditionError("need at least one colour");
    if (target.n < 2) throw PreconditionError("target needs n >= 2");

    AvoidanceSearch s(g, colours, target, budget.max_nodes);
    SearchOutcome out;
    if (s.search(0)) {
        if (!s.partial.is_total_on(g)) throw InternalError("search produced a partial colouring");
        if (!scan::colouring_avoids(g, s.partial, target))
            throw InternalError("avoidance search output failed replay");
        out.status = SearchOutcome::Status::found;
        out.colouring = s.partial;
    } else {
        out.status = s.exhausted ? SearchOutcome::Status::budget_exhausted
                                 : SearchOutcome::Status::proven_absent;
    }
    out.nodes_used = s.nodes;
    return out;
}

const char* to_string(ArrowsOutcome o) {
    switch (o) {
        case ArrowsOutcome::arrows: return "arrows";
        case ArrowsOutcome::not_arrows: return "not_arrows";
        case ArrowsOutcome::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(Method m) {
    switch (m) {
        case Method::exhaustive: return "exhaustive";
        case Method::backtracking: return "backtracking";
        case Method::external_sat: return "external_sat";
        case Method::trusted_lemma: return "trusted_lemma";
        case Method::registry: return "registry";
    }
    return "?";
}

ArrowingCertificate decide_arrows(const Graph& g, int colours, int clique, Strategy strategy,
                                  const detect::SearchBudget& budget) {
    ArrowingCertificate cert;
    cert.colours = colours;
    cert.clique = clique;

    if (strategy == Strategy::external_sat)
        throw PreconditionError("external strategy needs a solver result; use decide_arrows_external");

    if (strategy == Strategy::automatic) {
        // a registry colouring covering the vertex range restricts to an
        // avoidance witness on any subgraph
        if (g.vertex_count() < clique) {
            cert.outcome = ArrowsOutcome::not_arrows;
            cert.method = Method::registry;
            cert.witness = EdgeColouring::uniform(g, colours, 0);
            return cert;
        }
        if (auto chain = best_known(colours, clique);
            chain && chain->graph.vertex_count() >= g.vertex_count()) {
            EdgeColouring witness = EdgeColouring::build(
                g, colours, [&](int u, int v) { return chain->colouring.colour(u, v); });
            if (!scan::no_mono_clique(g, witness, clique, scan::Mode::parallel))
                throw InternalError("registry restriction failed replay");
            cert.outcome = ArrowsOutcome::not_arrows;
            cert.method = Method::registry;
            cert.witness = std::move(witness);
            return cert;
        }
        strategy = Strategy::backtracking;
    }

    if (strategy == Strategy::exhaustive) {
        cert.method = Method::exhaustive;
        auto res = scan::exhaustive_avoiding_colouring(g, colours, scan::AvoidTarget::clique(clique),
                                                       budget.max_nodes, scan::Mode::parallel);
        cert.budget_used = res.inspected;
        switch (res.status) {
            case scan::ExhaustiveResult::Status::found:
                cert.outcome = ArrowsOutcome::not_arrows;
                cert.witness = res.colouring;
                break;
            case scan::ExhaustiveResult::Status::absent:
                cert.outcome = ArrowsOutcome::arrows;
                break;
            case scan::ExhaustiveResult::Status::capped:
                cert.outcome = ArrowsOutcome::inconclusive;
                break;
        }
    } else {
        cert.method = Method::backtracking;
        auto res = search_avoiding_colouring(g, colours, AvoidTarget::clique(clique), budget);
        cert.budget_used = res.nodes_used;
        switch (res.status) {
            case SearchOutcome::Status::found:
                cert.outcome = ArrowsOutcome::not_arrows;
                cert.witness = res.colouring;
                break;
            case SearchOutcome::Status::proven_absent:
                cert.outcome = ArrowsOutcome::arrows;
                break;
            case SearchOutcome::Status::budget_exhausted:
                cert.outcome = ArrowsOutcome::inconclusive;
                break;
        }
    }

    if (cert.witness &&
        !scan::colouring_avoids(g, *cert.witness, scan::AvoidTarget::clique(clique)))
        throw InternalError("arrowing witness failed replay verification");
    return cert;
}

ArrowingCertificate decide_arrows_external(const Graph& g, int colours, int clique,
                                           const cnf::SolverResult& result) {
    ArrowingCertificate cert;
    cert.colours = colours;
    cert.clique = clique;
    cert.method = Method::external_sat;

    if (result.status == cnf::SolverResult::Status::unsat) {
        cert.outcome = ArrowsOutcome::arrows;
        return cert;
    }
    auto f = cnf::encode_arrowing(g, colours, clique);
    try {
        EdgeColouring witness = cnf::decode_model(f, result.true_literals, g);
        if (!scan::colouring_avoids(g, witness, scan::AvoidTarget::clique(clique)))
            throw ParseError("decoded model fails replay");
        cert.outcome = ArrowsOutcome::not_arrows;
        cert.witness = std::move(witness);
    } catch (const ParseError&) {
        // solver claimed SAT but the model does not replay: stay honest
        cert.outcome = ArrowsOutcome::inconclusive;
    }
    return cert;
}

} // namespace ramsey::avoid
