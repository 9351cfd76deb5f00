#include <doctest.h>

#include <random>

#include "ramseykit/equivalence.hpp"
#include "ramseykit/errors.hpp"

#include "oracle.hpp"
#include "planted.hpp"

using namespace ramsey;

namespace {

EdgeColouring two_c5_colouring(const Graph& k5) {
    return EdgeColouring::build(k5, 2,
                                [](int u, int v) { return (v - u == 1 || v - u == 4) ? 0 : 1; });
}

} // namespace

TEST_CASE("build_partition on a monochromatic K_n") {
    int n = 4, r = 3;
    Graph g = complete_graph(4);
    EdgeColouring c = EdgeColouring::uniform(g, r, 1); // everything colour 1
    auto part = equiv::build_partition(g, c, ProblemSpec(n, r));

    CHECK(part.relabel[1] == r - 1); // witness colour moved to the end
    CHECK(part.v_sets[r - 1] == VertexSet{0, 1, 2, 3});
    CHECK(part.a_set == VertexSet{0, 1, 2, 3});
    CHECK(part.a_set.size() <= r * n);
    CHECK(part.b_set.empty());
}

TEST_CASE("build_partition singleton V_i and cap behaviour on a planted instance") {
    // K_4 in colour 2 on {0..3}, a colour-0 triangle on {4,5,6}, n=4, r=3
    int n = 4, r = 3;
    Graph g = complete_graph(8);
    EdgeColouring c = EdgeColouring::build(g, r, [](int u, int v) {
        if (v < 4) return 2;            // the planted K_4
        if (u >= 4 && v <= 6) return 0; // triangle on {4,5,6}
        return 1;
    });
    auto part = equiv::build_partition(g, c, ProblemSpec(n, r));
    CHECK(part.relabel == std::vector<int>{0, 1, 2}); // already last
    CHECK(part.v_sets[2] == VertexSet{0, 1, 2, 3});
    // V_0 is the colour-0 triangle (size 3 <= cap 4)
    CHECK(part.v_sets[0] == VertexSet{4, 5, 6});
    CHECK(part.a_set.size() <= r * n);
    CHECK(part.v_sets[2].size() == n);
}

TEST_CASE("build_partition without a monochromatic K_n is a precondition error") {
    Graph k5 = complete_graph(5);
    EdgeColouring c5s = two_c5_colouring(k5);
    EdgeColouring three(5, 3);
    for (auto [u, v] : k5.edges()) three.set(u, v, c5s.colour(u, v));
    CHECK_THROWS_AS(equiv::build_partition(k5, three, ProblemSpec(3, 3)), PreconditionError);
}

TEST_CASE("general_recolouring on planted instances leaves no monochromatic K_n") {
    std::mt19937_64 rng(71);
    for (auto [n, r] : {std::pair{3, 4}, {4, 3}}) {
        for (int round = 0; round < 12; ++round) {
            auto inst = planted::make_general(rng, n, r);
            EdgeColouring out =
                equiv::general_recolouring(inst.graph, inst.colouring, ProblemSpec(n, r));
            CHECK(out.is_total_on(inst.graph));
            CHECK(scan::no_mono_clique(inst.graph, out, n, scan::Mode::parallel));
        }
    }
}

TEST_CASE("general_recolouring colour-case structure matches the argument") {
    std::mt19937_64 rng(72);
    int n = 3, r = 4;
    auto inst = planted::make_general(rng, n, r);
    auto part = equiv::build_partition(inst.graph, inst.colouring, ProblemSpec(n, r));
    EdgeColouring out = equiv::general_recolouring(inst.graph, inst.colouring, ProblemSpec(n, r));
    EdgeColouring relabelled = out.permuted_colours(part.relabel);
    int last = r - 1;

    // the last colour induces no edge inside A
    const auto& a = part.a_set.elements();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (inst.graph.has_edge(a[i], a[j])) CHECK(relabelled.colour(a[i], a[j]) != last);

    // edges from A to B all carry the last colour
    for (int x : part.a_set)
        for (int y : part.b_set)
            if (inst.graph.has_edge(x, y)) CHECK(relabelled.colour(x, y) == last);

    // B-internal edges are unchanged
    EdgeColouring original_relabelled = inst.colouring.permuted_colours(part.relabel);
    for (int x : part.b_set)
        for (int y : part.b_set)
            if (x < y && inst.graph.has_edge(x, y))
                CHECK(relabelled.colour(x, y) == original_relabelled.colour(x, y));

    // no colour-i K_n in B for i < last (tested directly, as in the argument)
    for (int i = 0; i < last; ++i)
        CHECK(!detect::find_mono_clique(inst.graph, relabelled, i, n, part.b_set));
}

TEST_CASE("general_recolouring rejects bad inputs") {
    // a monochromatic pair is present
    Graph k7 = complete_graph(7);
    EdgeColouring mono = EdgeColouring::uniform(k7, 4, 0);
    CHECK_THROWS_AS(equiv::general_recolouring(k7, mono, ProblemSpec(3, 4)), PreconditionError);
    // the (3,3) case is out of scope here
    Graph g = complete_graph(5);
    EdgeColouring c = EdgeColouring::uniform(g, 3, 0);
    CHECK_THROWS_AS(equiv::general_recolouring(g, c, ProblemSpec(3, 3)), PreconditionError);
}

TEST_CASE("chvatal_recolouring lifts guarantees through proper colourings") {
    // C_5 with 3 classes against a 2-colouring of K_3 without mono K_3
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    avoid::KnownColouring base;
    base.name = "k3_two_colours";
    base.graph = complete_graph(3);
    base.colouring = EdgeColouring(3, 2);
    base.colouring.set(0, 1, 0);
    base.colouring.set(0, 2, 1);
    base.colouring.set(1, 2, 1);
    base.guarantee_colours = 2;
    base.guarantee_clique = 3;

    std::vector<int> classes{0, 1, 0, 1, 2};
    EdgeColouring out = equiv::chvatal_recolouring(c5, classes, base);
    CHECK(out.is_total_on(c5));
    CHECK(!oracle::mono_clique_exists(c5, out, 3));

    // improper vertex colouring rejected
    std::vector<int> improper{0, 0, 1, 2, 1};
    CHECK_THROWS_AS(equiv::chvatal_recolouring(c5, improper, base), PreconditionError);
}

TEST_CASE("chvatal_recolouring through gf16 on random low-chromatic graphs") {
    std::mt19937_64 rng(73);
    auto base = avoid::known_colouring("gf16_triple");
    for (int round = 0; round < 8; ++round) {
        Graph g = oracle::random_graph(rng, 12 + static_cast<int>(rng() % 6), 0.45);
        auto chroma = detect::chromatic_colouring(g, detect::SearchBudget{});
        REQUIRE(chroma.chi <= 16);
        EdgeColouring out = equiv::chvatal_recolouring(g, chroma.classes, base);
        CHECK(scan::no_mono_clique(g, out, 3, scan::Mode::parallel));
    }
}

TEST_CASE("chvatal_recolouring class-count overflow is the K_17 story") {
    Graph k17 = complete_graph(17);
    std::vector<int> classes(17);
    for (int i = 0; i < 17; ++i) classes[i] = i; // chi(K_17) = 17 > 16
    auto base = avoid::known_colouring("gf16_triple");
    CHECK_THROWS_AS(equiv::chvatal_recolouring(k17, classes, base), PreconditionError);
}

TEST_CASE("obs2_extract returns a replay-valid pair when an outside edge exists") {
    std::mt19937_64 rng(74);
    for (int round = 0; round < 15; ++round) {
        auto inst = planted::make_three_triangles(rng, true);
        std::array<CliqueWitness, 3> tris{CliqueWitness{0, {0, 1, 2}},
                                          CliqueWitness{1, {3, 4, 5}},
                                          CliqueWitness{2, {6, 7, 8}}};
        auto res = equiv::obs2_extract(inst.graph, inst.colouring, tris);
        REQUIRE(res.pair.has_value());
        CHECK(validate_witness(inst.graph, inst.colouring, *res.pair));
    }
}

TEST_CASE("obs2_extract without an outside edge reports the chromatic bound") {
    std::mt19937_64 rng(75);
    auto inst = planted::make_three_triangles(rng, false);
    std::array<CliqueWitness, 3> tris{CliqueWitness{0, {0, 1, 2}}, CliqueWitness{1, {3, 4, 5}},
                                      CliqueWitness{2, {6, 7, 8}}};
    auto res = equiv::obs2_extract(inst.graph, inst.colouring, tris);
    CHECK(!res.pair.has_value());
    REQUIRE(res.diagnostic.has_value());
    CHECK(res.diagnostic->chi_bound <= 10);
    CHECK(res.diagnostic->chi_core == 3); // three disjoint triangles
}

TEST_CASE("obs2_extract validates its witnesses") {
    std::mt19937_64 rng(76);
    auto inst = planted::make_three_triangles(rng, true);
    std::array<CliqueWitness, 3> wrong_colour{CliqueWitness{1, {0, 1, 2}},
                                              CliqueWitness{0, {3, 4, 5}},
                                              CliqueWitness{2, {6, 7, 8}}};
    CHECK_THROWS_AS(equiv::obs2_extract(inst.graph, inst.colouring, wrong_colour),
                    PreconditionError);
    std::array<CliqueWitness, 3> duplicated{CliqueWitness{0, {0, 1, 2}},
                                            CliqueWitness{0, {0, 1, 2}},
                                            CliqueWitness{2, {6, 7, 8}}};
    CHECK_THROWS_AS(equiv::obs2_extract(inst.graph, inst.colouring, duplicated),
                    PreconditionError);
}

TEST_CASE("obs3_colouring on K_6 exactly matches the stated structure") {
    Graph k6 = complete_graph(6);
    EdgeColouring out = equiv::obs3_colouring(k6, VertexSet::range(6));
    CHECK(out.is_total_on(k6));
    CHECK(!oracle::mono_clique_exists(k6, out, 3));
    // star of vertex 0 is yellow (colour 2)
    for (int v = 1; v < 6; ++v) CHECK(out.colour(0, v) == 2);
    // the rest splits into a red and a blue 5-cycle
    for (int colour : {0, 1}) {
        Graph cls = colour_class(k6, out, colour);
        CHECK(cls.edge_count() == 5);
        for (int v = 1; v < 6; ++v) CHECK(cls.degree(v) == 2);
    }
}

TEST_CASE("obs3_colouring over random triangle-free remainders") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 20; ++round) {
        Graph g = planted::make_k6_plus_remainder(rng, round % 3);
        auto induced =
            induced_subgraph(g, VertexSet::range(g.vertex_count()).minus(VertexSet::range(6)));
        REQUIRE(oracle::triangle_free(induced.graph));
        EdgeColouring out = equiv::obs3_colouring(g, VertexSet::range(6));
        CHECK(!oracle::mono_clique_exists(g, out, 3));
    }
}

TEST_CASE("obs3_colouring precondition failures") {
    // remainder holds a triangle: exactly the situation the argument excludes
    std::vector<Edge> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) edges.emplace_back(u, v);
    edges.insert(edges.end(), {{6, 7}, {7, 8}, {6, 8}});
    Graph g = Graph::from_edges(9, edges);
    CHECK_THROWS_AS(equiv::obs3_colouring(g, VertexSet::range(6)), PreconditionError);

    // k_set not a clique
    Graph sparse = Graph::from_edges(7, {{0, 1}, {2, 3}, {4, 5}});
    CHECK_THROWS_AS(equiv::obs3_colouring(sparse, VertexSet::range(6)), PreconditionError);
}

TEST_CASE("find_disjoint_triangle") {
    std::vector<Edge> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) edges.emplace_back(u, v);
    edges.insert(edges.end(), {{6, 7}, {7, 8}, {6, 8}});
    Graph with = Graph::from_edges(9, edges);
    CHECK(equiv::find_disjoint_triangle(with, VertexSet::range(6)) == VertexSet{6, 7, 8});

    CHECK(!equiv::find_disjoint_triangle(complete_graph(6), VertexSet::range(6)).has_value());
    CHECK(equiv::find_disjoint_triangle(complete_graph(9), VertexSet::range(6)) ==
          VertexSet{6, 7, 8});
}

TEST_CASE("case33_driver returns an existing pair") {
    std::mt19937_64 rng(78);
    for (int round = 0; round < 8; ++round) {
        auto inst = planted::make_pair33(rng);
        auto outcome = equiv::case33_driver(inst.graph, inst.colouring, detect::SearchBudget{});
        CHECK(outcome.kind == equiv::OutcomeKind::mono_pair_found);
        REQUIRE(outcome.pair.has_value());
        CHECK(validate_witness(inst.graph, inst.colouring, *outcome.pair));
    }
}

TEST_CASE("case33_driver refutes on the triangle-free registry colouring") {
    auto gf = avoid::known_colouring("gf16_triple");
    auto outcome = equiv::case33_driver(gf.graph, gf.colouring, detect::SearchBudget{});
    CHECK(outcome.kind == equiv::OutcomeKind::ramsey_refuted);
    REQUIRE(outcome.refuting_colouring.has_value());
    CHECK(scan::no_mono_clique(gf.graph, *outcome.refuting_colouring, 3, scan::Mode::parallel));
}

TEST_CASE("case33_driver ends in a verified outcome on three-triangle instances") {
    std::mt19937_64 rng(79);
    int pair_outcomes = 0;
    for (int round = 0; round < 10; ++round) {
        auto inst = planted::make_three_triangles(rng, true);
        auto outcome = equiv::case33_driver(inst.graph, inst.colouring, detect::SearchBudget{});
        if (outcome.kind == equiv::OutcomeKind::mono_pair_found) {
            ++pair_outcomes;
            CHECK(validate_witness(inst.graph, inst.colouring, *outcome.pair));
        } else {
            // these small instances never arrow, so the only other exit is a
            // refutation by recolouring
            CHECK(outcome.kind == equiv::OutcomeKind::ramsey_refuted);
            REQUIRE(outcome.refuting_colouring.has_value());
            CHECK(scan::no_mono_clique(inst.graph, *outcome.refuting_colouring, 3,
                                       scan::Mode::parallel));
        }
    }
    CHECK(pair_outcomes > 0);
}

namespace {

bool trace_has(const equiv::EquivalenceOutcome& outcome, const std::string& action) {
    for (const auto& step : outcome.trace)
        if (step.action == action) return true;
    return false;
}

// 2-colouring of K_6 with a monochromatic triangle but no monochromatic
// K_3 + K_2, widened to three colours
EdgeColouring k6_pair_avoiding_three_colours() {
    auto res = avoid::search_avoiding_colouring(complete_graph(6), 2, avoid::AvoidTarget::pair(3),
                                                detect::SearchBudget{});
    REQUIRE(res.status == avoid::SearchOutcome::Status::found);
    EdgeColouring three(6, 3);
    for (auto [u, v] : complete_graph(6).edges()) three.set(u, v, res.colouring->colour(u, v));
    return three;
}

} // namespace

TEST_CASE("case33_driver: arrowing union with no disjoint triangle refutes explicitly") {
    Graph k6 = complete_graph(6);
    EdgeColouring c = k6_pair_avoiding_three_colours();
    auto outcome = equiv::case33_driver(k6, c, detect::SearchBudget{});
    CHECK(outcome.kind == equiv::OutcomeKind::ramsey_refuted);
    CHECK(trace_has(outcome, "k6_found"));
    CHECK(trace_has(outcome, "no_disjoint_triangle"));
    REQUIRE(outcome.refuting_colouring.has_value());
    CHECK(scan::no_mono_clique(k6, *outcome.refuting_colouring, 3, scan::Mode::parallel));
}

TEST_CASE("case33_driver: disjoint third-colour triangle routes through the chromatic lift") {
    EdgeColouring base = k6_pair_avoiding_three_colours();
    std::vector<Edge> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) edges.emplace_back(u, v);
    edges.insert(edges.end(), {{6, 7}, {7, 8}, {6, 8}});
    Graph g = Graph::from_edges(9, edges);
    EdgeColouring c(9, 3);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) c.set(u, v, base.colour(u, v));
    c.set(6, 7, 2);
    c.set(7, 8, 2);
    c.set(6, 8, 2);

    auto outcome = equiv::case33_driver(g, c, detect::SearchBudget{});
    CHECK(outcome.kind == equiv::OutcomeKind::ramsey_refuted);
    CHECK(trace_has(outcome, "disjoint_triangle"));
    CHECK(trace_has(outcome, "triangles_all_colours"));
    CHECK(trace_has(outcome, "no_outside_edge"));
    REQUIRE(outcome.refuting_colouring.has_value());
    CHECK(scan::no_mono_clique(g, *outcome.refuting_colouring, 3, scan::Mode::parallel));
}

TEST_CASE("case33_driver: union recolouring refutes when a colour has no triangle") {
    // triangle in colour 2 plus a disjoint 5-cycle split over colours 0/1
    std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}};
    Graph g = Graph::from_edges(8, edges);
    EdgeColouring c(8, 3);
    c.set(0, 1, 2);
    c.set(0, 2, 2);
    c.set(1, 2, 2);
    int flip = 0;
    for (auto [u, v] : std::vector<Edge>{{3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}})
        c.set(u, v, flip ^= 1);

    auto outcome = equiv::case33_driver(g, c, detect::SearchBudget{});
    CHECK(outcome.kind == equiv::OutcomeKind::ramsey_refuted);
    CHECK(trace_has(outcome, "recolouring_refutes"));
    REQUIRE(outcome.refuting_colouring.has_value());
    CHECK(scan::no_mono_clique(g, *outcome.refuting_colouring, 3, scan::Mode::parallel));
}

TEST_CASE("case33_driver: triangles in all colours with no outside edge lift through gf16") {
    std::mt19937_64 rng(82);
    auto inst = planted::make_three_triangles(rng, false);
    auto outcome = equiv::case33_driver(inst.graph, inst.colouring, detect::SearchBudget{});
    CHECK(outcome.kind == equiv::OutcomeKind::ramsey_refuted);
    CHECK(trace_has(outcome, "forced_triangle"));
    CHECK(trace_has(outcome, "no_outside_edge"));
    REQUIRE(outcome.refuting_colouring.has_value());
    CHECK(scan::no_mono_clique(inst.graph, *outcome.refuting_colouring, 3, scan::Mode::parallel));
}

TEST_CASE("case33_driver: budget exhaustion on a union decision is inconclusive") {
    std::mt19937_64 rng(83);
    auto inst = planted::make_three_triangles(rng, false);
    auto outcome = equiv::case33_driver(inst.graph, inst.colouring, detect::SearchBudget{1, 0});
    CHECK(outcome.kind == equiv::OutcomeKind::inconclusive);
    CHECK(!outcome.pair.has_value());
    CHECK(!outcome.refuting_colouring.has_value());
}

TEST_CASE("theorem_check dispatches and embeds verified outcomes") {
    // (a) mono pair present: monochromatic K_7
    Graph k7 = complete_graph(7);
    EdgeColouring mono = EdgeColouring::uniform(k7, 3, 1);
    auto pair_outcome = equiv::theorem_check(k7, mono, ProblemSpec(3, 3), detect::SearchBudget{});
    CHECK(pair_outcome.kind == equiv::OutcomeKind::mono_pair_found);
    REQUIRE(pair_outcome.pair.has_value());
    CHECK(validate_witness(k7, mono, *pair_outcome.pair));

    // (b) no mono K_n: the input colouring refutes
    auto gf = avoid::known_colouring("gf16_triple");
    auto refute_outcome =
        equiv::theorem_check(gf.graph, gf.colouring, ProblemSpec(3, 3), detect::SearchBudget{});
    CHECK(refute_outcome.kind == equiv::OutcomeKind::ramsey_refuted);
    CHECK(*refute_outcome.refuting_colouring == gf.colouring);

    // (c) general case: planted instances end as verified refutations
    std::mt19937_64 rng(80);
    for (auto [n, r] : {std::pair{3, 4}, {4, 3}}) {
        auto inst = planted::make_general(rng, n, r);
        auto outcome = equiv::theorem_check(inst.graph, inst.colouring, ProblemSpec(n, r),
                                            detect::SearchBudget{});
        CHECK(outcome.kind == equiv::OutcomeKind::ramsey_refuted);
        REQUIRE(outcome.refuting_colouring.has_value());
        CHECK(scan::no_mono_clique(inst.graph, *outcome.refuting_colouring, n,
                                   scan::Mode::parallel));
        CHECK(!outcome.trace.empty());
    }
}

TEST_CASE("theorem_check outcomes never embed invalid witnesses (fuzz)") {
    std::mt19937_64 rng(81);
    for (int round = 0; round < 25; ++round) {
        int n = 8 + static_cast<int>(rng() % 5);
        Graph g = oracle::random_graph(rng, n, 0.5);
        EdgeColouring c = oracle::random_colouring(rng, g, 3);
        auto outcome = equiv::theorem_check(g, c, ProblemSpec(3, 3), detect::SearchBudget{});
        if (outcome.pair) CHECK(validate_witness(g, c, *outcome.pair));
        if (outcome.refuting_colouring) {
            CHECK(outcome.refuting_colouring->is_total_on(g));
            CHECK(scan::no_mono_clique(g, *outcome.refuting_colouring, 3, scan::Mode::parallel));
        }
        CHECK((outcome.pair.has_value() || outcome.refuting_colouring.has_value() ||
               outcome.kind == equiv::OutcomeKind::inconclusive));
    }
}
