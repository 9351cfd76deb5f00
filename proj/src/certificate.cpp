#include "ramseykit/certificate.hpp"

#include "ramseykit/errors.hpp"
#include "ramseykit/scan.hpp"

namespace ramsey::cert {

using nlohmann::json;

namespace {

json input_to_json(const InputRecord& r) {
    return json{{"path", r.path}, {"fnv1a64", r.digest}, {"vertices", r.vertices},
                {"edges", r.edges}};
}

json vertex_set_to_json(const VertexSet& vs) { return json(vs.elements()); }

json trace_to_json(const std::vector<equiv::TraceStep>& steps) {
    json arr = json::array();
    for (const auto& s : steps) {
        json step{{"action", s.action}};
        if (!s.detail.empty()) step["detail"] = s.detail;
        if (!s.citation.empty()) step["citation"] = s.citation;
        arr.push_back(std::move(step));
    }
    return arr;
}

json budget_to_json(const detect::SearchBudget& b) {
    return json{{"max_nodes", b.max_nodes}, {"seed", b.deterministic_seed}};
}

} // namespace

json colouring_to_json(const Graph& g, const EdgeColouring& c) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v, c.colour(u, v)}));
    return json{{"colours", c.colour_count()}, {"edges", std::move(edges)}};
}

EdgeColouring colouring_from_json(const json& j, const Graph& g) {
    if (!j.contains("colours") || !j.contains("edges"))
        throw ParseError("colouring document misses fields");
    EdgeColouring c(g.vertex_count(), j.at("colours").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw ParseError("bad colouring edge entry");
        c.set(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
    }
    return c;
}

json pair_to_json(const DisjointPairWitness& w) {
    return json{{"colour", w.colour},
                {"big", vertex_set_to_json(w.big)},
                {"small", vertex_set_to_json(w.small)}};
}

DisjointPairWitness pair_from_json(const json& j) {
    DisjointPairWitness w;
    w.colour = j.at("colour").get<int>();
    w.big = VertexSet(j.at("big").get<std::vector<int>>());
    w.small = VertexSet(j.at("small").get<std::vector<int>>());
    return w;
}

json arrows_document(const InputRecord& input, const Graph& g,
                     const avoid::ArrowingCertificate& cert, const std::string& strategy,
                     const detect::SearchBudget& budget) {
    json doc{{"schema_version", kSchemaVersion},
             {"command", "arrows"},
             {"inputs", {{"graph", input_to_json(input)}}},
             {"parameters",
              {{"colours", cert.colours},
               {"clique", cert.clique},
               {"strategy", strategy},
               {"budget", budget_to_json(budget)}}},
             {"outcome",
              {{"decision", avoid::to_string(cert.outcome)},
               {"method", avoid::to_string(cert.method)},
               {"budget_used", cert.budget_used}}}};
    if (cert.witness) doc["outcome"]["witness"] = colouring_to_json(g, *cert.witness);
    if (!cert.lemma_citation.empty()) doc["outcome"]["lemma_citation"] = cert.lemma_citation;
    return doc;
}

json theorem_document(const InputRecord& input, const Graph& g,
                      const EdgeColouring& input_colouring, const ProblemSpec& spec,
                      const equiv::EquivalenceOutcome& outcome,
                      const detect::SearchBudget& budget) {
    json doc{{"schema_version", kSchemaVersion},
             {"command", "theorem-check"},
             {"inputs",
              {{"graph", input_to_json(input)},
               {"colouring", colouring_to_json(g, input_colouring)}}},
             {"parameters",
              {{"clique", spec.n}, {"colours", spec.r}, {"budget", budget_to_json(budget)}}},
             {"outcome", {{"kind", equiv::to_string(outcome.kind)}}},
             {"trace", trace_to_json(outcome.trace)}};
    if (outcome.pair) doc["outcome"]["pair"] = pair_to_json(*outcome.pair);
    if (outcome.refuting_colouring)
        doc["outcome"]["refuting_colouring"] = colouring_to_json(g, *outcome.refuting_colouring);
    return doc;
}

namespace {

void check_witness_colouring(const json& outcome, const char* key, const Graph& g, int clique,
                             VerifyReport& report) {
    if (!outcome.contains(key)) return;
    EdgeColouring c = colouring_from_json(outcome.at(key), g);
    if (!c.is_total_on(g)) {
        report.issues.push_back(std::string(key) + " is not a total colouring of the graph");
        return;
    }
    if (auto w = scan::find_mono_clique_any(g, c, clique, scan::Mode::parallel))
        report.issues.push_back(std::string(key) + " contains a monochromatic K_" +
                                std::to_string(clique) + " in colour " +
                                std::to_string(w->colour));
}

} // namespace

VerifyReport verify_document(const json& doc, const Graph& g,
                             const std::string& graph_file_digest) {
    VerifyReport report;
    report.schema_ok = false;

    if (!doc.is_object() || !doc.contains("schema_version") || !doc.contains("command") ||
        !doc.contains("inputs") || !doc.contains("parameters") || !doc.contains("outcome")) {
        report.issues.push_back("document misses required fields");
        return report;
    }
    if (doc.at("schema_version").get<std::string>() != kSchemaVersion) {
        report.issues.push_back("unsupported schema version");
        return report;
    }
    std::string command = doc.at("command").get<std::string>();
    if (command != "arrows" && command != "theorem-check") {
        report.issues.push_back("unknown command: " + command);
        return report;
    }
    report.schema_ok = true;

    try {
        const json& graph_input = doc.at("inputs").at("graph");
        if (graph_input.at("fnv1a64").get<std::string>() != graph_file_digest)
            report.issues.push_back("graph file digest does not match the certificate");
        if (graph_input.at("vertices").get<int>() != g.vertex_count() ||
            graph_input.at("edges").get<int>() != g.edge_count())
            report.issues.push_back("graph shape does not match the certificate");

        const json& outcome = doc.at("outcome");
        int clique = doc.at("parameters").at("clique").get<int>();

        if (command == "arrows") {
            std::string decision = outcome.at("decision").get<std::string>();
            if (decision == "not_arrows") {
                if (!outcome.contains("witness"))
                    report.issues.push_back("not_arrows certificate carries no witness");
                else
                    check_witness_colouring(outcome, "witness", g, clique, report);
            }
        } else {
            EdgeColouring input_col =
                colouring_from_json(doc.at("inputs").at("colouring"), g);
            if (!input_col.is_total_on(g))
                report.issues.push_back("embedded input colouring is not total on the graph");
            std::string kind = outcome.at("kind").get<std::string>();
            if (kind == "mono_pair_found") {
                if (!outcome.contains("pair")) {
                    report.issues.push_back("pair outcome carries no pair witness");
                } else {
                    DisjointPairWitness w = pair_from_json(outcome.at("pair"));
                    if (w.big.size() != clique)
                        report.issues.push_back("pair witness has the wrong clique size");
                    if (!validate_witness(g, input_col, w))
                        report.issues.push_back("pair witness fails replay validation");
                }
            } else if (kind == "ramsey_refuted") {
                if (!outcome.contains("refuting_colouring"))
                    report.issues.push_back("refutation carries no colouring");
                else
                    check_witness_colouring(outcome, "refuting_colouring", g, clique, report);
            }
        }
    } catch (const json::exception& e) {
        report.schema_ok = false;
        report.issues.push_back(std::string("malformed document: ") + e.what());
    } catch (const Error& e) {
        report.issues.push_back(e.what());
    }

    report.ok = report.schema_ok && report.issues.empty();
    return report;
}

} // namespace ramsey::cert
