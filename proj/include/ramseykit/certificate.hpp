#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramseykit/avoidance.hpp"
#include "ramseykit/equivalence.hpp"

namespace ramsey::cert {

inline constexpr const char* kSchemaVersion = "1";

/// Description of one input file as recorded in a certificate.
struct InputRecord {
    std::string path;
    std::string digest; // fnv1a64 of the file bytes
    int vertices = 0;
    int edges = 0;
};

nlohmann::json colouring_to_json(const Graph& g, const EdgeColouring& c);
EdgeColouring colouring_from_json(const nlohmann::json& j, const Graph& g);

nlohmann::json pair_to_json(const DisjointPairWitness& w);
DisjointPairWitness pair_from_json(const nlohmann::json& j);

/// Certificate for an `arrows` decision. Deterministic: no timestamps.
nlohmann::json arrows_document(const InputRecord& input, const Graph& g,
                               const avoid::ArrowingCertificate& cert,
                               const std::string& strategy,
                               const detect::SearchBudget& budget);

/// Certificate for a `theorem-check` run. Embeds the input colouring so the
/// pair witness can be replayed from the document alone.
nlohmann::json theorem_document(const InputRecord& input, const Graph& g,
                                const EdgeColouring& input_colouring,
                                const ProblemSpec& spec,
                                const equiv::EquivalenceOutcome& outcome,
                                const detect::SearchBudget& budget);

struct VerifyReport {
    bool ok = false;
    bool schema_ok = false;
    std::vector<std::string> issues;
};

/// Independent replay of a certificate against a graph file's contents:
/// digests must match and every embedded witness must validate. Structural
/// problems (unknown schema version or command, missing fields) set
/// schema_ok = false.
VerifyReport verify_document(const nlohmann::json& doc, const Graph& g,
                             const std::string& graph_file_digest);

} // namespace ramsey::cert
