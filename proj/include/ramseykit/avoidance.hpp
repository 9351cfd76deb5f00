#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramseykit/cnf.hpp"
#include "ramseykit/detect.hpp"
#include "ramseykit/scan.hpp"

namespace ramsey::avoid {

using scan::AvoidTarget;

/// A complete-graph colouring with a verified guarantee: no monochromatic
/// K_{guarantee_clique} in any of its guarantee_colours colours.
struct KnownColouring {
    std::string name;
    Graph graph{0};
    EdgeColouring colouring;
    int guarantee_colours = 0;
    int guarantee_clique = 0;
};

/// Registry names: c5_pair, paley17, gf16_triple. Every entry is re-verified
/// by an exhaustive clique scan before being returned; a failing entry
/// raises RegistryError. Unknown names raise RegistryError too.
KnownColouring known_colouring(std::string_view name);
std::vector<std::string> known_colouring_names();

/// K_{m+n} from a (2, n)-guaranteed K_m: the n new vertices form a colour-0
/// clique and all new-old edges take colour 1. Output guarantee (2, n+1),
/// replay-verified before return.
KnownColouring two_colour_step_up(const KnownColouring& k);

/// K_{m+n} from an (r-1, n)-guaranteed K_m, n >= 3: new-old edges take the
/// fresh colour r-1; inside the new n-set, the star of its first vertex is
/// colour 0 and the rest colour 1. Output guarantee (r, n), replay-verified.
KnownColouring multicolour_step_up(const KnownColouring& k);

/// An r-colouring of K_m with no monochromatic K_n: registry restriction,
/// else a step-up chain from the registry, else backtracking search.
/// Replay-verified. Throws InfeasibleError when no colouring exists or the
/// search budget runs out.
EdgeColouring kn_free_complete_colouring(int m, int colours, int clique);

struct SearchOutcome {
    enum class Status { found, proven_absent, budget_exhausted };
    Status status = Status::proven_absent;
    std::optional<EdgeColouring> colouring;
    std::uint64_t nodes_used = 0;
};

/// Backtracking search for a colouring of g's edges with no monochromatic
/// target. Edge order follows the degeneracy order of the endpoints; a
/// colour is skipped as soon as it would complete a monochromatic target.
/// proven_absent means the search space was exhausted.
SearchOutcome search_avoiding_colouring(const Graph& g, int colours,
                                        const AvoidTarget& target,
                                        const detect::SearchBudget& budget);

enum class ArrowsOutcome { arrows, not_arrows, inconclusive };
enum class Method { exhaustive, backtracking, external_sat, trusted_lemma, registry };

const char* to_string(ArrowsOutcome o);
const char* to_string(Method m);

/// Replayable record of an arrowing decision: G arrows (K_n)_r iff every
/// r-colouring of G's edges has a monochromatic K_n.
struct ArrowingCertificate {
    int colours = 0;
    int clique = 0;
    ArrowsOutcome outcome = ArrowsOutcome::inconclusive;
    std::optional<EdgeColouring> witness; // avoiding colouring when not_arrows
    Method method = Method::backtracking;
    std::uint64_t budget_used = 0;
    std::string lemma_citation;
};

enum class Strategy { automatic, exhaustive, backtracking, external_sat };

/// Decides whether g arrows (K_n)_r. The exhaustive strategy enumerates the
/// full colouring space through the scan kernels; backtracking uses
/// search_avoiding_colouring. The automatic strategy first tries to witness
/// not_arrows by restricting a registry colouring, then falls back to
/// backtracking. Witnesses are replay-verified before the certificate is
/// returned.
ArrowingCertificate decide_arrows(const Graph& g, int colours, int clique,
                                  Strategy strategy, const detect::SearchBudget& budget);

/// Arrowing decision delegated to an external SAT solver's result for the
/// encode_arrowing CNF of (g, r, n). SAT models are decoded and
/// replay-verified; a model failing replay yields an inconclusive outcome.
ArrowingCertificate decide_arrows_external(const Graph& g, int colours, int clique,
                                           const cnf::SolverResult& result);

} // namespace ramsey::avoid
