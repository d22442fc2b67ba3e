#pragma once

#include "lscat/collapse.hpp"
#include "lscat/complex.hpp"
#include "lscat/contiguity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lscat {

enum class CoverMode { Categorical, StronglyCollapsible };

std::string to_string(CoverMode m);

/// A cover of an ambient complex by subcomplexes, each of which is meant
/// to pass the mode's test. The union of the pieces (as simplex sets)
/// must equal the ambient complex.
struct Cover {
    SimplicialComplex ambient;
    std::vector<SimplicialComplex> pieces;
    CoverMode mode;
};

/// Replayable per-piece evidence. Strongly collapsible pieces carry a
/// collapse to a point; categorical pieces carry the collapse to their
/// core plus a contiguity chain from the core's inclusion to a constant.
struct PieceWitness {
    CollapseSequence collapse;
    std::vector<AssignmentTable> chain;  // empty in strongly-collapsible mode
    std::optional<Label> witness_vertex; // constant's value, categorical mode
};

struct CoverCertificate {
    Cover cover;
    std::vector<PieceWitness> piece_witnesses;
};

/// Checks that the pieces are subcomplexes whose union is the ambient
/// complex and that each piece passes the mode's test. An Unknown from a
/// capped categorical test yields verdict Unknown, never No.
struct VerifyCoverResult {
    Tri verdict = Tri::No;
    std::optional<CoverCertificate> certificate; // set when verdict == Yes
    std::string diagnosis;                       // set when verdict != Yes
};

VerifyCoverResult verify_cover(const SimplicialComplex& k,
                               const std::vector<SimplicialComplex>& pieces, CoverMode mode,
                               long state_cap = kDefaultStateCap);

/// Standalone check of a stored certificate: replays the recorded
/// witnesses (collapses and contiguity chains) against the cover
/// conditions without re-running any search.
VerifyResult replay_cover_certificate(const CoverCertificate& cert);

/// scat k == 0 iff k itself is categorical iff k is strongly collapsible.
bool scat_is_zero(const SimplicialComplex& k);

/// Budget for the heuristic cover search. Results are deterministic
/// given (seed, attempts); the search is complete in neither direction:
/// nullopt means the budget ran out, not that no cover exists.
struct SearchBudget {
    int attempts = 400;
    unsigned seed = 0;
    long state_cap = kDefaultStateCap;
};

/// Heuristic search for a cover with `piece_count` pieces: seeds pieces
/// from facets, grows them greedily over the facet adjacency graph while
/// they stay strongly collapsible, and checks the leftover piece against
/// the mode. Every returned cover has been re-verified.
std::optional<Cover> search_cover(const SimplicialComplex& k, int piece_count, CoverMode mode,
                                  const SearchBudget& budget = {});

/// Reproducible trace establishing that the exhaustive pruned search for
/// a two-piece strongly collapsible cover rejected every candidate.
struct ImpossibilityCertificate {
    SimplicialComplex ambient;
    std::vector<std::vector<Label>> facet_order; // the DFS assignment order
    long nodes = 0;
    long pruned_unkillable_cycle = 0;
    long leaves = 0;
    long leaves_refuted = 0;
    struct LeafRefutation {
        std::string assignment; // 'A'/'B' per facet in facet_order
        std::string reason;
    };
    std::vector<LeafRefutation> leaf_refutations;

    /// Stable one-line summary of the trace.
    std::string digest() const;
};

/// Exact decision of "does k admit a cover by two strongly collapsible
/// subcomplexes". Requires k pure-dimensional (every vertex and edge then
/// lies in a facet). Resource means a leaf exceeded the forest cap.
struct TwoCoverOutcome {
    enum class Kind { Cover, Impossible, Resource } kind;
    std::optional<CoverCertificate> cover;
    std::optional<ImpossibilityCertificate> impossibility;
    std::string resource_note;
};

inline constexpr long kForestCapPerLeaf = 1'000'000;

TwoCoverOutcome two_cover_prover(const SimplicialComplex& k,
                                 long forest_cap = kForestCapPerLeaf);

/// Small-instance oracle for the prover: plain enumeration over all
/// facet assignments and all forest augmentations, no pruning. Hard cap
/// of 7 facets.
TwoCoverOutcome brute_force_two_cover(const SimplicialComplex& k);

} // namespace lscat
