#pragma once

#include "lscat/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lscat {

/// One elementary strong collapse: at the state where the step applies,
/// every facet containing `removed` also contains `dominator`.
struct CollapseStep {
    Label removed;
    Label dominator;

    bool operator==(const CollapseStep&) const = default;
};

/// A checkable certificate of a strong collapse from `start` to `end`.
/// Replaying the steps from `start` (each deletes `removed` and all
/// simplices containing it) must yield exactly `end`.
struct CollapseSequence {
    SimplicialComplex start;
    std::vector<CollapseStep> steps;
    SimplicialComplex end;
};

/// All vertices v != u such that every facet containing u contains v.
std::vector<Label> dominators_of(const SimplicialComplex& k, const Label& u);

bool is_dominated(const SimplicialComplex& k, const Label& u);

/// Tie-breaking policy for core computation. Lex is the default and the
/// deterministic choice everywhere; ReverseLex exists so tests can check
/// that cores of different collapse orders are isomorphic.
enum class TieBreak { Lex, ReverseLex };

/// Repeatedly deletes a dominated vertex until none exists. The terminal
/// complex has no dominated vertex; the certificate replays the deletions.
CollapseSequence core(const SimplicialComplex& k, TieBreak tb = TieBreak::Lex);

/// True iff core(k) is a single vertex; the witness is the collapse
/// certificate down to that vertex. A single vertex is strongly
/// collapsible with zero steps.
struct CollapsibilityResult {
    bool collapsible;
    CollapseSequence witness; // meaningful only when collapsible
};
CollapsibilityResult is_strongly_collapsible(const SimplicialComplex& k);

/// Checks each step's domination condition at its intermediate state and
/// that the replay ends at c.end. On failure returns false and a
/// diagnostic naming the first failing step.
struct VerifyResult {
    bool ok;
    std::string diagnostic;
};
VerifyResult verify_collapse_sequence(const CollapseSequence& c);

/// Backtracking search for a strong collapse from m down to exactly k,
/// deleting only dominated vertices outside V(k). Returns the first
/// sequence in deterministic order, or nullopt when the space is
/// exhausted.
std::optional<CollapseSequence> find_collapse_to(const SimplicialComplex& m,
                                                 const SimplicialComplex& k);

} // namespace lscat
