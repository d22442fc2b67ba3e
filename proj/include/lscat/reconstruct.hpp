#pragma once

#include "lscat/complex.hpp"
#include "lscat/homology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lscat {

/// Requirements on the link structure around a pinch vertex and on the
/// surface obtained by splitting it apart.
struct PinchConstraint {
    Label vertex;
    int cycle_count = 2;          // link must be this many disjoint cycles
    bool unfold_connected = true; // the split surface must be connected
    int unfold_vertex_count = 0;  // 0 = unchecked
    int unfold_euler = 0;         // checked only with unfold_vertex_count
};

/// Declarative description of the complexes a search should enumerate.
/// Only pure 2-dimensional targets are supported.
struct ConstraintSet {
    std::vector<Label> vertex_labels; // every label must be used
    FVector f_vector_target;
    bool edge_two_regular = false;   // every edge lies in exactly two triangles
    bool single_cycle_links = false; // link of each non-pinch vertex is one cycle
    std::optional<PinchConstraint> pinch;
    std::vector<std::vector<Label>> required_triangles;
    std::vector<std::vector<Label>> forbidden_triangles;
    std::vector<LabelEdge> required_edges; // extended with required-triangle edges
    std::optional<int> h1_target;
    /// Restricts the candidate triangle pool (speed heuristic); the
    /// default pool is every triple of vertex labels.
    std::optional<std::vector<std::vector<Label>>> candidate_pool;

    /// The fixed constraint data pinning down the bundled pinched-sphere
    /// complex: 15 grid labels, f-vector (15,45,30), pseudo-surface
    /// links with a 3-cycle pinch at (0,0) unfolding to a 17-vertex
    /// sphere, the required cone triangles and loop edges, the four
    /// forbidden loop fillings, and first Z/2 Betti number 2.
    static ConstraintSet bundled_example();

    /// Throws on internal contradictions (e.g. a required triangle that
    /// is also forbidden).
    void validate() const;
};

struct SearchOutcome {
    std::vector<SimplicialComplex> solutions;
    bool exhausted = false; // the whole space was searched
    long nodes = 0;
};

/// Complete backtracking search for complexes satisfying the constraint
/// set, in deterministic order, stopping after solution_limit solutions
/// or node_budget nodes. Every returned solution has been re-verified by
/// audit_constraints.
SearchOutcome search_K(const ConstraintSet& cs, int solution_limit = 4,
                       long node_budget = 200'000'000);

/// Speed heuristic for grid-labeled instances: the candidate pool
/// restricted to triangles whose non-pinch vertices span adjacent grid
/// columns (|k - k'| <= 1). Complete search over the full pool remains
/// the fallback when no restricted solution survives verification.
std::vector<std::vector<Label>> column_local_pool(const ConstraintSet& cs);

/// Splits a pinch vertex v (whose link is c >= 2 disjoint cycles) into
/// v#1..v#c, each new vertex taking the stars of one link cycle.
SimplicialComplex unfold_pinch(const SimplicialComplex& k, const Label& v);

/// Independent re-verification of a solution against the constraints;
/// deliberately separate from the search code.
struct AuditReport {
    bool ok = false;
    std::vector<std::string> failures;
};

AuditReport audit_constraints(const SimplicialComplex& k, const ConstraintSet& cs);

} // namespace lscat
