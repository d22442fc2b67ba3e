#pragma once

#include "lscat/category.hpp"
#include "lscat/complex.hpp"
#include "lscat/reconstruct.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lscat {

/// Extends k by a cone-with-solid-tetrahedra gadget: a new vertex "a"
/// joined to (0,0) and the three column-2 vertices, the triangles they
/// span with a, and the three solid tetrahedra {a,(0,0),(2,i),(2,j)}.
/// The new vertex is dominated by (0,0), so the result strongly
/// collapses back to k in one step.
SimplicialComplex build_M(const SimplicialComplex& k);

/// The two-piece strongly collapsible cover of M: A is generated by the
/// three tetrahedra together with the three column-minus-2 cone
/// triangles; B by every other facet of M plus the three triangles
/// {a,(2,i),(2,j)}.
std::pair<SimplicialComplex, SimplicialComplex> build_m_cover(const SimplicialComplex& m);

struct PipelineOptions {
    unsigned seed = 0;
    long state_cap = kDefaultStateCap;
    int cover_attempts = 400;
    long forest_cap = kForestCapPerLeaf;
};

/// End-to-end verification report for one input complex: category gap
/// checks P1..P8, each pass/fail/indeterminate, plus the certificates
/// that future runs can re-verify.
struct PaperReport {
    SimplicialComplex k;

    struct Check {
        std::string id;
        std::string claim;
        std::string status; // "pass" | "fail" | "indeterminate"
        std::string detail;
    };
    std::vector<Check> checks;
    std::string overall; // "pass" | "fail" | "indeterminate"

    std::optional<CoverCertificate> categorical_cover;   // P3
    std::optional<ImpossibilityCertificate> no_two_cover; // P4
    std::optional<CoverCertificate> geometric_cover;     // P5
    std::optional<SimplicialComplex> m;                  // P6
    std::optional<CollapseSequence> m_collapse;          // P6
    std::optional<CoverCertificate> m_cover;             // P7
};

/// Two-phase reconstruction-and-verification: searches the column-local
/// candidate pool first, falling back to the full pool when no
/// restricted solution passes verify_paper. Solutions failing the claim
/// checks are skipped.
struct ExampleSearchResult {
    SearchOutcome heuristic;            // restricted-pool search
    std::optional<SearchOutcome> full;  // fallback, when it ran
    int solutions_tried = 0;
    std::optional<SimplicialComplex> k; // first claim-passing solution
    std::optional<PaperReport> report;  // its report

    std::vector<SimplicialComplex> all_solutions() const;
};

ExampleSearchResult find_verified_example(int solution_limit = 8,
                                          long node_budget = 200'000'000,
                                          const PipelineOptions& opt = {});

/// Runs the checks:
///   P1 the complex is not strongly collapsible;
///   P2 its first Z/2 Betti number is 2;
///   P3 a verified categorical 2-cover exists (scat = 1);
///   P4 no two strongly collapsible pieces cover it (gscat >= 2);
///   P5 a verified strongly collapsible 3-cover exists (gscat = 2);
///   P6 the extension M collapses to it in one step;
///   P7 M has a verified strongly collapsible 2-cover and is not itself
///      strongly collapsible (gscat M = 1);
///   P8 therefore the collapse M -> K strictly increases gscat.
/// Indeterminate sub-results mark the report indeterminate, never pass.
PaperReport verify_paper(const SimplicialComplex& k, const PipelineOptions& opt = {});

} // namespace lscat
