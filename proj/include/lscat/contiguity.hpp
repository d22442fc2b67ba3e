#pragma once

#include "lscat/collapse.hpp"
#include "lscat/complex.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lscat {

/// Three-valued search verdict. Unknown means a state cap was hit and is
/// never conflated with No.
enum class Tri { Yes, No, Unknown };

/// A simplicial map: a vertex assignment under which the image of every
/// simplex of the source is a simplex of the target.
class SimplicialMap {
public:
    SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                  const std::map<Label, Label>& assignment);

    static SimplicialMap identity(const SimplicialComplex& k);
    static SimplicialMap constant(const SimplicialComplex& source,
                                  const SimplicialComplex& target, const Label& v);
    /// Inclusion of a subcomplex u into k.
    static SimplicialMap inclusion(const SimplicialComplex& u, const SimplicialComplex& k);

    const SimplicialComplex& source() const { return source_; }
    const SimplicialComplex& target() const { return target_; }
    /// Image id of a source vertex id.
    VertexId apply(VertexId v) const { return assignment_[v]; }
    Label apply_label(const Label& l) const;
    const std::vector<VertexId>& assignment() const { return assignment_; }
    std::map<Label, Label> assignment_labels() const;

    bool operator==(const SimplicialMap& o) const;

private:
    SimplicialMap() = default;
    friend SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

    SimplicialComplex source_, target_;
    std::vector<VertexId> assignment_; // indexed by source vertex id
};

/// g after f; requires f.target == g.source.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// True iff for every simplex s of the shared source, f(s) union g(s) is
/// a simplex of the target. Checking facets alone suffices since unions
/// over faces are subsets of unions over facets.
bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g);

/// Witness chain of vertex-assignment tables, consecutive entries
/// contiguous, from f's assignment to g's.
using AssignmentTable = std::map<Label, Label>;

struct ClassSearchResult {
    Tri verdict = Tri::Unknown;
    std::vector<AssignmentTable> chain; // nonempty iff verdict == Yes
    long visited = 0;
};

inline constexpr long kDefaultStateCap = 10'000'000;

/// Breadth-first search over all simplicial maps source -> target with
/// contiguity as adjacency, from f towards g. Yes returns the witness
/// chain; No means f's component was exhausted without meeting g.
ClassSearchResult same_contiguity_class(const SimplicialMap& f, const SimplicialMap& g,
                                        long state_cap = kDefaultStateCap);

/// Searches f's contiguity component for any map contiguous to a
/// constant; used for the Definition-4 style test without collapsing
/// first. The final constant is appended to the chain.
ClassSearchResult reaches_constant(const SimplicialMap& f, long state_cap = kDefaultStateCap);

/// Categorical-subcomplex test: collapses u to its core u' and decides by
/// BFS whether the inclusion u' -> k lies in the contiguity class of a
/// constant map (equivalent for u, since the collapse retraction composes
/// within contiguity classes).
struct CategoricalResult {
    Tri verdict = Tri::Unknown;
    CollapseSequence collapse;           // u down to its core
    std::vector<AssignmentTable> chain;  // inclusion of the core ... constant
    std::optional<Label> witness_vertex; // the constant's value when Yes
    long visited = 0;
};

CategoricalResult is_categorical(const SimplicialComplex& u, const SimplicialComplex& k,
                                 long state_cap = kDefaultStateCap);

} // namespace lscat
