#pragma once

#include <cstdint>
#include <optional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lscat {

/// Error raised by all library operations on invalid input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Vertex labels are opaque strings compared by exact byte equality.
using Label = std::string;

/// A simplex inside a fixed complex, stored as a sorted duplicate-free
/// list of vertex ids. Never empty; dimension = size - 1.
using VertexId = int;
using Simplex = std::vector<VertexId>;

/// Bitmask over vertex ids of one complex (hence the 64-vertex limit).
using VertexMask = std::uint64_t;

VertexMask mask_of(const Simplex& s);
Simplex simplex_of(VertexMask m);

/// Simplex counts by dimension. counts[d] = number of d-simplices.
struct FVector {
    std::vector<long> counts;

    bool operator==(const FVector&) const = default;
    long total() const;
    std::string str() const;
};

/// An immutable finite abstract simplicial complex.
///
/// Stored by its facets (containment-maximal simplices) over an ordered
/// label table; the full downward closure is materialized on
/// construction since every complex in this library is small. All
/// operations return new complexes, so values can be shared freely
/// across threads.
class SimplicialComplex {
public:
    /// Placeholder with no vertices; every real complex comes from
    /// from_facets, which rejects empty input.
    SimplicialComplex() = default;

    /// Builds the downward closure of the given facet list. Input sets
    /// contained in other input sets are absorbed silently.
    static SimplicialComplex from_facets(const std::vector<std::vector<Label>>& facet_list);

    // -- vertex table ------------------------------------------------

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<Label>& labels() const { return labels_; }
    const Label& label(VertexId v) const { return labels_.at(v); }
    /// Id of a label, or nullopt if the label does not occur.
    std::optional<VertexId> id_of(const Label& l) const;
    /// Id of a label; throws "unknown vertex" if absent.
    VertexId require(const Label& l) const;

    // -- simplex access ----------------------------------------------

    const std::vector<Simplex>& facets() const { return facets_; }
    const std::vector<VertexMask>& facet_masks() const { return facet_masks_; }
    int dim() const;
    FVector f_vector() const;
    long simplex_count() const;
    /// All simplices of dimension d, sorted lexicographically.
    const std::vector<Simplex>& simplices(int d) const;
    std::vector<Simplex> all_simplices() const;

    bool has_vertex(const Label& l) const { return id_of(l).has_value(); }
    bool has_simplex(const Simplex& s) const;
    bool has_simplex_labels(const std::vector<Label>& ls) const;
    /// True iff the vertex set m is contained in some facet.
    bool face_of_some_facet(VertexMask m) const;

    std::vector<Label> simplex_labels(const Simplex& s) const;
    /// Translates labels to a sorted id simplex; throws on unknown labels.
    Simplex simplex_from_labels(const std::vector<Label>& ls) const;

    /// Facet list as sorted label lists, in canonical order. Two
    /// complexes are equal iff these agree.
    std::vector<std::vector<Label>> facet_labels() const;
    bool operator==(const SimplicialComplex& other) const;

    // -- combinatorial operations ------------------------------------

    /// Link of v: all simplices s with v not in s and s + {v} in the complex.
    /// May be empty (isolated vertex); throws "unknown vertex" otherwise.
    SimplicialComplex link(const Label& v) const;

    /// Downward closure of a set of simplices of this complex.
    /// The generating set must be non-empty and consist of simplices of
    /// this complex.
    SimplicialComplex generated_subcomplex(const std::vector<std::vector<Label>>& gens) const;

    /// All simplices not containing u. Throws on unknown vertex and on
    /// deleting the last vertex.
    SimplicialComplex delete_vertex(const Label& u) const;

    /// True iff every simplex of this complex is a simplex of other.
    bool is_subcomplex_of(const SimplicialComplex& other) const;

    /// Number of connected components of the 1-skeleton (counting
    /// isolated vertices).
    int component_count() const;

private:
    void build_closure();

    std::vector<Label> labels_;                      // sorted, unique
    std::vector<Simplex> facets_;                    // canonical order
    std::vector<VertexMask> facet_masks_;            // aligned with facets_
    std::vector<std::vector<Simplex>> by_dim_;       // closure, sorted per dim
};

/// Label bijection inducing a facet bijection, or nullopt. Sound and
/// complete backtracking with degree/f-vector pruning.
std::optional<std::map<Label, Label>> are_isomorphic(const SimplicialComplex& a,
                                                     const SimplicialComplex& b);

} // namespace lscat
