#pragma once

#include "lscat/complex.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace lscat {

/// Fixed-width bit vector used for Z/2 chain arithmetic.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }
    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void flip(int i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

    BitVec& operator^=(const BitVec& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    /// Index of the lowest set bit, or -1.
    int lowest_set() const;
    std::vector<int> set_bits() const;
    bool operator==(const BitVec&) const = default;

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Incrementally maintained Z/2 row space with pivot reduction.
class Mod2Span {
public:
    /// Reduces v against the basis; if a nonzero residue remains it is
    /// adopted as a new basis vector. Returns true iff v was independent.
    bool add(BitVec v);
    /// True iff v lies in the span.
    bool contains(BitVec v) const;
    int rank() const { return static_cast<int>(basis_.size()); }

private:
    void reduce(BitVec& v) const;
    std::vector<BitVec> basis_; // kept sorted by pivot
};

/// Edge indexing of one complex: 1-simplices in lexicographic order.
/// Chains of edges are BitVecs over this index.
class EdgeSpace {
public:
    explicit EdgeSpace(const SimplicialComplex& k);

    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Simplex>& edges() const { return edges_; }
    int index_of(VertexId u, VertexId v) const; // -1 if absent
    BitVec zero() const { return BitVec(edge_count()); }
    /// Boundary of the triangle {a,b,c} as an edge chain.
    BitVec triangle_boundary(const Simplex& t) const;
    /// True iff every vertex meets an even number of chain edges.
    bool is_cycle(const BitVec& chain, int vertex_count) const;

private:
    std::vector<Simplex> edges_;
};

/// Fundamental cycles of the subgraph given by edge indices `sub` (a
/// basis of its Z/2 cycle space), computed from a deterministic spanning
/// forest.
std::vector<BitVec> cycle_basis(const EdgeSpace& es, const std::vector<int>& sub,
                                int vertex_count);

/// dim H_1(k; Z/2) = dim ker boundary_1 - rank boundary_2.
int h1_rank_mod2(const SimplicialComplex& k);

/// True iff z lies in the span of the boundaries of the pool triangles.
/// z must be a 1-cycle of k and the pool must consist of triangles of k.
using LabelEdge = std::array<Label, 2>;
bool cycle_is_killable(const std::vector<LabelEdge>& z,
                       const std::vector<std::vector<Label>>& pool,
                       const SimplicialComplex& k);

/// Cycles whose classes form a basis of H_1(k; Z/2).
std::vector<std::vector<LabelEdge>> h1_generators_mod2(const SimplicialComplex& k);

} // namespace lscat
