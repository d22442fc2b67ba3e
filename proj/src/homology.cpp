#include "lscat/homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace lscat {

int BitVec::lowest_set() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return (int)(i * 64) + std::countr_zero(w_[i]);
    return -1;
}

std::vector<int> BitVec::set_bits() const {
    std::vector<int> out;
    for (size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t w = w_[i];
        while (w) {
            out.push_back((int)(i * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

void Mod2Span::reduce(BitVec& v) const {
    for (const auto& b : basis_) {
        int p = b.lowest_set();
        if (p >= 0 && v.test(p)) v ^= b;
    }
}

bool Mod2Span::add(BitVec v) {
    reduce(v);
    if (!v.any()) return false;
    basis_.push_back(std::move(v));
    std::sort(basis_.begin(), basis_.end(),
              [](const BitVec& a, const BitVec& b) { return a.lowest_set() < b.lowest_set(); });
    return true;
}

bool Mod2Span::contains(BitVec v) const {
    reduce(v);
    return !v.any();
}

EdgeSpace::EdgeSpace(const SimplicialComplex& k) : edges_(k.simplices(1)) {}

int EdgeSpace::index_of(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    Simplex e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return (int)(it - edges_.begin());
}

BitVec EdgeSpace::triangle_boundary(const Simplex& t) const {
    BitVec b = zero();
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int e = index_of(t[i], t[j]);
            if (e < 0) throw Error("triangle edge missing from complex");
            b.flip(e);
        }
    return b;
}

bool EdgeSpace::is_cycle(const BitVec& chain, int vertex_count) const {
    std::vector<int> deg(vertex_count, 0);
    for (int e : chain.set_bits()) {
        ++deg[edges_[e][0]];
        ++deg[edges_[e][1]];
    }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

std::vector<BitVec> cycle_basis(const EdgeSpace& es, const std::vector<int>& sub,
                                int vertex_count) {
    // spanning forest with per-vertex root chains; a closing edge yields
    // the fundamental cycle chain(u) ^ chain(v) ^ {e}
    std::vector<int> root(vertex_count);
    std::iota(root.begin(), root.end(), 0);
    std::vector<BitVec> to_root(vertex_count, es.zero());
    auto find = [&](int x) {
        while (root[x] != x) x = root[x];
        return x;
    };

    std::vector<BitVec> cycles;
    for (int e : sub) {
        VertexId u = es.edges()[e][0], v = es.edges()[e][1];
        int ru = find(u), rv = find(v);
        if (ru == rv) {
            BitVec cyc = to_root[u];
            cyc ^= to_root[v];
            cyc.flip(e);
            cycles.push_back(std::move(cyc));
        } else {
            // re-root rv's block onto ru's; small graphs, so a scan is fine
            BitVec bridge = to_root[v];
            bridge.flip(e);
            bridge ^= to_root[u]; // chain from rv to ru
            for (int w = 0; w < vertex_count; ++w) {
                if (find(w) == rv) {
                    to_root[w] ^= bridge;
                }
            }
            root[rv] = ru;
        }
    }
    return cycles;
}

int h1_rank_mod2(const SimplicialComplex& k) {
    int v = k.vertex_count();
    long e = (long)k.simplices(1).size();
    int c = k.component_count();
    long z1 = e - v + c;

    EdgeSpace es(k);
    Mod2Span boundaries;
    for (const auto& t : k.simplices(2)) boundaries.add(es.triangle_boundary(t));
    return (int)(z1 - boundaries.rank());
}

namespace {

BitVec chain_from_label_edges(const std::vector<LabelEdge>& z, const EdgeSpace& es,
                              const SimplicialComplex& k) {
    BitVec chain = es.zero();
    for (const auto& [a, b] : z) {
        int e = es.index_of(k.require(a), k.require(b));
        if (e < 0) throw Error("edge not in complex: " + a + " " + b);
        chain.flip(e);
    }
    return chain;
}

} // namespace

bool cycle_is_killable(const std::vector<LabelEdge>& z,
                       const std::vector<std::vector<Label>>& pool,
                       const SimplicialComplex& k) {
    EdgeSpace es(k);
    BitVec chain = chain_from_label_edges(z, es, k);
    if (!es.is_cycle(chain, k.vertex_count())) throw Error("z is not a cycle");

    Mod2Span span;
    for (const auto& tl : pool) {
        Simplex t = k.simplex_from_labels(tl);
        if (t.size() != 3 || !k.has_simplex(t)) throw Error("pool member is not a triangle of the complex");
        span.add(es.triangle_boundary(t));
    }
    return span.contains(chain);
}

std::vector<std::vector<LabelEdge>> h1_generators_mod2(const SimplicialComplex& k) {
    EdgeSpace es(k);
    std::vector<int> all_edges(es.edge_count());
    std::iota(all_edges.begin(), all_edges.end(), 0);
    auto cycles = cycle_basis(es, all_edges, k.vertex_count());

    Mod2Span reducer;
    for (const auto& t : k.simplices(2)) reducer.add(es.triangle_boundary(t));

    std::vector<std::vector<LabelEdge>> gens;
    for (const auto& cyc : cycles) {
        if (reducer.add(cyc)) {
            std::vector<LabelEdge> g;
            for (int e : cyc.set_bits())
                g.push_back({k.label(es.edges()[e][0]), k.label(es.edges()[e][1])});
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

} // namespace lscat
