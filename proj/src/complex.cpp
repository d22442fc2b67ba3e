#include "lscat/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace lscat {

VertexMask mask_of(const Simplex& s) {
    VertexMask m = 0;
    for (VertexId v : s) m |= (VertexMask{1} << v);
    return m;
}

Simplex simplex_of(VertexMask m) {
    Simplex s;
    while (m) {
        int v = std::countr_zero(m);
        s.push_back(v);
        m &= m - 1;
    }
    return s;
}

long FVector::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0L);
}

std::string FVector::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < counts.size(); ++i) {
        if (i) os << ",";
        os << counts[i];
    }
    os << ")";
    return os.str();
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Label>>& facet_list) {
    if (facet_list.empty()) throw Error("empty complex");

    std::set<Label> label_set;
    for (const auto& f : facet_list) {
        if (f.empty()) throw Error("empty complex");
        std::set<Label> uniq(f.begin(), f.end());
        if (uniq.size() != f.size()) throw Error("degenerate simplex");
        label_set.insert(f.begin(), f.end());
    }
    if (label_set.size() > 64) throw Error("too many vertices (limit 64)");

    SimplicialComplex k;
    k.labels_.assign(label_set.begin(), label_set.end());

    std::set<Simplex> candidates;
    for (const auto& f : facet_list) {
        Simplex s;
        for (const auto& l : f) s.push_back(k.require(l));
        std::sort(s.begin(), s.end());
        candidates.insert(std::move(s));
    }
    // keep the containment-maximal input sets
    std::vector<Simplex> cand(candidates.begin(), candidates.end());
    std::vector<VertexMask> masks;
    masks.reserve(cand.size());
    for (const auto& s : cand) masks.push_back(mask_of(s));
    for (size_t i = 0; i < cand.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < cand.size() && maximal; ++j)
            if (i != j && (masks[i] & ~masks[j]) == 0 && masks[i] != masks[j]) maximal = false;
        if (maximal) {
            k.facets_.push_back(cand[i]);
            k.facet_masks_.push_back(masks[i]);
        }
    }
    k.build_closure();
    return k;
}

void SimplicialComplex::build_closure() {
    std::sort(facets_.begin(), facets_.end());
    facet_masks_.clear();
    for (const auto& f : facets_) facet_masks_.push_back(mask_of(f));

    std::set<VertexMask> seen;
    int d_max = 0;
    for (const auto& f : facets_) d_max = std::max<int>(d_max, (int)f.size() - 1);
    by_dim_.assign(d_max + 1, {});
    // enumerate all non-empty subsets of each facet
    for (VertexMask fm : facet_masks_) {
        for (VertexMask sub = fm; sub; sub = (sub - 1) & fm) {
            if (seen.insert(sub).second) {
                Simplex s = simplex_of(sub);
                by_dim_[s.size() - 1].push_back(std::move(s));
            }
        }
    }
    for (auto& level : by_dim_) std::sort(level.begin(), level.end());
}

std::optional<VertexId> SimplicialComplex::id_of(const Label& l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
}

VertexId SimplicialComplex::require(const Label& l) const {
    auto id = id_of(l);
    if (!id) throw Error("unknown vertex: " + l);
    return *id;
}

int SimplicialComplex::dim() const { return static_cast<int>(by_dim_.size()) - 1; }

FVector SimplicialComplex::f_vector() const {
    FVector f;
    for (const auto& level : by_dim_) f.counts.push_back((long)level.size());
    return f;
}

long SimplicialComplex::simplex_count() const { return f_vector().total(); }

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
    static const std::vector<Simplex> empty;
    if (d < 0 || d >= (int)by_dim_.size()) return empty;
    return by_dim_[d];
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
    std::vector<Simplex> out;
    for (const auto& level : by_dim_) out.insert(out.end(), level.begin(), level.end());
    return out;
}

bool SimplicialComplex::has_simplex(const Simplex& s) const {
    if (s.empty()) return false;
    int d = (int)s.size() - 1;
    if (d >= (int)by_dim_.size()) return false;
    return std::binary_search(by_dim_[d].begin(), by_dim_[d].end(), s);
}

bool SimplicialComplex::has_simplex_labels(const std::vector<Label>& ls) const {
    Simplex s;
    for (const auto& l : ls) {
        auto id = id_of(l);
        if (!id) return false;
        s.push_back(*id);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return has_simplex(s);
}

bool SimplicialComplex::face_of_some_facet(VertexMask m) const {
    for (VertexMask fm : facet_masks_)
        if ((m & ~fm) == 0) return true;
    return false;
}

std::vector<Label> SimplicialComplex::simplex_labels(const Simplex& s) const {
    std::vector<Label> out;
    out.reserve(s.size());
    for (VertexId v : s) out.push_back(label(v));
    return out;
}

Simplex SimplicialComplex::simplex_from_labels(const std::vector<Label>& ls) const {
    Simplex s;
    for (const auto& l : ls) s.push_back(require(l));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("degenerate simplex");
    return s;
}

std::vector<std::vector<Label>> SimplicialComplex::facet_labels() const {
    std::vector<std::vector<Label>> out;
    for (const auto& f : facets_) out.push_back(simplex_labels(f));
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    return labels_ == other.labels_ && facets_ == other.facets_;
}

SimplicialComplex SimplicialComplex::link(const Label& v) const {
    VertexId vid = require(v);
    VertexMask vm = VertexMask{1} << vid;
    std::vector<std::vector<Label>> gens;
    for (size_t i = 0; i < facets_.size(); ++i) {
        if (!(facet_masks_[i] & vm)) continue;
        VertexMask rest = facet_masks_[i] & ~vm;
        if (!rest) continue; // facet was just {v}
        gens.push_back(simplex_labels(simplex_of(rest)));
    }
    if (gens.empty()) throw Error("empty link: vertex is isolated");
    return from_facets(gens);
}

SimplicialComplex SimplicialComplex::generated_subcomplex(const std::vector<std::vector<Label>>& gens) const {
    if (gens.empty()) throw Error("empty generating set");
    for (const auto& g : gens) {
        if (!has_simplex_labels(g))
            throw Error("not a simplex of the ambient complex");
    }
    return from_facets(gens);
}

SimplicialComplex SimplicialComplex::delete_vertex(const Label& u) const {
    VertexId uid = require(u);
    if (vertex_count() < 2) throw Error("cannot delete the last vertex");
    VertexMask um = VertexMask{1} << uid;
    std::vector<std::vector<Label>> gens;
    for (size_t i = 0; i < facets_.size(); ++i) {
        VertexMask rest = facet_masks_[i] & ~um;
        if (!rest) continue;
        gens.push_back(simplex_labels(simplex_of(rest)));
    }
    if (gens.empty()) throw Error("cannot delete the last vertex");
    return from_facets(gens);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    for (const auto& f : facets_) {
        if (!other.has_simplex_labels(simplex_labels(f))) return false;
    }
    return true;
}

int SimplicialComplex::component_count() const {
    int n = vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& f : facets_)
        for (size_t i = 1; i < f.size(); ++i) {
            int a = find(f[0]), b = find(f[i]);
            if (a != b) parent[a] = b;
        }
    int c = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) ++c;
    return c;
}

namespace {

// Backtracking isomorphism search. Vertices are matched in order of an
// invariant signature (facet-size multiset of the stars), rarest first.
struct IsoSearch {
    const SimplicialComplex& a;
    const SimplicialComplex& b;
    std::vector<std::vector<int>> a_star, b_star; // facet indices per vertex
    std::vector<int> order;                       // a-vertices, match order
    std::vector<int> match;                       // a-vertex -> b-vertex or -1
    std::vector<bool> used;

    IsoSearch(const SimplicialComplex& a_, const SimplicialComplex& b_) : a(a_), b(b_) {}

    std::vector<long> signature(const SimplicialComplex& k, const std::vector<std::vector<int>>& star, int v) {
        std::vector<long> sig;
        for (int fi : star[v]) sig.push_back((long)k.facets()[fi].size());
        std::sort(sig.begin(), sig.end());
        return sig;
    }

    bool feasible(int av, int /*bv*/) {
        // every already-matched facet fragment must stay a face of b
        for (int fi : a_star[av]) {
            VertexMask m = 0;
            bool complete = true;
            for (VertexId w : a.facets()[fi]) {
                if (match[w] >= 0)
                    m |= VertexMask{1} << match[w];
                else
                    complete = false;
            }
            if (!b.face_of_some_facet(m)) return false;
            if (complete && !b.has_simplex(simplex_of(m))) return false;
            // a fully matched a-facet must land on a b-facet
            if (complete) {
                auto s = simplex_of(m);
                bool is_facet = std::binary_search(b.facets().begin(), b.facets().end(), s);
                if (!is_facet) return false;
            }
        }
        return true;
    }

    bool solve(size_t pos) {
        if (pos == order.size()) return true;
        int av = order[pos];
        auto sig_a = signature(a, a_star, av);
        for (int bv = 0; bv < b.vertex_count(); ++bv) {
            if (used[bv]) continue;
            if (signature(b, b_star, bv) != sig_a) continue;
            match[av] = bv;
            used[bv] = true;
            if (feasible(av, bv) && solve(pos + 1)) return true;
            match[av] = -1;
            used[bv] = false;
        }
        return false;
    }

    std::optional<std::map<Label, Label>> run() {
        if (a.vertex_count() != b.vertex_count()) return std::nullopt;
        if (a.f_vector() != b.f_vector()) return std::nullopt;

        int n = a.vertex_count();
        a_star.assign(n, {});
        b_star.assign(n, {});
        for (size_t fi = 0; fi < a.facets().size(); ++fi)
            for (VertexId v : a.facets()[fi]) a_star[v].push_back((int)fi);
        for (size_t fi = 0; fi < b.facets().size(); ++fi)
            for (VertexId v : b.facets()[fi]) b_star[v].push_back((int)fi);

        // signature multisets must agree
        std::vector<std::vector<long>> sa, sb;
        for (int v = 0; v < n; ++v) {
            sa.push_back(signature(a, a_star, v));
            sb.push_back(signature(b, b_star, v));
        }
        {
            auto ca = sa, cb = sb;
            std::sort(ca.begin(), ca.end());
            std::sort(cb.begin(), cb.end());
            if (ca != cb) return std::nullopt;
        }

        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        // rarest signature first
        std::map<std::vector<long>, int> freq;
        for (auto& s : sa) ++freq[s];
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return freq[sa[x]] < freq[sa[y]]; });

        match.assign(n, -1);
        used.assign(n, false);
        if (!solve(0)) return std::nullopt;

        std::map<Label, Label> out;
        for (int v = 0; v < n; ++v) out[a.label(v)] = b.label(match[v]);
        return out;
    }
};

} // namespace

std::optional<std::map<Label, Label>> are_isomorphic(const SimplicialComplex& a,
                                                     const SimplicialComplex& b) {
    IsoSearch s(a, b);
    return s.run();
}

} // namespace lscat
