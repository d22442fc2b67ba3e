#include "lscat/contiguity.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace lscat {

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                             const std::map<Label, Label>& assignment)
    : source_(std::move(source)), target_(std::move(target)) {
    assignment_.resize(source_.vertex_count());
    for (int v = 0; v < source_.vertex_count(); ++v) {
        auto it = assignment.find(source_.label(v));
        if (it == assignment.end())
            throw Error("assignment missing vertex: " + source_.label(v));
        assignment_[v] = target_.require(it->second);
    }
    for (const auto& f : source_.facets()) {
        VertexMask image = 0;
        for (VertexId v : f) image |= VertexMask{1} << assignment_[v];
        if (!target_.face_of_some_facet(image))
            throw Error("not a simplicial map: image of a simplex is not a simplex");
    }
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& k) {
    std::map<Label, Label> a;
    for (const auto& l : k.labels()) a[l] = l;
    return SimplicialMap(k, k, a);
}

SimplicialMap SimplicialMap::constant(const SimplicialComplex& source,
                                      const SimplicialComplex& target, const Label& v) {
    target.require(v);
    std::map<Label, Label> a;
    for (const auto& l : source.labels()) a[l] = v;
    return SimplicialMap(source, target, a);
}

SimplicialMap SimplicialMap::inclusion(const SimplicialComplex& u, const SimplicialComplex& k) {
    if (!u.is_subcomplex_of(k)) throw Error("not a subcomplex of the ambient complex");
    std::map<Label, Label> a;
    for (const auto& l : u.labels()) a[l] = l;
    return SimplicialMap(u, k, a);
}

Label SimplicialMap::apply_label(const Label& l) const {
    return target_.label(assignment_[source_.require(l)]);
}

std::map<Label, Label> SimplicialMap::assignment_labels() const {
    std::map<Label, Label> out;
    for (int v = 0; v < source_.vertex_count(); ++v)
        out[source_.label(v)] = target_.label(assignment_[v]);
    return out;
}

bool SimplicialMap::operator==(const SimplicialMap& o) const {
    return source_ == o.source_ && target_ == o.target_ && assignment_ == o.assignment_;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (!(f.target() == g.source())) throw Error("composition mismatch");
    SimplicialMap h;
    h.source_ = f.source();
    h.target_ = g.target();
    h.assignment_.resize(f.source().vertex_count());
    for (int v = 0; v < f.source().vertex_count(); ++v)
        h.assignment_[v] = g.apply(f.apply(v));
    return h;
}

namespace {

void require_parallel(const SimplicialMap& f, const SimplicialMap& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw Error("mismatched source/target");
}

bool contiguous_assignments(const SimplicialComplex& source, const SimplicialComplex& target,
                            const std::vector<VertexId>& f, const std::vector<VertexId>& g) {
    for (const auto& facet : source.facets()) {
        VertexMask u = 0;
        for (VertexId v : facet) {
            u |= VertexMask{1} << f[v];
            u |= VertexMask{1} << g[v];
        }
        if (!target.face_of_some_facet(u)) return false;
    }
    return true;
}

// The contiguity-BFS over assignment vectors. States are encoded as byte
// strings (one byte per source vertex).
struct ClassBfs {
    const SimplicialComplex& source;
    const SimplicialComplex& target;
    long cap;

    std::unordered_map<std::string, std::string> parent; // state -> predecessor
    std::deque<std::string> queue;
    long visited = 0;

    static std::string encode(const std::vector<VertexId>& a) {
        std::string s(a.size(), '\0');
        for (size_t i = 0; i < a.size(); ++i) s[i] = (char)(unsigned char)a[i];
        return s;
    }
    static std::vector<VertexId> decode(const std::string& s) {
        std::vector<VertexId> a(s.size());
        for (size_t i = 0; i < s.size(); ++i) a[i] = (VertexId)(unsigned char)s[i];
        return a;
    }

    // Enumerates, in lexicographic order, every assignment g contiguous
    // with f. Any such g is automatically simplicial.
    template <typename Fn>
    bool for_each_neighbor(const std::vector<VertexId>& f, Fn&& fn) {
        int n = source.vertex_count();
        std::vector<VertexId> g(n, 0);
        return enumerate(f, g, 0, fn);
    }

    template <typename Fn>
    bool enumerate(const std::vector<VertexId>& f, std::vector<VertexId>& g, int pos, Fn&& fn) {
        int n = source.vertex_count();
        if (pos == n) return fn(g);
        for (VertexId img = 0; img < target.vertex_count(); ++img) {
            g[pos] = img;
            if (partial_ok(f, g, pos) && !enumerate(f, g, pos + 1, fn)) return false;
        }
        return true;
    }

    bool partial_ok(const std::vector<VertexId>& f, const std::vector<VertexId>& g, int pos) {
        for (const auto& facet : source.facets()) {
            VertexMask u = 0;
            for (VertexId v : facet) {
                u |= VertexMask{1} << f[v];
                if (v <= pos) u |= VertexMask{1} << g[v];
            }
            if (!target.face_of_some_facet(u)) return false;
        }
        return true;
    }

    std::vector<AssignmentTable> chain_to(const std::string& state) {
        std::vector<std::string> states;
        std::string cur = state;
        while (true) {
            states.push_back(cur);
            auto it = parent.find(cur);
            if (it == parent.end() || it->second.empty()) break;
            cur = it->second;
        }
        std::reverse(states.begin(), states.end());
        std::vector<AssignmentTable> chain;
        for (const auto& s : states) {
            AssignmentTable t;
            auto a = decode(s);
            for (int v = 0; v < source.vertex_count(); ++v)
                t[source.label(v)] = target.label(a[v]);
            chain.push_back(std::move(t));
        }
        return chain;
    }

    // Runs BFS from `start`; `goal` decides acceptance of a popped state.
    // Returns the accepted state or nullopt (exhausted), plus cap status.
    template <typename Goal>
    std::pair<std::optional<std::string>, bool> run(const std::vector<VertexId>& start, Goal&& goal) {
        std::string s0 = encode(start);
        parent[s0] = "";
        queue.push_back(s0);
        visited = 1;
        bool capped = false;
        while (!queue.empty()) {
            std::string cur = queue.front();
            queue.pop_front();
            if (goal(decode(cur))) return {cur, capped};
            auto curv = decode(cur);
            bool keep_going = for_each_neighbor(curv, [&](const std::vector<VertexId>& nb) {
                std::string key = encode(nb);
                if (parent.emplace(key, cur).second) {
                    if (visited >= cap) {
                        capped = true;
                        return false;
                    }
                    ++visited;
                    queue.push_back(key);
                }
                return true;
            });
            if (!keep_going) return {std::nullopt, true};
        }
        return {std::nullopt, capped};
    }
};

} // namespace

bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g) {
    require_parallel(f, g);
    return contiguous_assignments(f.source(), f.target(), f.assignment(), g.assignment());
}

ClassSearchResult same_contiguity_class(const SimplicialMap& f, const SimplicialMap& g,
                                        long state_cap) {
    require_parallel(f, g);
    ClassBfs bfs{f.source(), f.target(), state_cap, {}, {}, 0};
    const auto goal_assignment = g.assignment();
    auto [hit, capped] = bfs.run(f.assignment(),
                                 [&](const std::vector<VertexId>& a) { return a == goal_assignment; });
    ClassSearchResult res;
    res.visited = bfs.visited;
    if (hit) {
        res.verdict = Tri::Yes;
        res.chain = bfs.chain_to(*hit);
    } else {
        res.verdict = capped ? Tri::Unknown : Tri::No;
    }
    return res;
}

namespace {

// Is some constant map contiguous to the assignment?
std::optional<VertexId> constant_neighbor(const SimplicialComplex& source,
                                          const SimplicialComplex& target,
                                          const std::vector<VertexId>& a) {
    for (VertexId v = 0; v < target.vertex_count(); ++v) {
        bool ok = true;
        for (const auto& facet : source.facets()) {
            VertexMask u = VertexMask{1} << v;
            for (VertexId w : facet) u |= VertexMask{1} << a[w];
            if (!target.face_of_some_facet(u)) {
                ok = false;
                break;
            }
        }
        if (ok) return v;
    }
    return std::nullopt;
}

} // namespace

ClassSearchResult reaches_constant(const SimplicialMap& f, long state_cap) {
    ClassBfs bfs{f.source(), f.target(), state_cap, {}, {}, 0};
    const auto& source = f.source();
    const auto& target = f.target();
    std::optional<VertexId> found;
    auto [hit, capped] = bfs.run(f.assignment(), [&](const std::vector<VertexId>& a) {
        found = constant_neighbor(source, target, a);
        return found.has_value();
    });
    ClassSearchResult res;
    res.visited = bfs.visited;
    if (hit) {
        res.verdict = Tri::Yes;
        res.chain = bfs.chain_to(*hit);
        // append the constant unless the accepted state already is one
        AssignmentTable constant;
        for (const auto& l : source.labels()) constant[l] = target.label(*found);
        if (res.chain.back() != constant) res.chain.push_back(constant);
    } else {
        res.verdict = capped ? Tri::Unknown : Tri::No;
    }
    return res;
}

CategoricalResult is_categorical(const SimplicialComplex& u, const SimplicialComplex& k,
                                 long state_cap) {
    if (!u.is_subcomplex_of(k)) throw Error("not a subcomplex of the ambient complex");

    CategoricalResult out;
    out.collapse = core(u);
    const SimplicialComplex& u_core = out.collapse.end;

    auto incl = SimplicialMap::inclusion(u_core, k);
    auto res = reaches_constant(incl, state_cap);
    out.verdict = res.verdict;
    out.visited = res.visited;
    if (res.verdict == Tri::Yes) {
        out.chain = std::move(res.chain);
        out.witness_vertex = out.chain.back().begin()->second;
    }
    return out;
}

} // namespace lscat
