#include "lscat/reconstruct.hpp"

#include <algorithm>
#include <climits>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>

namespace lscat {

ConstraintSet ConstraintSet::bundled_example() {
    ConstraintSet cs;
    auto v = [](int k, int l) {
        return "(" + std::to_string(k) + "," + std::to_string(l) + ")";
    };
    for (int k = -2; k <= 2; ++k)
        for (int l = 0; l <= 2; ++l) cs.vertex_labels.push_back(v(k, l));
    std::sort(cs.vertex_labels.begin(), cs.vertex_labels.end());

    cs.f_vector_target = FVector{{15, 45, 30}};
    cs.edge_two_regular = true;
    cs.single_cycle_links = true;
    cs.pinch = PinchConstraint{v(0, 0), 3, true, 17, 2};

    cs.required_triangles = {
        {v(0, 0), v(2, 0), v(2, 1)},   {v(0, 0), v(2, 1), v(2, 2)},
        {v(0, 0), v(2, 2), v(2, 0)},   {v(0, 0), v(-2, 0), v(-2, 1)},
        {v(0, 0), v(-2, 1), v(-2, 2)}, {v(0, 0), v(-2, 2), v(-2, 0)},
    };
    cs.forbidden_triangles = {
        {v(0, 0), v(2, 0), v(1, 0)},
        {v(0, 0), v(1, 1), v(1, 2)},
        {v(0, 0), v(0, 1), v(0, 2)},
        {v(-1, 0), v(-1, 1), v(-1, 2)},
    };
    cs.required_edges = {
        {v(0, 0), v(2, 0)},  {v(2, 0), v(1, 0)},   {v(1, 0), v(0, 0)},
        {v(0, 0), v(1, 2)},  {v(1, 1), v(1, 2)},   {v(1, 1), v(0, 0)},
        {v(0, 2), v(0, 0)},  {v(0, 0), v(0, 1)},   {v(0, 1), v(0, 2)},
        {v(0, 0), v(-2, 1)}, {v(-1, 0), v(-2, 0)}, {v(-1, 0), v(-1, 1)},
        {v(-1, 1), v(-1, 2)}, {v(-1, 2), v(-1, 0)},
    };
    cs.h1_target = 2;
    return cs;
}

namespace {

std::vector<Label> sorted_triple(const std::vector<Label>& t) {
    auto s = t;
    std::sort(s.begin(), s.end());
    return s;
}

int vertex_degree(const SimplicialComplex& c, VertexId w) {
    int d = 0;
    for (const auto& e : c.simplices(1))
        if (e[0] == w || e[1] == w) ++d;
    return d;
}

// a non-empty complex that is exactly one closed edge-cycle
bool is_single_cycle(const SimplicialComplex& c) {
    if (c.dim() != 1) return false;
    if (c.component_count() != 1) return false;
    for (VertexId w = 0; w < c.vertex_count(); ++w)
        if (vertex_degree(c, w) != 2) return false;
    return true;
}

// every vertex has degree two and the top dimension is one: a disjoint
// union of cycles
bool is_disjoint_cycles(const SimplicialComplex& c) {
    if (c.dim() != 1) return false;
    for (VertexId w = 0; w < c.vertex_count(); ++w)
        if (vertex_degree(c, w) != 2) return false;
    return true;
}

} // namespace

void ConstraintSet::validate() const {
    if (vertex_labels.empty()) throw Error("inconsistent constraints: no vertex labels");
    std::set<std::vector<Label>> req, forb;
    for (const auto& t : required_triangles) {
        if (t.size() != 3) throw Error("inconsistent constraints: required triangle is not a triple");
        req.insert(sorted_triple(t));
    }
    for (const auto& t : forbidden_triangles) forb.insert(sorted_triple(t));
    for (const auto& t : req)
        if (forb.count(t)) throw Error("inconsistent constraints: a required triangle is forbidden");
    if (f_vector_target.counts.size() != 3)
        throw Error("unsupported constraint target: only pure 2-dimensional targets are handled");
    std::set<Label> known(vertex_labels.begin(), vertex_labels.end());
    auto check_known = [&](const Label& l) {
        if (!known.count(l)) throw Error("inconsistent constraints: unknown label " + l);
    };
    for (const auto& t : required_triangles)
        for (const auto& l : t) check_known(l);
    for (const auto& t : forbidden_triangles)
        for (const auto& l : t) check_known(l);
    for (const auto& e : required_edges) {
        check_known(e[0]);
        check_known(e[1]);
    }
    if (pinch) check_known(pinch->vertex);
}

// ------------------------------------------------------------- search

namespace {

struct TriangleSearch {
    const ConstraintSet& cs;
    int n = 0;                 // vertex count
    std::vector<Label> labels; // sorted
    int pinch = -1;            // vertex id or -1
    int target_triangles = 0;
    bool link_checks = false;

    // candidate triangles, lexicographically sorted id triples
    std::vector<std::array<int, 3>> pool;
    std::vector<int> pool_index; // [a*n*n+b*n+c] -> pool idx or -1
    std::vector<bool> required_mask;
    std::vector<int> required_idx;

    // edge bookkeeping (edge id = u * n + v with u < v)
    std::vector<int> edge_usage;
    std::vector<bool> edge_required;
    int required_edges_missing = 0;
    int open_edge_count = 0;

    // Incremental per-vertex link structure. A link graph has maximum
    // degree two (edge usage cap), so its components are paths and
    // cycles; paths are tracked by their two end vertices.
    // partner[v*n+x] = the opposite end of x's path in the link of v,
    // meaningful while x has link-degree one there.
    std::vector<int> partner;
    std::vector<int> link_degree; // [v*n+x]
    std::vector<int> closed_cycles;
    std::vector<int> open_paths;

    // undo journal for unplace()
    struct UndoRec {
        int ti;
        int pairs; // entries on partner_undo
        std::array<int, 3> closed_before, open_before;
    };
    std::vector<UndoRec> undo_stack;
    std::vector<std::pair<int, int>> partner_undo; // (index, old value)

    std::vector<int> chosen;
    std::vector<bool> chosen_mask;

    long nodes = 0;
    long node_budget = 0;
    int solution_limit = 0;
    bool budget_hit = false;
    std::set<std::vector<std::array<int, 3>>> emitted;
    std::vector<SimplicialComplex> solutions;

    explicit TriangleSearch(const ConstraintSet& cs_) : cs(cs_) {
        labels = cs.vertex_labels;
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        n = (int)labels.size();
        if (cs.pinch) pinch = vid(cs.pinch->vertex);
        target_triangles = (int)cs.f_vector_target.counts.at(2);
        link_checks = cs.single_cycle_links;

        std::set<std::array<int, 3>> forbidden;
        for (const auto& t : cs.forbidden_triangles) forbidden.insert(tri_id(t));
        std::set<std::array<int, 3>> pool_filter;
        bool restricted = cs.candidate_pool.has_value();
        if (restricted)
            for (const auto& t : *cs.candidate_pool) pool_filter.insert(tri_id(t));
        std::set<std::array<int, 3>> required;
        for (const auto& t : cs.required_triangles) required.insert(tri_id(t));

        pool_index.assign(n * n * n, -1);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    std::array<int, 3> t{a, b, c};
                    if (forbidden.count(t)) continue;
                    if (restricted && !pool_filter.count(t) && !required.count(t)) continue;
                    pool_index[(a * n + b) * n + c] = (int)pool.size();
                    pool.push_back(t);
                }
        required_mask.assign(pool.size(), false);
        for (size_t i = 0; i < pool.size(); ++i)
            if (required.count(pool[i])) {
                required_mask[i] = true;
                required_idx.push_back((int)i);
            }
        if (required_idx.size() != required.size())
            throw Error("inconsistent constraints: a required triangle is excluded from the pool");

        edge_usage.assign(n * n, 0);
        edge_required.assign(n * n, false);
        auto mark_required = [&](int u, int v) {
            int id = eid(u, v);
            if (!edge_required[id]) {
                edge_required[id] = true;
                ++required_edges_missing;
            }
        };
        for (const auto& e : cs.required_edges) mark_required(vid(e[0]), vid(e[1]));
        for (const auto& t : cs.required_triangles) {
            auto ids = tri_id(t);
            mark_required(ids[0], ids[1]);
            mark_required(ids[0], ids[2]);
            mark_required(ids[1], ids[2]);
        }

        partner.assign(n * n, -1);
        link_degree.assign(n * n, 0);
        closed_cycles.assign(n, 0);
        open_paths.assign(n, 0);
        chosen_mask.assign(pool.size(), false);
    }

    int vid(const Label& l) const {
        auto it = std::lower_bound(labels.begin(), labels.end(), l);
        if (it == labels.end() || *it != l) throw Error("unknown vertex: " + l);
        return (int)(it - labels.begin());
    }
    std::array<int, 3> tri_id(const std::vector<Label>& t) const {
        std::array<int, 3> ids{vid(t.at(0)), vid(t.at(1)), vid(t.at(2))};
        std::sort(ids.begin(), ids.end());
        if (ids[0] == ids[1] || ids[1] == ids[2]) throw Error("degenerate simplex");
        return ids;
    }
    int eid(int u, int v) const { return u < v ? u * n + v : v * n + u; }

    int allowed_cycles(int v) const {
        if (v == pinch && cs.pinch) return cs.pinch->cycle_count;
        return 1;
    }

    // Dry-run admissibility of a triangle against edge caps and link
    // shape, without mutating anything.
    bool admissible(int ti) const {
        const auto& t = pool[ti];
        if (chosen_mask[ti]) return false;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (edge_usage[eid(t[i], t[j])] >= 2) return false;
        if (!link_checks) return true;
        for (int i = 0; i < 3; ++i) {
            int v = t[i], x = t[(i + 1) % 3], y = t[(i + 2) % 3];
            int dx = link_degree[v * n + x], dy = link_degree[v * n + y];
            int closed = closed_cycles[v], open = open_paths[v];
            if (dx == 1 && dy == 1) {
                if (partner[v * n + x] == y) {
                    ++closed;
                    --open;
                } else {
                    --open;
                }
            } else if (dx == 0 && dy == 0) {
                ++open;
            }
            int allowed = allowed_cycles(v);
            if (closed > allowed) return false;
            if (closed == allowed && open > 0) return false;
        }
        return true;
    }

    // Adds an admissible triangle; pair every call with unplace().
    void place(int ti) {
        const auto& t = pool[ti];
        UndoRec rec{ti, 0, {}, {}};
        for (int i = 0; i < 3; ++i) {
            rec.closed_before[i] = closed_cycles[t[i]];
            rec.open_before[i] = open_paths[t[i]];
        }
        auto set_partner = [&](int idx, int val) {
            partner_undo.emplace_back(idx, partner[idx]);
            ++rec.pairs;
            partner[idx] = val;
        };

        chosen.push_back(ti);
        chosen_mask[ti] = true;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                int id = eid(t[i], t[j]);
                if (edge_usage[id] == 0 && edge_required[id]) --required_edges_missing;
                if (edge_usage[id] == 0)
                    ++open_edge_count;
                else
                    --open_edge_count;
                ++edge_usage[id];
            }
        for (int i = 0; i < 3; ++i) {
            int v = t[i], x = t[(i + 1) % 3], y = t[(i + 2) % 3];
            int vx = v * n + x, vy = v * n + y;
            int dx = link_degree[vx], dy = link_degree[vy];
            if (dx == 0 && dy == 0) {
                set_partner(vx, y);
                set_partner(vy, x);
                ++open_paths[v];
            } else if (dx == 0) { // y is a path end
                int p = partner[vy];
                set_partner(vx, p);
                set_partner(v * n + p, x);
            } else if (dy == 0) {
                int p = partner[vx];
                set_partner(vy, p);
                set_partner(v * n + p, y);
            } else if (partner[vx] == y) { // closes the path into a cycle
                ++closed_cycles[v];
                --open_paths[v];
            } else { // joins two distinct paths
                int px = partner[vx], py = partner[vy];
                set_partner(v * n + px, py);
                set_partner(v * n + py, px);
                --open_paths[v];
            }
            ++link_degree[vx];
            ++link_degree[vy];
        }
        undo_stack.push_back(rec);
    }

    void unplace(int ti) {
        UndoRec rec = undo_stack.back();
        undo_stack.pop_back();
        if (rec.ti != ti) throw Error("internal error: unbalanced search undo");
        const auto& t = pool[ti];
        for (int i = 0; i < 3; ++i) {
            int v = t[i], x = t[(i + 1) % 3], y = t[(i + 2) % 3];
            --link_degree[v * n + x];
            --link_degree[v * n + y];
            closed_cycles[v] = rec.closed_before[i];
            open_paths[v] = rec.open_before[i];
        }
        for (int p = 0; p < rec.pairs; ++p) {
            auto [idx, old] = partner_undo.back();
            partner_undo.pop_back();
            partner[idx] = old;
        }
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                int id = eid(t[i], t[j]);
                --edge_usage[id];
                if (edge_usage[id] == 0 && edge_required[id]) ++required_edges_missing;
                if (edge_usage[id] == 0)
                    --open_edge_count;
                else
                    ++open_edge_count;
            }
        chosen_mask[ti] = false;
        chosen.pop_back();
    }

    int candidate_for(int u, int v, int w) const {
        int a = u, b = v, c = w;
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        return pool_index[(a * n + b) * n + c];
    }

    // candidates closing the open edge (u,v), in ascending vertex order
    void closures_of(int u, int v, std::vector<int>& out) const {
        out.clear();
        for (int w = 0; w < n; ++w) {
            if (w == u || w == v) continue;
            int ti = candidate_for(u, v, w);
            if (ti < 0) continue;
            if (admissible(ti)) out.push_back(ti);
        }
    }

    bool feasible() const {
        long remaining = (long)target_triangles - (long)chosen.size();
        if (remaining < 0) return false;
        if (3 * remaining < required_edges_missing) return false;
        if (3 * remaining < open_edge_count) return false;
        return true;
    }

    void emit_if_solution() {
        if ((int)chosen.size() != target_triangles) return;
        if (required_edges_missing > 0) return;
        for (int i : required_idx)
            if (!chosen_mask[i]) return;

        std::vector<std::vector<Label>> facets;
        for (int ti : chosen) {
            const auto& t = pool[ti];
            facets.push_back({labels[t[0]], labels[t[1]], labels[t[2]]});
        }
        SimplicialComplex k = SimplicialComplex::from_facets(facets);
        auto audit = audit_constraints(k, cs);
        if (!audit.ok) return;

        std::vector<std::array<int, 3>> key;
        for (int ti : chosen) key.push_back(pool[ti]);
        std::sort(key.begin(), key.end());
        if (emitted.insert(std::move(key)).second) solutions.push_back(std::move(k));
    }

    bool done() const { return budget_hit || (int)solutions.size() >= solution_limit; }

    // --- surface-completion search (edge_two_regular instances) -----

    // picks the open edge with the fewest admissible closures
    bool select_frontier(std::vector<int>& closures) const {
        bool found = false;
        std::vector<int> tmp;
        size_t best = SIZE_MAX;
        for (int u = 0; u < n && best > 0; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (edge_usage[u * n + v] != 1) continue;
                std::vector<int> c;
                closures_of(u, v, c);
                if (!found || c.size() < best) {
                    found = true;
                    best = c.size();
                    closures = std::move(c);
                    if (best == 0) return true;
                }
            }
        return found;
    }

    void surface_dfs() {
        if (done()) return;
        if (++nodes > node_budget) {
            budget_hit = true;
            return;
        }
        if (!feasible()) return;

        std::vector<int> closures;
        bool have_open = select_frontier(closures);
        if (!have_open) {
            emit_if_solution();
            if (done()) return;
            if ((int)chosen.size() >= target_triangles) return;
            seed_new_component();
            return;
        }
        if ((int)chosen.size() >= target_triangles) return;
        for (int ti : closures) {
            place(ti);
            surface_dfs();
            unplace(ti);
            if (done()) return;
        }
    }

    // with no open edge left, further growth must start from triangles
    // whose edges are all unused
    void seed_new_component() {
        for (size_t ti = 0; ti < pool.size(); ++ti) {
            if (chosen_mask[ti]) continue;
            const auto& t = pool[ti];
            bool fresh = true;
            for (int i = 0; i < 3 && fresh; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (edge_usage[eid(t[i], t[j])] != 0) {
                        fresh = false;
                        break;
                    }
            if (!fresh || !admissible((int)ti)) continue;
            place((int)ti);
            surface_dfs();
            unplace((int)ti);
            if (done()) return;
        }
    }

    // --- plain subset search (no surface condition) ------------------

    void subset_dfs(size_t next) {
        if (done()) return;
        if (++nodes > node_budget) {
            budget_hit = true;
            return;
        }
        if ((int)chosen.size() == target_triangles) {
            emit_if_solution();
            return;
        }
        if (next >= pool.size()) return;
        if ((long)(pool.size() - next) < (long)target_triangles - (long)chosen.size()) return;

        if (admissible((int)next)) {
            place((int)next);
            subset_dfs(next + 1);
            unplace((int)next);
            if (done()) return;
        }
        // skipping a required triangle is pointless
        if (!required_mask[next]) subset_dfs(next + 1);
    }

    SearchOutcome run(int limit, long budget) {
        solution_limit = limit;
        node_budget = budget;

        if (cs.edge_two_regular) {
            // seed with the required triangles, then complete the surface
            std::vector<int> placed;
            bool ok = true;
            for (int i : required_idx) {
                if (!admissible(i)) {
                    ok = false;
                    break;
                }
                place(i);
                placed.push_back(i);
            }
            if (ok) surface_dfs();
            for (auto it = placed.rbegin(); it != placed.rend(); ++it) unplace(*it);
        } else {
            subset_dfs(0);
        }
        SearchOutcome out;
        out.solutions = std::move(solutions);
        out.exhausted = !budget_hit;
        out.nodes = nodes;
        return out;
    }
};

} // namespace

SearchOutcome search_K(const ConstraintSet& cs, int solution_limit, long node_budget) {
    cs.validate();
    TriangleSearch search(cs);
    return search.run(solution_limit, node_budget);
}

std::vector<std::vector<Label>> column_local_pool(const ConstraintSet& cs) {
    const Label pinch = cs.pinch ? cs.pinch->vertex : Label{};
    auto column_of = [&](const Label& l) -> std::optional<int> {
        if (l == pinch) return std::nullopt; // wildcard
        int col = 0, row = 0;
        if (std::sscanf(l.c_str(), "(%d,%d)", &col, &row) != 2)
            throw Error("label is not grid-shaped: " + l);
        return col;
    };

    auto labels = cs.vertex_labels;
    std::sort(labels.begin(), labels.end());
    std::vector<std::vector<Label>> pool;
    for (size_t a = 0; a < labels.size(); ++a)
        for (size_t b = a + 1; b < labels.size(); ++b)
            for (size_t c = b + 1; c < labels.size(); ++c) {
                int lo = INT_MAX, hi = INT_MIN;
                for (const auto& l : {labels[a], labels[b], labels[c]}) {
                    auto col = column_of(l);
                    if (!col) continue;
                    lo = std::min(lo, *col);
                    hi = std::max(hi, *col);
                }
                if (lo != INT_MAX && hi - lo > 1) continue;
                pool.push_back({labels[a], labels[b], labels[c]});
            }
    return pool;
}

// ------------------------------------------------------------- unfold

SimplicialComplex unfold_pinch(const SimplicialComplex& k, const Label& v) {
    SimplicialComplex lk = k.link(v);
    int c = lk.component_count();
    if (c < 2) throw Error("link does not split into at least two components");

    // assign each link vertex to its component; components are numbered
    // by their smallest label so the split is deterministic
    std::map<Label, int> cycle_of;
    std::vector<std::vector<VertexId>> adj(lk.vertex_count());
    for (const auto& e : lk.simplices(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    int next_cycle = 0;
    for (VertexId start = 0; start < lk.vertex_count(); ++start) {
        if (cycle_of.count(lk.label(start))) continue;
        int id = next_cycle++;
        std::vector<VertexId> stack{start};
        cycle_of[lk.label(start)] = id;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (VertexId y : adj[x])
                if (!cycle_of.count(lk.label(y))) {
                    cycle_of[lk.label(y)] = id;
                    stack.push_back(y);
                }
        }
    }

    std::vector<Label> split_names;
    for (int i = 1; i <= c; ++i) {
        Label name = v + "#" + std::to_string(i);
        if (k.has_vertex(name)) throw Error("split label already in use: " + name);
        split_names.push_back(name);
    }

    std::vector<std::vector<Label>> facets;
    for (const auto& f : k.facet_labels()) {
        auto it = std::find(f.begin(), f.end(), v);
        if (it == f.end()) {
            facets.push_back(f);
            continue;
        }
        // the other vertices of the facet all live in one link component
        int cyc = -1;
        for (const auto& w : f) {
            if (w == v) continue;
            int cw = cycle_of.at(w);
            if (cyc >= 0 && cw != cyc) throw Error("internal error: facet spans link components");
            cyc = cw;
        }
        if (cyc < 0) throw Error("pinch vertex is isolated");
        auto g = f;
        *std::find(g.begin(), g.end(), v) = split_names[cyc];
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(facets);
}

// -------------------------------------------------------------- audit

AuditReport audit_constraints(const SimplicialComplex& k, const ConstraintSet& cs) {
    AuditReport rep;
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

    auto want_labels = cs.vertex_labels;
    std::sort(want_labels.begin(), want_labels.end());
    want_labels.erase(std::unique(want_labels.begin(), want_labels.end()), want_labels.end());
    if (k.labels() != want_labels) fail("vertex label set differs from the constraint set");

    if (!(k.f_vector() == cs.f_vector_target))
        fail("f-vector " + k.f_vector().str() + " != target " + cs.f_vector_target.str());
    bool pure2 = true;
    for (const auto& f : k.facets())
        if (f.size() != 3) pure2 = false;
    if (!pure2) {
        fail("complex is not pure 2-dimensional");
        rep.ok = false;
        return rep; // the surface checks below presume purity
    }

    if (cs.edge_two_regular) {
        for (const auto& e : k.simplices(1)) {
            int cnt = 0;
            for (const auto& t : k.simplices(2))
                if (std::includes(t.begin(), t.end(), e.begin(), e.end())) ++cnt;
            if (cnt != 2)
                fail("edge {" + k.label(e[0]) + "," + k.label(e[1]) + "} lies in " +
                     std::to_string(cnt) + " triangles, expected 2");
        }
    }

    const Label pinch_label = cs.pinch ? cs.pinch->vertex : Label{};
    if (cs.single_cycle_links) {
        for (const auto& l : k.labels()) {
            if (cs.pinch && l == pinch_label) continue;
            if (!is_single_cycle(k.link(l))) fail("link of " + l + " is not a single cycle");
        }
    }
    if (cs.pinch && k.has_vertex(pinch_label)) {
        auto lk = k.link(pinch_label);
        if (!is_disjoint_cycles(lk) || lk.component_count() != cs.pinch->cycle_count) {
            fail("link of " + pinch_label + " is not a disjoint union of " +
                 std::to_string(cs.pinch->cycle_count) + " cycles");
        } else {
            auto unfolded = unfold_pinch(k, pinch_label);
            if (cs.pinch->unfold_vertex_count > 0) {
                if (unfolded.vertex_count() != cs.pinch->unfold_vertex_count)
                    fail("unfolded vertex count " + std::to_string(unfolded.vertex_count()) +
                         " != " + std::to_string(cs.pinch->unfold_vertex_count));
                auto f = unfolded.f_vector();
                long chi = 0;
                for (size_t d = 0; d < f.counts.size(); ++d)
                    chi += (d % 2 == 0 ? 1 : -1) * f.counts[d];
                if (chi != cs.pinch->unfold_euler)
                    fail("unfolded Euler characteristic " + std::to_string(chi) +
                         " != " + std::to_string(cs.pinch->unfold_euler));
            }
            if (cs.pinch->unfold_connected && unfolded.component_count() != 1)
                fail("unfolded complex is not connected");
            for (const auto& l : unfolded.labels())
                if (!is_single_cycle(unfolded.link(l))) {
                    fail("unfolded complex is not a closed surface at " + l);
                    break;
                }
        }
    }

    for (const auto& t : cs.required_triangles)
        if (!k.has_simplex_labels(t)) {
            std::string s = "missing required triangle:";
            for (const auto& l : t) s += " " + l;
            fail(s);
        }
    for (const auto& t : cs.forbidden_triangles)
        if (k.has_simplex_labels(t)) {
            std::string s = "forbidden triangle present:";
            for (const auto& l : t) s += " " + l;
            fail(s);
        }
    for (const auto& e : cs.required_edges)
        if (!k.has_simplex_labels({e[0], e[1]}))
            fail("missing required edge: " + e[0] + " " + e[1]);

    if (cs.h1_target && h1_rank_mod2(k) != *cs.h1_target)
        fail("H1 rank " + std::to_string(h1_rank_mod2(k)) + " != " +
             std::to_string(*cs.h1_target));

    rep.ok = rep.failures.empty();
    return rep;
}

} // namespace lscat
