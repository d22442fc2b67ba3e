#include "lscat/collapse.hpp"
#include "lscat/io.hpp"

#include <algorithm>
#include <set>

namespace lscat {

std::vector<Label> dominators_of(const SimplicialComplex& k, const Label& u) {
    VertexId uid = k.require(u);
    VertexMask um = VertexMask{1} << uid;
    VertexMask common = ~VertexMask{0};
    bool any = false;
    for (VertexMask fm : k.facet_masks()) {
        if (fm & um) {
            common &= fm;
            any = true;
        }
    }
    std::vector<Label> out;
    if (!any) return out;
    common &= ~um;
    for (VertexId v : simplex_of(common)) out.push_back(k.label(v));
    return out;
}

bool is_dominated(const SimplicialComplex& k, const Label& u) {
    return !dominators_of(k, u).empty();
}

namespace {

// Smallest dominated vertex under the tie-break order, together with its
// smallest dominator, or nullopt.
std::optional<CollapseStep> pick_dominated(const SimplicialComplex& k, TieBreak tb) {
    const auto& labels = k.labels();
    auto scan = [&](const Label& l) -> std::optional<CollapseStep> {
        auto doms = dominators_of(k, l);
        if (doms.empty()) return std::nullopt;
        return CollapseStep{l, *std::min_element(doms.begin(), doms.end())};
    };
    if (tb == TieBreak::Lex) {
        for (const auto& l : labels)
            if (auto s = scan(l)) return s;
    } else {
        for (auto it = labels.rbegin(); it != labels.rend(); ++it)
            if (auto s = scan(*it)) return s;
    }
    return std::nullopt;
}

} // namespace

CollapseSequence core(const SimplicialComplex& k, TieBreak tb) {
    CollapseSequence seq{k, {}, k};
    SimplicialComplex cur = k;
    while (cur.vertex_count() > 1) {
        auto step = pick_dominated(cur, tb);
        if (!step) break;
        cur = cur.delete_vertex(step->removed);
        seq.steps.push_back(*step);
    }
    seq.end = cur;
    return seq;
}

CollapsibilityResult is_strongly_collapsible(const SimplicialComplex& k) {
    CollapseSequence c = core(k);
    bool point = c.end.vertex_count() == 1;
    return CollapsibilityResult{point, std::move(c)};
}

VerifyResult verify_collapse_sequence(const CollapseSequence& c) {
    SimplicialComplex cur = c.start;
    for (size_t i = 0; i < c.steps.size(); ++i) {
        const auto& step = c.steps[i];
        if (!cur.has_vertex(step.removed) || !cur.has_vertex(step.dominator))
            return {false, "step " + std::to_string(i) + ": vertex not present"};
        auto doms = dominators_of(cur, step.removed);
        if (std::find(doms.begin(), doms.end(), step.dominator) == doms.end())
            return {false, "step " + std::to_string(i) + ": " + step.removed +
                               " is not dominated by " + step.dominator};
        cur = cur.delete_vertex(step.removed);
    }
    if (!(cur == c.end))
        return {false, "replay does not end at the stated complex"};
    return {true, ""};
}

namespace {

struct CollapseSearch {
    const SimplicialComplex& target;
    std::set<std::string> visited; // canonical facet text of seen states

    std::optional<std::vector<CollapseStep>> dfs(const SimplicialComplex& cur) {
        if (cur == target) return std::vector<CollapseStep>{};
        if (!visited.insert(format_facets(cur)).second) return std::nullopt;

        for (const auto& l : cur.labels()) {
            if (target.has_vertex(l)) continue;
            auto doms = dominators_of(cur, l);
            if (doms.empty()) continue;
            if (cur.vertex_count() < 2) continue;
            auto next = cur.delete_vertex(l);
            if (auto rest = dfs(next)) {
                rest->insert(rest->begin(), CollapseStep{l, doms.front()});
                return rest;
            }
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<CollapseSequence> find_collapse_to(const SimplicialComplex& m,
                                                 const SimplicialComplex& k) {
    for (const auto& l : k.labels())
        if (!m.has_vertex(l)) throw Error("target vertex set is not contained in the source");

    CollapseSearch search{k, {}};
    auto steps = search.dfs(m);
    if (!steps) return std::nullopt;
    return CollapseSequence{m, std::move(*steps), k};
}

} // namespace lscat
