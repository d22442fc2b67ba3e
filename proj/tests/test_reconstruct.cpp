#include <doctest.h>

#include "fixtures.hpp"
#include "lscat/reconstruct.hpp"

using namespace lscat;
using namespace lscat::fixtures;

namespace {

// 7-vertex pinched pair of spheres with a unique realization: p joined
// to two 3-cycles abc and xyz, every edge in two triangles.
ConstraintSet pinched_spheres_constraints() {
    ConstraintSet cs;
    cs.vertex_labels = {"p", "a", "b", "c", "x", "y", "z"};
    cs.f_vector_target = FVector{{7, 12, 8}};
    cs.edge_two_regular = true;
    cs.single_cycle_links = true;
    cs.pinch = PinchConstraint{"p", 2, false, 8, 4};
    cs.required_triangles = {{"a", "b", "c"}, {"x", "y", "z"}};
    cs.required_edges = {{"p", "a"}, {"p", "b"}, {"p", "c"}, {"p", "x"}, {"p", "y"}, {"p", "z"}};
    return cs;
}

} // namespace

TEST_CASE("trivial subset search finds the solid triangle") {
    ConstraintSet cs;
    cs.vertex_labels = {"a", "b", "c"};
    cs.f_vector_target = FVector{{3, 3, 1}};
    auto out = search_K(cs, 4, 1000);
    REQUIRE(out.solutions.size() == 1);
    CHECK(out.solutions[0] == triangle());
    CHECK(out.exhausted);
}

TEST_CASE("inconsistent constraints are rejected") {
    ConstraintSet cs;
    cs.vertex_labels = {"a", "b", "c"};
    cs.f_vector_target = FVector{{3, 3, 1}};
    cs.required_triangles = {{"a", "b", "c"}};
    cs.forbidden_triangles = {{"c", "b", "a"}};
    CHECK_THROWS_WITH_AS((void)search_K(cs, 1, 100),
                         "inconsistent constraints: a required triangle is forbidden", Error);
}

TEST_CASE("surface search: the pinched-spheres instance has a unique solution") {
    auto out = search_K(pinched_spheres_constraints(), 8, 2'000'000);
    CHECK(out.exhausted);
    REQUIRE(out.solutions.size() == 1);
    CHECK(out.solutions[0] == pinched_spheres());
}

TEST_CASE("audit accepts the pinched spheres and rejects tampering") {
    auto cs = pinched_spheres_constraints();
    auto k = pinched_spheres();
    auto rep = audit_constraints(k, cs);
    CHECK(rep.ok);

    // a different complex with the right labels fails
    auto wrong = SimplicialComplex::from_facets(
        {{"p", "a", "b"}, {"p", "a", "c"}, {"p", "b", "c"}, {"a", "b", "c"},
         {"p", "x", "y"}, {"x", "y", "z"}, {"p", "x", "z"}, {"p", "y", "c"}});
    auto rep2 = audit_constraints(wrong, cs);
    CHECK_FALSE(rep2.ok);
}

TEST_CASE("unfold_pinch splits glued spheres apart") {
    auto k = pinched_spheres();
    auto unfolded = unfold_pinch(k, "p");
    CHECK(unfolded.vertex_count() == 8);
    CHECK(unfolded.component_count() == 2);
    CHECK(unfolded.f_vector() == FVector{{8, 12, 8}});
    CHECK(unfolded.has_vertex("p#1"));
    CHECK(unfolded.has_vertex("p#2"));
    CHECK_FALSE(unfolded.has_vertex("p"));
}

TEST_CASE("unfold_pinch on two triangles sharing a vertex") {
    auto k = two_triangles_pinched();
    auto unfolded = unfold_pinch(k, "p");
    CHECK(unfolded.component_count() == 2);
    CHECK(unfolded.vertex_count() == 6);
}

TEST_CASE("unfold_pinch rejects single-cycle links") {
    CHECK_THROWS_AS((void)unfold_pinch(boundary_tetrahedron(), "a"), Error);
}

TEST_CASE("the bundled instance yields audited solutions on the restricted pool") {
    auto cs = ConstraintSet::bundled_example();
    auto restricted = cs;
    restricted.candidate_pool = column_local_pool(cs);
    auto out = search_K(restricted, 2, 5'000'000);
    REQUIRE(out.solutions.size() == 2);
    for (const auto& k : out.solutions) {
        CHECK(k.f_vector() == FVector{{15, 45, 30}});
        CHECK(audit_constraints(k, cs).ok);
        // every solution carries the required cone triangles and none of
        // the forbidden loop fillings
        for (const auto& t : cs.required_triangles) CHECK(k.has_simplex_labels(t));
        for (const auto& t : cs.forbidden_triangles) CHECK_FALSE(k.has_simplex_labels(t));
    }
}

TEST_CASE("unfolding then re-identifying returns the original complex") {
    auto k = pinched_spheres();
    auto unfolded = unfold_pinch(k, "p");
    std::vector<std::vector<Label>> facets;
    for (auto f : unfolded.facet_labels()) {
        for (auto& l : f)
            if (l == "p#1" || l == "p#2") l = "p";
        facets.push_back(std::move(f));
    }
    CHECK(SimplicialComplex::from_facets(facets) == k);
}
