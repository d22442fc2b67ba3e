#include <doctest.h>

#include "fixtures.hpp"
#include "lscat/category.hpp"
#include "lscat/contiguity.hpp"

#include <random>

using namespace lscat;
using namespace lscat::fixtures;

namespace {

// Definition-style test: does the identity lie in the contiguity class
// of some constant map?
Tri identity_reaches_constant(const SimplicialComplex& k, long cap) {
    auto res = reaches_constant(SimplicialMap::identity(k), cap);
    return res.verdict;
}

} // namespace

TEST_CASE("strong collapsibility matches the contiguity-class definition") {
    std::mt19937 rng(3141);
    int agree = 0, capped = 0;
    for (int i = 0; i < 150; ++i) {
        auto k = random_complex(rng, 6, 8, 3);
        bool collapsible = is_strongly_collapsible(k).collapsible;
        Tri by_maps = identity_reaches_constant(k, 500000);
        if (by_maps == Tri::Unknown) {
            ++capped;
            continue;
        }
        CHECK(collapsible == (by_maps == Tri::Yes));
        ++agree;
    }
    CHECK(agree > 100);
    CHECK(capped < agree / 10);
}

TEST_CASE("contiguity is reflexive and symmetric on random pairs") {
    std::mt19937 rng(246);
    int tested = 0;
    for (int iter = 0; iter < 1200 && tested < 400; ++iter) {
        auto k = random_complex(rng, 5, 6, 2);
        auto l = random_complex(rng, 5, 6, 2);
        std::uniform_int_distribution<int> pickv(0, l.vertex_count() - 1);
        auto base = SimplicialMap::constant(k, l, l.label(pickv(rng)));
        auto a = base.assignment_labels();
        for (int tries = 0; tries < 8; ++tries) {
            auto b = a;
            std::uniform_int_distribution<int> picks(0, k.vertex_count() - 1);
            b[k.label(picks(rng))] = l.label(pickv(rng));
            try {
                SimplicialMap probe(k, l, b);
                a = b;
            } catch (const Error&) {
            }
        }
        SimplicialMap f(k, l, a);
        CHECK(are_contiguous(f, f));
        CHECK(are_contiguous(f, base) == are_contiguous(base, f));
        ++tested;
    }
    CHECK(tested >= 400);
}

TEST_CASE("verified covers witness scat <= gscat on the fixtures") {
    for (const auto& k :
         {triangle(), c3(), boundary_tetrahedron(), octahedron(), two_triangles_pinched()}) {
        SearchBudget budget{200, 0, 200000};
        int best_cat = -1, best_sc = -1;
        for (int pieces = 1; pieces <= 4; ++pieces) {
            if (best_cat < 0 && search_cover(k, pieces, CoverMode::Categorical, budget))
                best_cat = pieces;
            if (best_sc < 0 && search_cover(k, pieces, CoverMode::StronglyCollapsible, budget))
                best_sc = pieces;
        }
        REQUIRE(best_cat > 0);
        REQUIRE(best_sc > 0);
        CHECK(best_cat <= best_sc);
    }
}

TEST_CASE("every search cover passes verification") {
    std::mt19937 rng(1729);
    int tested = 0;
    for (int i = 0; i < 120 && tested < 30; ++i) {
        auto k = random_complex(rng, 6, 6, 2);
        SearchBudget budget{60, 1, 100000};
        auto cover = search_cover(k, 2, CoverMode::StronglyCollapsible, budget);
        if (!cover) continue;
        auto res = verify_cover(k, cover->pieces, CoverMode::StronglyCollapsible);
        CHECK(res.verdict == Tri::Yes);
        ++tested;
    }
    CHECK(tested >= 15);
}
