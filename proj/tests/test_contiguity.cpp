#include <doctest.h>

#include "fixtures.hpp"
#include "lscat/contiguity.hpp"

#include <functional>
#include <map>
#include <random>

using namespace lscat;
using namespace lscat::fixtures;

namespace {

SimplicialComplex boundary_triangle_in(const SimplicialComplex& d2) {
    return d2.generated_subcomplex({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

} // namespace

TEST_CASE("a map is contiguous with itself") {
    auto k = c3();
    auto id = SimplicialMap::identity(k);
    CHECK(are_contiguous(id, id));
}

TEST_CASE("inclusion of the hollow triangle vs the constant") {
    auto d2 = triangle();
    auto bd = boundary_triangle_in(d2);
    auto incl = SimplicialMap::inclusion(bd, d2);
    auto ca = SimplicialMap::constant(bd, d2, "a");
    CHECK(are_contiguous(incl, ca));

    auto res = same_contiguity_class(incl, ca);
    CHECK(res.verdict == Tri::Yes);
    CHECK(res.chain.size() == 2); // one contiguity step
}

TEST_CASE("constants on the empty triangle are pairwise contiguous") {
    auto k = c3();
    for (auto u : {"a", "b", "c"})
        for (auto v : {"a", "b", "c"}) {
            auto cu = SimplicialMap::constant(k, k, u);
            auto cv = SimplicialMap::constant(k, k, v);
            CHECK(are_contiguous(cu, cv));
        }
}

TEST_CASE("constants in different components are not contiguous") {
    auto k = SimplicialComplex::from_facets({{"a", "b"}, {"x", "y"}});
    auto ca = SimplicialMap::constant(k, k, "a");
    auto cx = SimplicialMap::constant(k, k, "x");
    CHECK_FALSE(are_contiguous(ca, cx));
}

TEST_CASE("mismatched maps are rejected") {
    auto ca = SimplicialMap::constant(c3(), c3(), "a");
    auto cb = SimplicialMap::constant(triangle(), triangle(), "a");
    CHECK_THROWS_AS((void)are_contiguous(ca, cb), Error);
}

TEST_CASE("identity of the empty triangle is not in a constant's class") {
    auto k = c3();
    auto id = SimplicialMap::identity(k);
    for (auto v : {"a", "b", "c"}) {
        auto res = same_contiguity_class(id, SimplicialMap::constant(k, k, v));
        CHECK(res.verdict == Tri::No);
    }
    // oracle cross-check: the BFS agrees with component membership under
    // pairwise contiguity over all 27 vertex maps
    std::vector<std::vector<VertexId>> maps;
    for (VertexId x = 0; x < 3; ++x)
        for (VertexId y = 0; y < 3; ++y)
            for (VertexId z = 0; z < 3; ++z) maps.push_back({x, y, z});
    auto as_map = [&](const std::vector<VertexId>& a) {
        std::map<Label, Label> t;
        for (int i = 0; i < 3; ++i) t[k.label(i)] = k.label(a[i]);
        return SimplicialMap(k, k, t);
    };
    // union-find over the 27 maps
    std::vector<int> parent(maps.size());
    for (size_t i = 0; i < maps.size(); ++i) parent[i] = (int)i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (size_t i = 0; i < maps.size(); ++i)
        for (size_t j = i + 1; j < maps.size(); ++j)
            if (are_contiguous(as_map(maps[i]), as_map(maps[j]))) parent[find((int)i)] = find((int)j);
    auto id_idx = find(0 * 9 + 1 * 3 + 2); // identity assignment (a,b,c)
    for (VertexId v = 0; v < 3; ++v) {
        int const_idx = find((int)(v * 9 + v * 3 + v));
        CHECK(const_idx != id_idx);
    }
}

TEST_CASE("reaches_constant finds the cone point quickly") {
    auto d2 = triangle();
    auto res = reaches_constant(SimplicialMap::identity(d2));
    CHECK(res.verdict == Tri::Yes);
    CHECK(res.chain.size() >= 1);
    // consecutive chain entries are contiguous and the last is constant
    for (size_t i = 0; i + 1 < res.chain.size(); ++i) {
        SimplicialMap f(d2, d2, res.chain[i]);
        SimplicialMap g(d2, d2, res.chain[i + 1]);
        CHECK(are_contiguous(f, g));
    }
    auto last = res.chain.back();
    for (const auto& [from, to] : last) CHECK(to == last.begin()->second);
}

TEST_CASE("state cap produces unknown, not no") {
    // on the solid tetrahedron every vertex map is simplicial and
    // contiguous with the identity, so a tiny cap must trip
    auto k = solid_tetrahedron();
    auto id = SimplicialMap::identity(k);
    auto res = same_contiguity_class(id, SimplicialMap::constant(k, k, "a"), 3);
    CHECK(res.verdict == Tri::Unknown);
}

TEST_CASE("is_categorical examples") {
    auto d2 = triangle();
    // the closed star of a vertex is always categorical
    auto star = d2.generated_subcomplex({{"a", "b", "c"}});
    CHECK(is_categorical(star, d2).verdict == Tri::Yes);

    // the empty triangle inside itself is not
    auto k = c3();
    auto res = is_categorical(k, k);
    CHECK(res.verdict == Tri::No);

    // ... but inside the solid triangle it is
    auto bd = boundary_triangle_in(d2);
    auto res2 = is_categorical(bd, d2);
    CHECK(res2.verdict == Tri::Yes);
    REQUIRE(res2.witness_vertex.has_value());

    auto stray = SimplicialComplex::from_facets({{"x", "y"}});
    CHECK_THROWS_AS((void)is_categorical(stray, boundary_tetrahedron()), Error);
}

TEST_CASE("certificate chain of is_categorical replays") {
    auto d2 = triangle();
    auto bd = boundary_triangle_in(d2);
    auto res = is_categorical(bd, d2);
    REQUIRE(res.verdict == Tri::Yes);
    REQUIRE(!res.chain.empty());
    // the collapse is from U to U's core and the chain starts at the
    // core's inclusion into K
    CHECK(verify_collapse_sequence(res.collapse).ok);
    const auto& first = res.chain.front();
    for (const auto& l : res.collapse.end.labels()) CHECK(first.at(l) == l);
    for (size_t i = 0; i + 1 < res.chain.size(); ++i) {
        SimplicialMap f(res.collapse.end, d2, res.chain[i]);
        SimplicialMap g(res.collapse.end, d2, res.chain[i + 1]);
        CHECK(are_contiguous(f, g));
    }
}

TEST_CASE("strongly collapsible subcomplexes are categorical") {
    std::mt19937 rng(1212);
    int tested = 0;
    for (int iter = 0; iter < 400 && tested < 60; ++iter) {
        auto k = random_complex(rng, 7, 8, 3);
        // a random generated subcomplex
        std::uniform_int_distribution<int> nf(1, (int)k.facets().size());
        int take = nf(rng);
        std::vector<std::vector<Label>> gens;
        for (int i = 0; i < take; ++i) gens.push_back(k.facet_labels()[i]);
        auto u = k.generated_subcomplex(gens);
        if (!is_strongly_collapsible(u).collapsible) continue;
        CHECK(is_categorical(u, k).verdict == Tri::Yes);
        ++tested;
    }
    CHECK(tested >= 40);
}

TEST_CASE("composition preserves contiguity on random map pairs") {
    std::mt19937 rng(909);
    int tested = 0;
    for (int iter = 0; iter < 2000 && tested < 300; ++iter) {
        auto k = random_complex(rng, 5, 5, 2);
        auto l = random_complex(rng, 5, 5, 2);
        auto m = random_complex(rng, 5, 5, 2);
        // random simplicial maps by mutating constants
        auto randmap = [&](const SimplicialComplex& s, const SimplicialComplex& t) {
            std::uniform_int_distribution<int> pickv(0, t.vertex_count() - 1);
            auto a = SimplicialMap::constant(s, t, t.label(pickv(rng))).assignment_labels();
            for (int tries = 0; tries < 10; ++tries) {
                auto b = a;
                std::uniform_int_distribution<int> picks(0, s.vertex_count() - 1);
                b[s.label(picks(rng))] = t.label(pickv(rng));
                try {
                    SimplicialMap probe(s, t, b);
                    a = b;
                } catch (const Error&) {
                }
            }
            return SimplicialMap(s, t, a);
        };
        auto f = randmap(k, l);
        auto g = randmap(k, l);
        if (!are_contiguous(f, g)) continue;
        auto h = randmap(l, m);
        auto pre = randmap(m, k);
        CHECK(are_contiguous(compose(h, f), compose(h, g)));
        CHECK(are_contiguous(compose(f, pre), compose(g, pre)));
        ++tested;
    }
    CHECK(tested >= 100);
}
