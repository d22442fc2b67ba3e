#pragma once

#include "lscat/complex.hpp"

#include <random>
#include <vector>

namespace lscat::fixtures {

inline SimplicialComplex triangle() {
    return SimplicialComplex::from_facets({{"a", "b", "c"}});
}

/// Empty triangle: three edges forming a cycle.
inline SimplicialComplex c3() {
    return SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

inline SimplicialComplex boundary_tetrahedron() {
    return SimplicialComplex::from_facets(
        {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

inline SimplicialComplex solid_tetrahedron() {
    return SimplicialComplex::from_facets({{"a", "b", "c", "d"}});
}

/// Octahedron sphere: poles n, s over the square e, f, w, b.
inline SimplicialComplex octahedron() {
    return SimplicialComplex::from_facets({{"n", "e", "f"},
                                           {"n", "f", "w"},
                                           {"n", "w", "b"},
                                           {"n", "b", "e"},
                                           {"s", "e", "f"},
                                           {"s", "f", "w"},
                                           {"s", "w", "b"},
                                           {"s", "b", "e"}});
}

/// Two triangles sharing only the vertex p.
inline SimplicialComplex two_triangles_pinched() {
    return SimplicialComplex::from_facets({{"p", "a", "b"}, {"p", "x", "y"}});
}

/// Two tetrahedron boundaries glued at the vertex p: a pinched pair of
/// spheres (the link of p is two disjoint 3-cycles).
inline SimplicialComplex pinched_spheres() {
    return SimplicialComplex::from_facets({{"p", "a", "b"},
                                           {"p", "a", "c"},
                                           {"p", "b", "c"},
                                           {"a", "b", "c"},
                                           {"p", "x", "y"},
                                           {"p", "x", "z"},
                                           {"p", "y", "z"},
                                           {"x", "y", "z"}});
}

inline SimplicialComplex disjoint_two_c3() {
    return SimplicialComplex::from_facets(
        {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"x", "y"}, {"y", "z"}, {"z", "x"}});
}

/// Deterministic pseudo-random complex on at most max_v vertices.
inline SimplicialComplex random_complex(std::mt19937& rng, int max_v = 8, int max_facets = 10,
                                        int max_dim = 3) {
    std::uniform_int_distribution<int> nv(1, max_v);
    int n = nv(rng);
    std::uniform_int_distribution<int> nf(1, max_facets);
    int m = nf(rng);
    std::vector<std::vector<Label>> facets;
    std::uniform_int_distribution<int> dim(0, max_dim);
    for (int i = 0; i < m; ++i) {
        int d = std::min(dim(rng), n - 1);
        std::vector<int> pool(n);
        for (int j = 0; j < n; ++j) pool[j] = j;
        std::vector<Label> facet;
        for (int j = 0; j <= d; ++j) {
            std::uniform_int_distribution<int> pick(0, (int)pool.size() - 1);
            int idx = pick(rng);
            facet.push_back("v" + std::to_string(pool[idx]));
            pool.erase(pool.begin() + idx);
        }
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(facets);
}

} // namespace lscat::fixtures
