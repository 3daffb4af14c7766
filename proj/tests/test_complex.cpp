#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "fcx/complex.hpp"
#include "fcx/rng.hpp"

using namespace fcx;

namespace {

bool is_antichain(const SimplicialComplex& k) {
    const auto& f = k.facets();
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
            if (i != j && f[j].contains(f[i])) return false;
    return true;
}

long long count_forest_subsets(const Graph& g, const DegreeBound& d) {
    long long total = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << g.n); ++mask) {
        VertexSet s;
        for (int v = 0; v < g.n; ++v)
            if (mask >> v & 1) s.set(v);
        if (induced_forest_check(g, s, d)) ++total;
    }
    return total;
}

// Smallest r such that no vertex has an independent set of size r in its
// neighborhood, i.e. the graph has no induced star K_{1,r}.
int min_star_free(const Graph& g) {
    int best = 1;
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> nb = g.adj[v].to_vector();
        int m = static_cast<int>(nb.size());
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
            VertexSet s;
            int size = 0;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) {
                    s.set(nb[i]);
                    ++size;
                }
            bool independent = true;
            s.for_each([&](int u) {
                if ((g.adj[u] & s).any()) independent = false;
            });
            if (independent) best = std::max(best, size + 1);
        }
    }
    return best;
}

} // namespace

TEST_CASE("void and empty complexes") {
    auto v = SimplicialComplex::void_complex(3);
    auto e = SimplicialComplex::empty_complex(3);
    CHECK(v.is_void());
    CHECK(!v.is_empty_complex());
    CHECK(v.dim() == kVoidDim);
    CHECK(e.is_empty_complex());
    CHECK(e.dim() == -1);
    CHECK(!v.contains(VertexSet{}));
    CHECK(e.contains(VertexSet{}));
    CHECK(forest_complex(make_graph(0, {}), DegreeBound::unbounded()) ==
          SimplicialComplex::empty_complex(0));
}

TEST_CASE("forest complex facets") {
    auto c4 = forest_complex(cycle_graph(4), DegreeBound::unbounded());
    CHECK(c4.facets().size() == 4); // boundary of the tetrahedron
    CHECK(c4.dim() == 2);

    auto k4 = forest_complex(complete_graph(4), DegreeBound::finite(1));
    CHECK(k4.facets().size() == 6);
    CHECK(k4.dim() == 1);

    auto p3 = forest_complex(path_graph(3), DegreeBound::finite(0));
    CHECK(p3.facets() == std::vector<VertexSet>{VertexSet::of({0, 2}), VertexSet::of({1})});

    CHECK_THROWS_AS(forest_complex(petersen_graph(), DegreeBound::unbounded(),
                                   Budget{.max_faces_per_dim = 10, .max_facets = 10}),
                    CapacityError);
}

TEST_CASE("faces_of_dim and t_d") {
    CHECK(faces_of_dim(cycle_graph(5), DegreeBound::unbounded(), 4).empty());
    CHECK(faces_of_dim(complete_graph(3), DegreeBound::finite(1), 1).size() == 3);
    CHECK(faces_of_dim(complete_graph(3), DegreeBound::finite(1), -1).size() == 1);

    DegreeBound inf = DegreeBound::unbounded();
    Graph pet = petersen_graph();
    long long total = 0;
    for (int q = 0; q < pet.n; ++q)
        total += static_cast<long long>(faces_of_dim(pet, inf, q).size());
    CHECK(total == count_forest_subsets(pet, inf));
    auto counts = face_counts(pet, inf, pet.n - 1);
    long long total2 = 0;
    for (auto c : counts) total2 += c;
    CHECK(total2 == total);

    for (int n : {3, 5, 8}) CHECK(t_d(cycle_graph(n), inf) == n - 1);
    for (int n : {2, 4, 6}) CHECK(t_d(complete_graph(n), DegreeBound::finite(1)) == 2);

    // Faces come out lexicographically sorted.
    auto fs = faces_of_dim(pet, inf, 2);
    CHECK(std::is_sorted(fs.begin(), fs.end(), VertexSetLexLess{}));
}

TEST_CASE("skeleton") {
    auto simplex3 = SimplicialComplex::simplex(4);
    auto sk1 = skeleton(simplex3, 1);
    CHECK(sk1.facets().size() == 6);
    CHECK(sk1.dim() == 1);
    auto full = forest_complex(cycle_graph(5), DegreeBound::unbounded());
    CHECK(skeleton(full, full.dim()) == full);
    CHECK(skeleton(full, -1) == SimplicialComplex::empty_complex(5));
    CHECK(skeleton(SimplicialComplex::void_complex(2), 1).is_void());
}

TEST_CASE("link and star") {
    auto s1 = skeleton(SimplicialComplex::simplex(3), 1); // boundary of a triangle
    auto lk = link(s1, VertexSet::of({0}));
    CHECK(lk.facets() == std::vector<VertexSet>{VertexSet::of({1}), VertexSet::of({2})});
    CHECK(link(s1, VertexSet::of({0, 1, 2})).is_void()); // not a face
    auto st = star(s1, VertexSet::of({0}));
    CHECK(st.facets().size() == 2);
    CHECK(st.contains(VertexSet::of({0})));

    // The hub link in the capped wheel complex is a skeleton of the rim's
    // independence complex, facet for facet.
    for (int rim : {5, 6}) {
        for (int d : {1, 2}) {
            auto whole = forest_complex(wheel_graph(rim), DegreeBound::finite(d));
            auto hub_link = link(whole, VertexSet::of({rim}));
            auto sk = skeleton(forest_complex(cycle_graph(rim), DegreeBound::finite(0)),
                               d - 1);
            CHECK(hub_link.facets() == sk.facets());
        }
    }
}

TEST_CASE("join, cone, suspension") {
    auto s0 = SimplicialComplex::two_points();
    auto s1 = join_complex(s0, s0);
    CHECK(s1.facets().size() == 4); // the 4-cycle as a complex
    CHECK(s1.dim() == 1);

    auto k = forest_complex(cycle_graph(4), DegreeBound::finite(1));
    CHECK(join_complex(SimplicialComplex::empty_complex(0), k) == k);
    CHECK(join_complex(SimplicialComplex::void_complex(2), k).is_void());

    auto two_triangles = forest_complex(disjoint_union(cycle_graph(3), cycle_graph(3)),
                                        DegreeBound::unbounded());
    auto joined = join_complex(forest_complex(cycle_graph(3), DegreeBound::unbounded()),
                               forest_complex(cycle_graph(3), DegreeBound::unbounded()));
    CHECK(two_triangles == joined);

    CHECK(suspension(s0).facets().size() == 4);
    CHECK(cone(s0).facets().size() == 2);
    CHECK(cone(SimplicialComplex::empty_complex(0)) == SimplicialComplex::point());
}

TEST_CASE("add_cone_over_subcomplex reproduces capped wheels") {
    for (int rim : {5, 6}) {
        for (int d : {1, 2}) {
            auto base = forest_complex(cycle_graph(rim), DegreeBound::finite(d));
            auto sub = skeleton(forest_complex(cycle_graph(rim), DegreeBound::finite(0)),
                                d - 1);
            auto glued = add_cone_over_subcomplex(base, sub);
            auto wheel = forest_complex(wheel_graph(rim), DegreeBound::finite(d));
            CHECK(glued == wheel);
        }
    }
    auto k = SimplicialComplex::simplex(2);
    CHECK_THROWS_AS(
        add_cone_over_subcomplex(k, SimplicialComplex::from_facets(3, {VertexSet::of({2})})),
        std::invalid_argument);
}

TEST_CASE("alexander dual") {
    auto bd2 = skeleton(SimplicialComplex::simplex(3), 1);
    CHECK(alexander_dual(bd2) == SimplicialComplex::empty_complex(3));

    for (int n = 1; n <= 5; ++n) {
        auto dual = alexander_dual(SimplicialComplex::empty_complex(n));
        // Brute-force face comparison against the boundary of the simplex.
        auto want = skeleton(SimplicialComplex::simplex(n), n - 2);
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            VertexSet s;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) s.set(v);
            CHECK(dual.contains(s) == want.contains(s));
        }
    }

    CHECK(alexander_dual(SimplicialComplex::void_complex(3)) ==
          SimplicialComplex::simplex(3));
    CHECK(alexander_dual(SimplicialComplex::simplex(3)).is_void());

    SplitMix64 rng(77);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(rng.next(), 3 + static_cast<int>(rng.below(4)));
        for (int dv : {0, -1}) {
            DegreeBound d = dv < 0 ? DegreeBound::unbounded() : DegreeBound::finite(dv);
            auto k = forest_complex(g, d);
            CHECK(alexander_dual(alexander_dual(k)) == k);
        }
    }
}

TEST_CASE("f-vector and euler characteristic") {
    auto bd3 = skeleton(SimplicialComplex::simplex(4), 2);
    CHECK(f_vector(bd3) == std::vector<long long>{1, 4, 6, 4});
    CHECK(euler_characteristic(bd3) == 1); // a 2-sphere

    auto k = forest_complex(complete_graph(5), DegreeBound::finite(1));
    CHECK(euler_characteristic(k) == -6); // wedge of six circles

    CHECK(euler_characteristic(SimplicialComplex::empty_complex(4)) == -1);
    CHECK(euler_characteristic(SimplicialComplex::void_complex(4)) == 0);

    // chi of the k-sphere is (-1)^k.
    auto s = SimplicialComplex::two_points();
    for (int dim = 0; dim < 4; ++dim) {
        CHECK(euler_characteristic(s) == (dim % 2 == 0 ? 1 : -1));
        s = suspension(s);
    }
}

TEST_CASE("filtration structure") {
    SplitMix64 rng(5);
    DegreeBound inf = DegreeBound::unbounded();
    for (int t = 0; t < 12; ++t) {
        Graph g = random_graph(rng.next(), 4 + static_cast<int>(rng.below(6)));

        // Monotonicity: faces only grow along the filtration.
        for (int d = 0; d <= 3; ++d)
            for (int q = 0; q < g.n; ++q) {
                auto lo = faces_of_dim(g, DegreeBound::finite(d), q);
                auto hi = faces_of_dim(g, DegreeBound::finite(d + 1), q);
                auto top = faces_of_dim(g, inf, q);
                CHECK(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end(),
                                    VertexSetLexLess{}));
                CHECK(std::includes(top.begin(), top.end(), lo.begin(), lo.end(),
                                    VertexSetLexLess{}));
            }

        // Skeleton agreement below the cap.
        for (int d = 0; d <= 2; ++d)
            for (int i = 0; i <= d; ++i)
                CHECK(faces_of_dim(g, DegreeBound::finite(d), i) ==
                      faces_of_dim(g, DegreeBound::finite(d + 1), i));

        // Stabilization at the star-free threshold.
        int d_stab = min_star_free(g) - 1;
        auto top_complex = forest_complex(g, inf);
        CHECK(forest_complex(g, DegreeBound::finite(d_stab)) == top_complex);
        CHECK(forest_complex(g, DegreeBound::finite(d_stab + 1)) == top_complex);

        // Antichain invariant after construction.
        CHECK(is_antichain(top_complex));
        CHECK(is_antichain(forest_complex(g, DegreeBound::finite(1))));
    }
}

TEST_CASE("cap-1 complexes are determined by their 2-skeleton") {
    SplitMix64 rng(6);
    DegreeBound one = DegreeBound::finite(1);
    for (int t = 0; t < 8; ++t) {
        Graph g = random_graph(rng.next(), 4 + static_cast<int>(rng.below(5)));
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.n); ++mask) {
            VertexSet s;
            for (int v = 0; v < g.n; ++v)
                if (mask >> v & 1) s.set(v);
            if (s.count() < 4) continue;
            bool all_triples = true;
            auto vs = s.to_vector();
            for (std::size_t a = 0; a < vs.size() && all_triples; ++a)
                for (std::size_t b = a + 1; b < vs.size() && all_triples; ++b)
                    for (std::size_t c = b + 1; c < vs.size() && all_triples; ++c)
                        if (!induced_forest_check(g, VertexSet::of({vs[a], vs[b], vs[c]}),
                                                  one))
                            all_triples = false;
            if (all_triples) CHECK(induced_forest_check(g, s, one));
        }
    }
}

TEST_CASE("bridge deletion leaves the uncapped complex unchanged") {
    SplitMix64 rng(8);
    DegreeBound inf = DegreeBound::unbounded();
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(rng.next(), 4 + static_cast<int>(rng.below(5)));
        auto e = g.edges();
        e.emplace_back(0, g.n); // guarantee at least one bridge
        Graph h = make_graph(g.n + 1, e);
        for (auto [u, v] : block_decomposition(h).bridges)
            CHECK(forest_complex(h, inf) == forest_complex(delete_edge(h, u, v), inf));
    }
}

TEST_CASE("barycentric projective plane as a flag complex") {
    Graph h = rp2_barycentric_complement();
    DegreeBound zero = DegreeBound::finite(0);
    CHECK(faces_of_dim(h, zero, 0).size() == 31);
    CHECK(faces_of_dim(h, zero, 1).size() == 90);
    CHECK(faces_of_dim(h, zero, 2).size() == 60);
    CHECK(faces_of_dim(h, zero, 3).empty());
    CHECK(t_d(h, zero) == 3);
}

TEST_CASE("complex json round trip") {
    auto k = forest_complex(double_star(2, 2), DegreeBound::finite(1));
    CHECK(complex_from_json(complex_to_json(k)) == k);
    CHECK(complex_from_json(complex_to_json(SimplicialComplex::void_complex(4))) ==
          SimplicialComplex::void_complex(4));
    CHECK(complex_from_json(complex_to_json(SimplicialComplex::empty_complex(4))) ==
          SimplicialComplex::empty_complex(4));
}
