#include <doctest.h>

#include <random>

#include "cocon/complex.hpp"
#include "cocon/fixtures.hpp"
#include "cocon/graph.hpp"
#include "cocon/limits.hpp"
#include "oracles.hpp"

using namespace cocon;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(n, edges);
}

SimplicialComplex random_complex(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
    std::vector<VertexSet> gens;
    const int count = 1 + static_cast<int>(pick(rng) % 6);
    for (int i = 0; i < count; ++i) gens.emplace_back(pick(rng));
    return SimplicialComplex(VertexSet::range(n), gens);
}

}  // namespace

TEST_CASE("void, empty and simplex conventions")
{
    const VertexSet g = VertexSet::range(3);
    const auto v = SimplicialComplex::void_complex(g);
    const auto e = SimplicialComplex::empty_complex(g);
    const auto s = SimplicialComplex::simplex(g);
    CHECK(v.is_void());
    CHECK(v.dimension() == -2);
    CHECK(e.is_empty_complex());
    CHECK(e.dimension() == -1);
    CHECK(e.is_simplex());
    CHECK(s.dimension() == 2);
    CHECK(f_vector(v).empty());
    CHECK(f_vector(e) == std::vector<std::size_t>{1});
    CHECK(f_vector(s) == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK_THROWS_AS(SimplicialComplex(g, {VertexSet{4}}), std::invalid_argument);
}

TEST_CASE("facets form a sorted antichain")
{
    const SimplicialComplex d(VertexSet::range(4), {VertexSet{0, 1}, VertexSet{0}, VertexSet{2, 3}, VertexSet{0, 1}});
    CHECK(d.facets() == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{2, 3}});
    CHECK(d.is_pure());
    CHECK(d.contains_face(VertexSet{3}));
    CHECK_FALSE(d.contains_face(VertexSet{1, 2}));
    CHECK(maximal_sets({VertexSet{0}, VertexSet{0, 1}}) == std::vector<VertexSet>{VertexSet{0, 1}});
    CHECK(minimal_sets({VertexSet{0}, VertexSet{0, 1}}) == std::vector<VertexSet>{VertexSet{0}});
}

TEST_CASE("six-vertex example: support and facets")
{
    const Graph g = fixtures::chordal_example();
    CHECK(supp_r(g, VertexSet{0}, 2) == fixtures::chordal_example_support());
    const SimplicialComplex s = sigma_r(g, VertexSet{0}, 2);
    CHECK(s.facets() == maximal_sets(fixtures::chordal_example_facets()));
    CHECK(s.ground() == (g.vertices() - VertexSet{0}));
}

TEST_CASE("sigma and ind match brute force")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + trial % 4;
        const Graph g = random_graph(n, 0.4, rng);
        const int r = 1 + trial % 3;
        VertexSet a;
        if (trial % 2 == 1) a.insert(static_cast<Vertex>(rng() % n));
        CHECK(oracle::key(sigma_r(g, a, r).facets()) == oracle::key(oracle::sigma_facets(g, a, r)));
        CHECK(oracle::key(ind_r(g, r + 1).facets()) == oracle::key(oracle::ind_facets(g, r + 1)));
    }
}

TEST_CASE("Ind_r is the Alexander dual of Sigma_r")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(6, 0.45, rng);
        const int r = 2 + trial % 3;
        CHECK(alexander_dual(sigma_r(g, {}, r)) == ind_r(g, r));
    }
}

TEST_CASE("dual, link and deletion match brute force")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 80; ++trial) {
        const SimplicialComplex d = random_complex(6, rng);
        const SimplicialComplex dual = alexander_dual(d);
        CHECK(oracle::key(dual.facets()) == oracle::key(oracle::dual_facets(d.ground(), d.facets())));
        CHECK(alexander_dual(dual) == d);

        for (VertexSet f : oracle::faces(d.facets())) {
            CHECK(oracle::key(link(d, f).facets()) == oracle::key(oracle::link_facets(d.facets(), f)));
        }
        for (Vertex x : d.ground()) {
            CHECK(oracle::key(del_face(d, VertexSet{x}).facets()) == oracle::key(oracle::del_facets(d.facets(), x)));
        }
        std::size_t faces = 0;
        for (std::size_t k : f_vector(d)) faces += k;
        CHECK(faces == oracle::faces(d.facets()).size());
    }
    const SimplicialComplex d(VertexSet::range(3), {VertexSet{0, 1}});
    CHECK_THROWS_AS(link(d, VertexSet{2}), std::invalid_argument);
}

TEST_CASE("minimal non-faces")
{
    const SimplicialComplex d(VertexSet::range(3), {VertexSet{0, 1}, VertexSet{1, 2}});
    CHECK(minimal_nonfaces(d) == std::vector<VertexSet>{VertexSet{0, 2}});
    CHECK(minimal_nonfaces(SimplicialComplex::simplex(VertexSet::range(3))).empty());
}

TEST_CASE("joins, unions and relabeling")
{
    const SimplicialComplex a(VertexSet{0, 1}, {VertexSet{0}, VertexSet{1}});
    const SimplicialComplex b(VertexSet{2, 3}, {VertexSet{2}, VertexSet{3}});
    const SimplicialComplex j = join_complex(a, b);
    CHECK(j.facet_count() == 4);
    CHECK(j.dimension() == 1);
    CHECK(union_complex(a, b).facet_count() == 4);
    CHECK(induced_subcomplex(j, VertexSet{0, 2}).facets() == std::vector<VertexSet>{VertexSet{0, 2}});
    CHECK(shift(a, 2) == SimplicialComplex(VertexSet{2, 3}, {VertexSet{2}, VertexSet{3}}));
    CHECK(relabel(a, {5, 7}) == SimplicialComplex(VertexSet{5, 7}, {VertexSet{5}, VertexSet{7}}));
}

TEST_CASE("face enumeration respects the bound")
{
    Limits tight;
    tight.max_faces = 10;
    CHECK_THROWS_AS(faces_by_size(SimplicialComplex::simplex(VertexSet::range(6)), tight), BoundExceeded);
}
