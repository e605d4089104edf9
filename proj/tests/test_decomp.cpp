#include <doctest.h>

#include <algorithm>
#include <random>

#include "cocon/complex.hpp"
#include "cocon/decomp.hpp"
#include "cocon/fixtures.hpp"
#include "cocon/graph.hpp"
#include "cocon/homology.hpp"
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

Graph random_connected_graph(int n, std::mt19937_64& rng)
{
    while (true) {
        const Graph g = random_graph(n, 0.4, rng);
        if (is_connected(g)) return g;
    }
}

SimplicialComplex random_complex(int n, int max_facets, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
    std::vector<VertexSet> gens;
    const int count = 1 + static_cast<int>(pick(rng) % max_facets);
    for (int i = 0; i < count; ++i) gens.emplace_back(pick(rng));
    return SimplicialComplex(VertexSet::range(n), gens);
}

}  // namespace

TEST_CASE("vertex decomposability matches the literal recursion")
{
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 150; ++trial) {
        const SimplicialComplex d = random_complex(6, 7, rng);
        const VdResult res = is_vertex_decomposable(d);
        CHECK(res.decomposable == oracle::vertex_decomposable(d.facets()));
        if (res.decomposable) {
            REQUIRE(res.certificate.has_value());
            CHECK(verify_vd_certificate(d, *res.certificate));
        }
    }
}

TEST_CASE("shellability matches trying every order")
{
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 150; ++trial) {
        const SimplicialComplex d = random_complex(6, 6, rng);
        const ShellingResult res = find_shelling(d);
        CHECK(res.shellable == oracle::shellable(d.facets()));
        if (res.shellable) {
            CHECK(verify_shelling(d, res.order).ok);
            CHECK(oracle::is_shelling(res.order));
        }
    }
}

TEST_CASE("decomposability hierarchy on random Sigma_r")
{
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(6, 0.45, rng);
        const SimplicialComplex s = sigma_r(g, {}, 2 + trial % 3);
        if (s.facet_count() > 30) continue;
        const bool vd = is_vertex_decomposable(s).decomposable;
        const bool sh = find_shelling(s).shellable;
        const bool cm = is_cohen_macaulay(s, FieldSpec::rationals()).cohen_macaulay;
        if (vd) CHECK(sh);
        if (sh && s.is_pure()) CHECK(cm);
    }
}

TEST_CASE("the three shedding tests agree")
{
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + trial % 3;
        const Graph g = random_graph(n, 0.45, rng);
        const int r = 2 + trial % 3;
        const SimplicialComplex s = sigma_r(g, {}, r);
        for (Vertex x = 0; x < n; ++x) {
            const bool generic = is_shedding_generic(s, x);
            CHECK(is_shedding_supp(g, {}, r, x) == generic);
            CHECK(is_shedding_conr(g, r, x) == generic);
        }
    }
    CHECK_THROWS_AS(is_shedding_generic(sigma_r(path_graph(3), {}, 2), 5), std::invalid_argument);
}

TEST_CASE("ordering search agrees with generic decomposability")
{
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_connected_graph(4 + trial % 4, rng);
        const int r = 2 + trial % 2;
        const SheddingOrderResult ord = vd_sigma_via_ordering(g, r);
        CHECK(ord.decomposable == is_vertex_decomposable(sigma_r(g, {}, r)).decomposable);
        if (ord.decomposable) CHECK(verify_shedding_order(g, r, ord.order).ok);
    }
}

TEST_CASE("shedding orders on ladders and grids")
{
    // the middle rung sheds P_n x P_2 down to a single connected r-set when n <= r
    CHECK(verify_shedding_order(ladder_graph(4), 4, fixtures::ladder_order(4)).ok);
    CHECK(verify_shedding_order(grid3_graph(3), 6, fixtures::grid3_order(3)).ok);
    const OrderCheck bad = verify_shedding_order(cycle_graph(6), 2, {0, 1});
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.failing_index.has_value());
}

TEST_CASE("gap-free example: shellable without a shedding vertex")
{
    const Graph g = fixtures::gap_free_example();
    const SimplicialComplex s = sigma_r(g, {}, 3);
    CHECK(s.facet_count() == 26);
    CHECK(verify_shelling(s, fixtures::gap_free_shelling()).ok);
    for (Vertex x : s.ground()) CHECK_FALSE(is_shedding_generic(s, x));
    CHECK_FALSE(is_vertex_decomposable(s).decomposable);
    CHECK_FALSE(vd_sigma_via_ordering(g, 3).decomposable);
}

TEST_CASE("shelling replay catches reordering")
{
    const SimplicialComplex s = sigma_r(fixtures::gap_free_example(), {}, 3);
    std::vector<VertexSet> order = fixtures::gap_free_shelling();
    std::reverse(order.begin(), order.end());
    const OrderCheck res = verify_shelling(s, order);
    CHECK(res.ok == oracle::is_shelling(order));
    order.pop_back();
    CHECK_THROWS_AS(verify_shelling(s, order), std::invalid_argument);
}

TEST_CASE("h-vector")
{
    // boundary of a triangle: f = (1, 3, 3), h = (1, 1, 1)
    const VertexSet g = VertexSet::range(3);
    const SimplicialComplex c(g, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 2}});
    CHECK(h_vector(c) == std::vector<long long>{1, 1, 1});
    CHECK(h_vector(SimplicialComplex::simplex(g)) == std::vector<long long>{1, 0, 0, 0});
}

TEST_CASE("shelling conventions and bounds")
{
    CHECK(find_shelling(SimplicialComplex::empty_complex(VertexSet{})).shellable);
    CHECK(find_shelling(SimplicialComplex::void_complex(VertexSet{})).shellable);
    // two disjoint edges are not shellable
    const SimplicialComplex two(VertexSet::range(4), {VertexSet{0, 1}, VertexSet{2, 3}});
    CHECK_FALSE(find_shelling(two).shellable);
    Limits tight;
    tight.max_shelling_facets = 5;
    CHECK_THROWS_AS(find_shelling(sigma_r(cycle_graph(8), {}, 2), tight), BoundExceeded);
}

TEST_CASE("cycles are decomposable iff n <= r + 2")
{
    for (int n = 4; n <= 7; ++n) {
        for (int r = 2; r <= 4; ++r) {
            const SimplicialComplex s = sigma_r(cycle_graph(n), {}, r);
            CHECK(is_vertex_decomposable(s).decomposable == (n <= r + 2));
            CHECK(find_shelling(s).shellable == (n <= r + 2));
        }
    }
}
