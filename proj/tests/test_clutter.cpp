#include <doctest.h>

#include <random>

#include "cocon/clutter.hpp"
#include "cocon/fixtures.hpp"
#include "cocon/graph.hpp"
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

}  // namespace

TEST_CASE("clutter construction")
{
    const Clutter h(4, 2, {VertexSet{2, 3}, VertexSet{0, 1}, VertexSet{0, 1}});
    CHECK(h.size() == 2);
    CHECK(h.circuits().front() == VertexSet{0, 1});
    CHECK(h.contains(VertexSet{2, 3}));
    CHECK_THROWS_AS(Clutter(4, 2, {VertexSet{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Clutter(3, 2, {VertexSet{0, 5}}), std::invalid_argument);
}

TEST_CASE("complement clutters and cliques")
{
    const Clutter c = con_r(path_graph(4), 2);
    CHECK(c.size() == 3);
    const Clutter bar = complement_clutter(c);
    CHECK(bar.size() == 3);
    CHECK(complement_clutter(bar) == c);
    CHECK(is_clique(con_r(complete_graph(4), 3), VertexSet::range(4)));
    CHECK_FALSE(is_clique(c, VertexSet{0, 1, 2}));
    CHECK(deletion_d(c, VertexSet{1}).size() == 1);
    CHECK(clutter_closed_neighborhood(c, VertexSet{1}) == VertexSet{0, 1, 2});
}

TEST_CASE("graph chordality agrees with clutter chordality for d = 2")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(6, 0.5, rng);
        const Clutter h = con_r(g, 2);
        const ChordalClutterResult res = is_chordal_clutter(h);
        CHECK(res.chordal == is_chordal(g).chordal);
    }
}

TEST_CASE("clutter chordality matches plain backtracking")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 4 + trial % 3;
        const int r = 2 + trial % 2;
        const Graph g = random_graph(n, 0.45, rng);
        const Clutter h = complement_clutter(con_r(g, r));
        const bool expected = oracle::chordal_clutter(h.circuits(), h.d());
        const ChordalClutterResult res = is_chordal_clutter(h);
        REQUIRE(res.chordal == expected);
        if (res.chordal) {
            REQUIRE(res.certificate.has_value());
            CHECK(verify_elimination(h, *res.certificate).ok);
        } else {
            REQUIRE(res.obstruction.has_value());
            // the obstruction's induced subclutter is itself non-chordal
            std::vector<VertexSet> inside;
            for (VertexSet e : h.circuits()) {
                if (e.subset_of(*res.obstruction)) inside.push_back(e);
            }
            CHECK_FALSE(oracle::chordal_clutter(inside, h.d()));
        }
    }
}

TEST_CASE("cycle complements of Con_r")
{
    // complement of Con_r(C_n) is chordal exactly when n <= r + 2
    for (int n = 4; n <= 7; ++n) {
        for (int r = 2; r <= 4; ++r) {
            const Clutter h = complement_clutter(con_r(cycle_graph(n), r));
            CHECK(is_chordal_clutter(h).chordal == (n <= r + 2));
        }
    }
}

TEST_CASE("elimination replay flags the first bad step")
{
    const Clutter h = complement_clutter(con_r(fixtures::gap_free_example(), 3));
    EliminationCertificate cert = fixtures::gap_free_elimination();
    CHECK(cert.subcircuits.size() == 20);
    CHECK(verify_elimination(h, cert).ok);

    std::swap(cert.subcircuits.front(), cert.subcircuits.back());
    const EliminationReplay bad = verify_elimination(h, cert);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.failed_step.has_value());

    EliminationCertificate short_cert = fixtures::gap_free_elimination();
    short_cert.subcircuits.pop_back();
    const EliminationReplay partial = verify_elimination(h, short_cert);
    CHECK_FALSE(partial.ok);
    CHECK(partial.remaining_circuits > 0);
}

TEST_CASE("simplicial subcircuits match the definition")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(6, 0.5, rng);
        const Clutter h = complement_clutter(con_r(g, 3));
        for (VertexSet z : simplicial_maximal_subcircuits(h)) {
            CHECK(is_simplicial_maximal_subcircuit(h, z));
            CHECK(is_clique(h, oracle::closed_neighborhood(h.circuits(), z)));
        }
    }
}

TEST_CASE("matching numbers match subset enumeration")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(7, 0.35, rng);
        const int r = 2 + trial % 2;
        const Clutter h = con_r(g, r);
        if (h.size() > 18) continue;
        const MatchingNumbers m = matching_numbers(h);
        CHECK(m.matching == oracle::matching(h.circuits(), false));
        CHECK(m.induced_matching == oracle::matching(h.circuits(), true));
        CHECK(m.induced_matching <= m.matching);
        CHECK(is_r_gap_free(g, r).gap_free == oracle::gap_free(g, r));
    }
}

TEST_CASE("gap witnesses are induced matchings")
{
    const GapFreeResult res = is_r_gap_free(ladder_graph(5), 3);
    CHECK_FALSE(res.gap_free);
    REQUIRE(res.gap.has_value());
    const Clutter h = con_r(ladder_graph(5), 3);
    CHECK(is_induced_matching(h, {res.gap->first, res.gap->second}));

    const auto [a, b] = fixtures::ladder_gap(5, 3);
    CHECK(is_induced_matching(h, {a, b}));
    CHECK(is_r_gap_free(fixtures::gap_free_example(), 3).gap_free);
}

TEST_CASE("bounded searches throw")
{
    Limits tight;
    tight.max_circuits = 3;
    CHECK_THROWS_AS(matching_numbers(con_r(complete_graph(5), 2), tight), BoundExceeded);
}
