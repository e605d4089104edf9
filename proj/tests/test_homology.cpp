#include <doctest.h>

#include <random>

#include "cocon/complex.hpp"
#include "cocon/fixtures.hpp"
#include "cocon/graph.hpp"
#include "cocon/homology.hpp"
#include "oracles.hpp"

using namespace cocon;

namespace {

SimplicialComplex random_complex(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
    std::vector<VertexSet> gens;
    const int count = 1 + static_cast<int>(pick(rng) % 7);
    for (int i = 0; i < count; ++i) gens.emplace_back(pick(rng));
    return SimplicialComplex(VertexSet::range(n), gens);
}

SimplicialComplex sphere(int dim)
{
    const VertexSet ground = VertexSet::range(dim + 2);
    std::vector<VertexSet> facets;
    for (Vertex v : ground) facets.push_back(ground.without(v));
    return SimplicialComplex(ground, facets);
}

std::vector<long> as_long(const BettiProfile& b)
{
    return {b.betti.begin(), b.betti.end()};
}

}  // namespace

TEST_CASE("field specs")
{
    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("F2") == FieldSpec::prime(2));
    CHECK(FieldSpec::parse("Fp:5").characteristic == 5);
    CHECK(FieldSpec::prime(3).name() == "Fp:3");
    CHECK_THROWS_AS(FieldSpec::parse("F4"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("Fp:6"), std::invalid_argument);
}

TEST_CASE("matrix rank and Smith form")
{
    const std::vector<std::vector<std::int64_t>> m{{2, 0}, {0, 2}};
    CHECK(matrix_rank(m, FieldSpec::rationals()) == 2);
    CHECK(matrix_rank(m, FieldSpec::prime(2)) == 0);
    CHECK(smith_invariant_factors(m) == std::vector<std::int64_t>{2, 2});
    CHECK(smith_invariant_factors({{1, 2}, {3, 4}}) == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("spheres and conventions")
{
    for (int d = 0; d <= 3; ++d) {
        const BettiProfile b = reduced_betti(sphere(d), FieldSpec::rationals());
        CHECK(b.at(d) == 1);
        CHECK(b.top_nonzero() == d);
    }
    CHECK(reduced_betti(SimplicialComplex::empty_complex(VertexSet{}), FieldSpec::rationals()).at(-1) == 1);
    CHECK(reduced_betti(SimplicialComplex::void_complex(VertexSet{}), FieldSpec::rationals()).acyclic());
    CHECK(reduced_betti(SimplicialComplex::simplex(VertexSet::range(4)), FieldSpec::prime(2)).acyclic());
}

TEST_CASE("the projective plane has 2-torsion")
{
    const SimplicialComplex rp2 = fixtures::projective_plane();
    CHECK(rp2.facet_count() == 10);
    CHECK(reduced_betti(rp2, FieldSpec::rationals()).acyclic());
    const BettiProfile f2 = reduced_betti(rp2, FieldSpec::prime(2));
    CHECK(f2.at(1) == 1);
    CHECK(f2.at(2) == 1);
    const BettiProfile z = integer_homology(rp2);
    CHECK(z.at(1) == 0);
    REQUIRE(z.torsion.count(1) == 1);
    CHECK(z.torsion.at(1) == std::vector<std::int64_t>{2});

    CHECK(is_cohen_macaulay(rp2, FieldSpec::rationals()).cohen_macaulay);
    const CohenMacaulayResult cm2 = is_cohen_macaulay(rp2, FieldSpec::prime(2));
    CHECK_FALSE(cm2.cohen_macaulay);
    REQUIRE(cm2.failing_face.has_value());
    CHECK(cm2.failing_face->empty());
    CHECK(cm2.failing_dimension == 1);
}

TEST_CASE("Betti numbers and Reisner's criterion match brute force")
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const SimplicialComplex d = random_complex(6, rng);
        for (int p : {0, 2, 3}) {
            const FieldSpec field = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
            CHECK(as_long(reduced_betti(d, field)) == oracle::reduced_betti(d.facets(), p));
            CHECK(is_cohen_macaulay(d, field).cohen_macaulay == oracle::cohen_macaulay(d.facets(), p));
        }
    }
}

TEST_CASE("Euler characteristic identity")
{
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        const SimplicialComplex d = random_complex(7, rng);
        const auto f = f_vector(d);
        const auto b = reduced_betti(d, FieldSpec::rationals());
        long fsum = 0;
        long bsum = 0;
        for (std::size_t i = 0; i < f.size(); ++i) fsum += (i % 2 == 0 ? -1 : 1) * static_cast<long>(f[i]);
        for (std::size_t i = 0; i < b.betti.size(); ++i) bsum += (i % 2 == 0 ? -1 : 1) * b.betti[i];
        CHECK(fsum == bsum);
    }
}

TEST_CASE("Leray number")
{
    // a simplex has Leray number 0; the boundary of a triangle has 2
    CHECK(leray_number(SimplicialComplex::simplex(VertexSet::range(3))) == 0);
    CHECK(leray_number(sphere(1)) == 2);
    // the independence complex of C_5 is again a 5-cycle
    const SimplicialComplex ind = ind_r(cycle_graph(5), 2);
    CHECK(leray_number(ind) == 2);
}

TEST_CASE("linear resolution through the dual")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const SimplicialComplex d = random_complex(6, rng);
        CHECK(dual_has_linear_resolution(d, FieldSpec::rationals()) ==
              is_cohen_macaulay(alexander_dual(d), FieldSpec::rationals()).cohen_macaulay);
    }
    CHECK(dual_has_linear_resolution(ind_r(complete_graph(4), 2), FieldSpec::rationals()));
}
