#ifndef COCON_FIXTURES_HPP
#define COCON_FIXTURES_HPP

#include <utility>
#include <vector>

#include "cocon/clutter.hpp"
#include "cocon/complex.hpp"
#include "cocon/graph.hpp"

// Reference instances with known answers. Data is written 1-based and shifted
// to 0-based ids on load.
namespace cocon::fixtures {

/// Six vertices, edges 12 13 15 23 25 34 56.
Graph chordal_example();
/// Supp_2({x1}) and the five facets of Sigma_2({x1}) for chordal_example().
std::vector<VertexSet> chordal_example_support();
std::vector<VertexSet> chordal_example_facets();

/// Eight-vertex gap-free graph whose Sigma_3 is shellable but has no shedding vertex.
Graph gap_free_example();
/// e_1..e_20: an elimination of the complement of Con_3(gap_free_example()).
EliminationCertificate gap_free_elimination();
/// 26-facet shelling order of Sigma_3(gap_free_example()).
std::vector<VertexSet> gap_free_shelling();

/// Minimal six-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane();

/// Two connected r-sets of P_n x P_2 with no other connected r-set in their union (needs n >= r + 1).
std::pair<VertexSet, VertexSet> ladder_gap(int n, int r);
/// The two-vertex shedding order for P_n x P_2: the middle rung.
std::vector<Vertex> ladder_order(int n);
/// Middle-out ordering of the middle row of P_n x P_3 (n >= 3).
std::vector<Vertex> grid3_order(int n);

}  // namespace cocon::fixtures

#endif
