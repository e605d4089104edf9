#ifndef COCON_DECOMP_HPP
#define COCON_DECOMP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cocon/complex.hpp"
#include "cocon/graph.hpp"
#include "cocon/limits.hpp"

namespace cocon {

/// Every facet of del(x) is a facet of D. Throws std::invalid_argument if x is outside the ground set.
bool is_shedding_generic(const SimplicialComplex& d, Vertex x);

/// Exchange test on Supp_r(A,G): each F missing x has some y in F with F - y + x in Supp_r(A,G).
bool is_shedding_supp(const Graph& g, VertexSet a, int r, Vertex x);

/// A = {} only: Con_r(G - N[x]) has no circuits.
bool is_shedding_conr(const Graph& g, int r, Vertex x);

/// One node per complex visited; leaves are complexes with at most one facet.
struct VdNode {
    SimplicialComplex complex;
    std::optional<Vertex> shedding;
    int link = -1;  // node index
    int del = -1;
};

struct VdCertificate {
    std::vector<VdNode> nodes;  // nodes[0] is the root
};

struct VdResult {
    bool decomposable = false;
    std::optional<VdCertificate> certificate;
    std::size_t states = 0;
};

/**
 * Vertex decomposability by recursive search over shedding vertices, trying the
 * vertex with the fewest deletion facets first. Results are memoized on the facet
 * list with vertices renamed to 0..m-1.
 */
VdResult is_vertex_decomposable(const SimplicialComplex& d);

/// Replays a decomposition tree: complexes, shedding conditions, links and deletions.
bool verify_vd_certificate(const SimplicialComplex& d, const VdCertificate& cert);

struct SheddingOrderResult {
    bool decomposable = false;
    /// x_1..x_k with each x_{i+1} shedding in G - {x_1..x_i}; empty when Con_r(G) has at most one circuit.
    std::vector<Vertex> order;
    std::size_t states = 0;
};

/**
 * Decides whether Sigma_r(G) is vertex decomposable through vertex orderings:
 * repeatedly remove a vertex x with Con_r(G_i - N[x]) empty until at most one
 * connected r-set is left. Depth-first over the remaining vertex set, with failed
 * sets memoized. Requires r >= 2.
 */
SheddingOrderResult vd_sigma_via_ordering(const Graph& g, int r);

struct OrderCheck {
    bool ok = false;
    std::optional<std::size_t> failing_index;
};

/// Checks each step's shedding condition and that k is the first point with at most one circuit.
OrderCheck verify_shedding_order(const Graph& g, int r, const std::vector<Vertex>& order);

struct ShellingResult {
    bool shellable = false;
    std::vector<VertexSet> order;
    /// On no, when the search was cut short: a dimension i below the top with
    /// nonzero reduced rational homology, which no pure shellable complex has.
    std::optional<int> obstruction_dimension;
    std::size_t states = 0;
};

/**
 * Depth-first shelling search. A facet F may follow the placed set S iff its
 * intersection with S is generated by codimension-one faces of F. Whether the
 * search can finish depends only on S, so dead placed sets are memoized. Pure
 * complexes are additionally pruned with the h-vector: restriction sizes must
 * match it in any shelling.
 *
 * A refutation that needs more than a fixed number of states falls back on
 * homology: a pure shellable complex has no reduced homology below its dimension.
 * If that test is inconclusive the search resumes without a budget.
 * Throws BoundExceeded above limits.max_shelling_facets.
 */
ShellingResult find_shelling(const SimplicialComplex& d, const Limits& limits = {});

/// Throws std::invalid_argument unless `order` is a permutation of the facets.
OrderCheck verify_shelling(const SimplicialComplex& d, const std::vector<VertexSet>& order);

/// h-vector of a pure complex from its f-vector.
std::vector<long long> h_vector(const SimplicialComplex& d, const Limits& limits = {});

}  // namespace cocon

#endif
