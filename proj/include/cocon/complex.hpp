#ifndef COCON_COMPLEX_HPP
#define COCON_COMPLEX_HPP

#include <cstddef>
#include <vector>

#include "cocon/graph.hpp"
#include "cocon/limits.hpp"
#include "cocon/vertex_set.hpp"

namespace cocon {

/**
 * A simplicial complex over an explicit ground set, stored by its facets.
 *
 * The void complex has no facets; the empty complex has the single facet {}.
 * Facets are reduced to an antichain at construction and kept in lexicographic order.
 * Ground vertices that lie in no facet are allowed.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Generators may be comparable or repeated. Throws std::invalid_argument if one leaves the ground set.
    SimplicialComplex(VertexSet ground, std::vector<VertexSet> generators);

    static SimplicialComplex void_complex(VertexSet ground) { return SimplicialComplex(ground, {}); }
    static SimplicialComplex empty_complex(VertexSet ground) { return SimplicialComplex(ground, {VertexSet{}}); }
    static SimplicialComplex simplex(VertexSet ground) { return SimplicialComplex(ground, {ground}); }

    VertexSet ground() const { return ground_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_.front().empty(); }
    /// One facet: includes the empty complex, which is the simplex on no vertices.
    bool is_simplex() const { return facets_.size() == 1; }
    bool is_pure() const;
    /// Largest facet size minus one; -1 for the empty complex and -2 for the void complex.
    int dimension() const;
    /// Union of the facets (the vertices actually used).
    VertexSet vertices() const;
    bool contains_face(VertexSet f) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    VertexSet ground_;
    std::vector<VertexSet> facets_;
};

/// Maximal members of `sets`, lexicographically sorted.
std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets);
/// Minimal members of `sets`, lexicographically sorted.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets);

/// Supp_r(A,G): the r-sets F disjoint from A with G[F + A] connected, lexicographically sorted.
std::vector<VertexSet> supp_r(const Graph& g, VertexSet a, int r);

/// Sigma_r(A,G) on ground V(G) - A, generated by the complements (within that ground) of Supp_r(A,G).
SimplicialComplex sigma_r(const Graph& g, VertexSet a, int r);

/// Ind_r(G): sets whose induced components all have fewer than r vertices.
SimplicialComplex ind_r(const Graph& g, int r);

/// Minimal non-faces, computed as minimal transversals of the facet complements.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& d);

/// Alexander dual over the same ground set: facets are complements of minimal non-faces.
SimplicialComplex alexander_dual(const SimplicialComplex& d);

/// lk(F) on ground minus F. Throws std::invalid_argument if F is not a face.
SimplicialComplex link(const SimplicialComplex& d, VertexSet f);
/// del(F) = faces disjoint from F, on ground minus F. Throws std::invalid_argument if F leaves the ground.
SimplicialComplex del_face(const SimplicialComplex& d, VertexSet f);

/// Requires disjoint ground sets.
SimplicialComplex join_complex(const SimplicialComplex& d1, const SimplicialComplex& d2);
/// Union of two complexes on the union of their ground sets.
SimplicialComplex union_complex(const SimplicialComplex& d1, const SimplicialComplex& d2);
/// D[W] on ground W.
SimplicialComplex induced_subcomplex(const SimplicialComplex& d, VertexSet w);

/// Renames vertex v to to_parent[v] (ground included).
SimplicialComplex relabel(const SimplicialComplex& d, const std::vector<Vertex>& to_parent);
/// Shifts every vertex id by `offset`.
SimplicialComplex shift(const SimplicialComplex& d, int offset);

/**
 * All faces grouped by size: result[k] holds the faces with k vertices, sorted.
 * The void complex yields an empty vector. Throws BoundExceeded past limits.max_faces.
 */
std::vector<std::vector<VertexSet>> faces_by_size(const SimplicialComplex& d, const Limits& limits = {});

/// f-vector (f_{-1}, f_0, ...); empty for the void complex.
std::vector<std::size_t> f_vector(const SimplicialComplex& d, const Limits& limits = {});

}  // namespace cocon

#endif
