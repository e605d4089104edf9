#ifndef COCON_CLUTTER_HPP
#define COCON_CLUTTER_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cocon/graph.hpp"
#include "cocon/limits.hpp"
#include "cocon/vertex_set.hpp"

namespace cocon {

/**
 * A d-uniform clutter on the universe {0..n-1}.
 *
 * Circuits are deduplicated and kept in lexicographic order. Vertices that lie
 * in no circuit stay in the universe.
 */
class Clutter {
public:
    Clutter() = default;
    /// Throws std::invalid_argument if a circuit has the wrong size or leaves the universe.
    Clutter(int universe, int d, std::vector<VertexSet> circuits);

    int universe() const { return universe_; }
    int d() const { return d_; }
    const std::vector<VertexSet>& circuits() const { return circuits_; }
    std::size_t size() const { return circuits_.size(); }
    bool empty() const { return circuits_.empty(); }
    bool contains(VertexSet e) const;

    bool operator==(const Clutter&) const = default;

private:
    int universe_ = 0;
    int d_ = 0;
    std::vector<VertexSet> circuits_;
};

/// Con_r(G): circuits are the connected r-subsets of G.
Clutter con_r(const Graph& g, int r);

/// All d-subsets of the universe that are not circuits.
Clutter complement_clutter(const Clutter& h);

/// H \_d W: drops every circuit containing W. Requires |W| <= d.
Clutter deletion_d(const Clutter& h, VertexSet w);

/// Closed clutter neighbourhood N_H[Z] = Z plus every x with some circuit inside Z + x containing x.
VertexSet clutter_closed_neighborhood(const Clutter& h, VertexSet z);

/// True iff every d-subset of W is a circuit.
bool is_clique(const Clutter& h, VertexSet w);

/// (d-1)-subsets Z of circuits such that N_H[Z] is a clique, in lexicographic order.
std::vector<VertexSet> simplicial_maximal_subcircuits(const Clutter& h);

bool is_simplicial_maximal_subcircuit(const Clutter& h, VertexSet z);

struct EliminationCertificate {
    int d = 0;
    std::vector<VertexSet> subcircuits;
};

struct ChordalClutterResult {
    bool chordal = false;
    std::optional<EliminationCertificate> certificate;
    /// On no: a smallest vertex set W found whose induced subclutter H[W] is already not chordal.
    std::optional<VertexSet> obstruction;
    std::size_t states_explored = 0;
};

/**
 * Decides chordality by depth-first search over simplicial maximal subcircuits.
 *
 * Dead-end states are memoized up to automorphisms of H. Candidates are tried in
 * order of increasing |N_H[Z]|, ties broken lexicographically. When the direct
 * search is slow, induced subclutters H[W - v] are decided first, since a
 * non-chordal induced subclutter settles the answer.
 */
ChordalClutterResult is_chordal_clutter(const Clutter& h, const Limits& limits = {});

struct EliminationReplay {
    bool ok = false;
    /// Index of the first step that is not simplicial (or the certificate length if
    /// every step passed but circuits remain).
    std::optional<std::size_t> failed_step;
    std::size_t remaining_circuits = 0;
};

EliminationReplay verify_elimination(const Clutter& h, const EliminationCertificate& cert);

struct MatchingNumbers {
    std::size_t matching = 0;          // nu
    std::size_t induced_matching = 0;  // gamma
};

/// Exact nu and gamma by branch and bound. Throws BoundExceeded above limits.max_circuits.
MatchingNumbers matching_numbers(const Clutter& h, const Limits& limits = {});

/// True iff the circuits in M are pairwise disjoint and are the only circuits inside their union.
bool is_induced_matching(const Clutter& h, const std::vector<VertexSet>& m);

struct GapFreeResult {
    bool gap_free = false;
    /// Two circuits of Con_r(G) forming an induced matching, on no.
    std::optional<std::pair<VertexSet, VertexSet>> gap;
};

/// gamma(Con_r(G)) <= 1.
GapFreeResult is_r_gap_free(const Graph& g, int r);

}  // namespace cocon

#endif
