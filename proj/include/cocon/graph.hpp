#ifndef COCON_GRAPH_HPP
#define COCON_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cocon/vertex_set.hpp"

namespace cocon {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple graph on vertices 0..n-1 (n <= 64). Immutable once built.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws std::invalid_argument on an out-of-range id or a self-loop. Duplicate edges collapse.
    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    VertexSet vertices() const { return VertexSet::range(n()); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    int degree(Vertex v) const { return adj_[v].size(); }

    std::size_t edge_count() const;
    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void add_edge(Vertex u, Vertex v);

    std::vector<VertexSet> adj_;

    friend Graph complement(const Graph&);
    friend Graph disjoint_union(const Graph&, const Graph&);
    friend Graph join(const Graph&, const Graph&);
    friend Graph product(const Graph&, const Graph&);
};

/// An induced subgraph relabeled onto 0..|W|-1, plus the map back to parent ids.
struct InducedGraph {
    Graph graph;
    std::vector<Vertex> to_parent;

    VertexSet lift(VertexSet local) const;
};

Graph complement(const Graph& g);
InducedGraph induced(const Graph& g, VertexSet w);
/// G minus the vertices of W (induced on the rest).
InducedGraph remove_vertices(const Graph& g, VertexSet w);

/// N_G(B) (closed = false) or N_G[B] (closed = true).
VertexSet neighborhood(const Graph& g, VertexSet b, bool closed);

/// True iff G[W] is connected. The empty set counts as connected.
bool is_connected_within(const Graph& g, VertexSet w);
bool is_connected(const Graph& g);

/// Components of G, sorted by least element.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of G[W].
std::vector<VertexSet> connected_components_within(const Graph& g, VertexSet w);

/// Vertices v with G - v connected. Throws std::invalid_argument if G is disconnected.
VertexSet non_cut_vertices(const Graph& g);

/// G1's vertices keep their ids; G2's are shifted by |V(G1)|.
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);
/// Cartesian product; vertex (x, y) gets id x * |V(G2)| + y.
Graph product(const Graph& g1, const Graph& g2);

// Families ---------------------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// P_n x P_2
Graph ladder_graph(int n);
/// P_n x P_3
Graph grid3_graph(int n);
Graph cycle_complement(int n);
/**
 * The odd-leaf unicyclic graph: cycle x_1..x_{r+2} with a pendant leaf on every
 * odd cycle vertex x_j, the leaf for x_j being x_{r+2+(j+1)/2}.
 * Vertex x_i has id i-1. Requires r >= 3.
 */
Graph unicyclic_graph(int r);

/// Cotree: leaves are single vertices, internal nodes are disjoint unions or joins.
struct Cotree {
    enum class Kind { Leaf, Union, Join };
    Kind kind = Kind::Leaf;
    Vertex leaf = 0;
    std::vector<Cotree> children;

    int leaf_count() const;
    /// "K1", "union(K1,K1)", "join(K1,union(K1,K1))"
    std::string to_string() const;
    /// Parses the to_string() syntax. Throws std::invalid_argument.
    static Cotree parse(const std::string& text);
};

/// Builds the cograph of a cotree. Leaves are numbered left to right.
Graph cograph_from_cotree(const Cotree& tree);

/// Named family dispatcher ("path", "cycle", "complete", "ladder", "grid3",
/// "cycle_complement", "unicyclic"). Throws std::invalid_argument on a bad name or parameter.
Graph family(const std::string& name, int param);

// Structural predicates -------------------------------------------------

struct ChordalResult {
    bool chordal = false;
    /// Perfect elimination ordering (each vertex simplicial among the later ones), on yes.
    std::vector<Vertex> elimination_order;
};

ChordalResult is_chordal(const Graph& g);
bool is_cochordal(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order);

struct CographResult {
    bool cograph = false;
    std::optional<Cotree> cotree;
};

CographResult is_cograph(const Graph& g);

/// Simplicial vertices (closed neighborhood is a clique).
VertexSet simplicial_vertices(const Graph& g);

// Connected subsets -----------------------------------------------------

/**
 * All W with |W| = r and G[W] connected, in lexicographic order.
 * Grows each set from its least vertex through boundary vertices with a larger id,
 * so every set is produced once.
 */
std::vector<VertexSet> enumerate_connected_subsets(const Graph& g, int r);

/// Same contract, restricted to subsets of `within`.
std::vector<VertexSet> enumerate_connected_subsets_within(const Graph& g, VertexSet within, int r);

/// Reference path: filter all r-subsets by a connectivity test.
std::vector<VertexSet> enumerate_connected_subsets_bruteforce(const Graph& g, int r);

/// Number of connected r-subsets of G[within], stopping once `limit` is reached.
std::size_t count_connected_subsets(const Graph& g, VertexSet within, int r, std::size_t limit);

/**
 * All connected vertex sets of size |root| + extra that contain `root`.
 * Requires G[root] connected and nonempty.
 */
std::vector<VertexSet> enumerate_connected_supersets(const Graph& g, VertexSet root, VertexSet within, int extra);

}  // namespace cocon

#endif
