#ifndef COCON_CANONICAL_HPP
#define COCON_CANONICAL_HPP

#include <string>
#include <vector>

#include "cocon/graph.hpp"

namespace cocon {

/**
 * Isomorphism-invariant key: equal keys iff the graphs are isomorphic.
 *
 * Vertices are split into cells by an iterated degree refinement; the key is
 * the lexicographically smallest adjacency string over all relabelings that
 * keep the cell order. Throws BoundExceeded for n > max_n.
 */
std::string canonical_key(const Graph& g, int max_n = 9);

/// Relabeling of g that realizes canonical_key(g).
Graph canonical_form(const Graph& g, int max_n = 9);

/// One representative per isomorphism class on exactly n vertices, in key order.
std::vector<Graph> enumerate_graphs(int n, bool connected_only, int max_n = 9);

/// Brute-force isomorphism test over all n! bijections (test oracle, n <= 8).
bool isomorphic_bruteforce(const Graph& a, const Graph& b);

}  // namespace cocon

#endif
