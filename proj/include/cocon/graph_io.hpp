#ifndef COCON_GRAPH_IO_HPP
#define COCON_GRAPH_IO_HPP

#include <istream>
#include <string>
#include <vector>

#include "cocon/graph.hpp"

namespace cocon {

/// Thrown on malformed edge-list or graph6 input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Edge-list text: first line "n m", then m lines "u v" (0-based).
 * Blank lines and '#' comments are ignored.
 */
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

/// Decodes one graph6 line (optional ">>graph6<<" header, n <= 62).
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

/// One graph per nonempty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace cocon

#endif
