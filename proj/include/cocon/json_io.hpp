#ifndef COCON_JSON_IO_HPP
#define COCON_JSON_IO_HPP

#include <json.hpp>

#include "cocon/clutter.hpp"
#include "cocon/complex.hpp"
#include "cocon/decomp.hpp"
#include "cocon/graph.hpp"
#include "cocon/homology.hpp"

// JSON encodings of the engine's values. `offset` is added to every vertex label
// on output (1 for one-indexed reading); readers always expect 0-based labels.
namespace cocon {

using Json = nlohmann::ordered_json;

/// Ascending list of labels.
Json to_json(VertexSet s, int offset = 0);
Json to_json(const Graph& g, int offset = 0);
Json to_json(const Clutter& h, int offset = 0);
/// {"ground":[..],"facets":[[..],..]}; the void complex has no facets, the empty complex is [[]].
Json to_json(const SimplicialComplex& d, int offset = 0);
/// {"field":..,"betti":{dim:count},"torsion":{dim:[orders]}}
Json to_json(const BettiProfile& b);

Json elimination_json(const EliminationCertificate& cert, int offset = 0);
Json shedding_order_json(const std::vector<Vertex>& order, int r, int offset = 0);
Json shelling_order_json(const std::vector<VertexSet>& order, int offset = 0);
/// Nodes in index order; each names its complex, shedding vertex and child indices.
Json vd_tree_json(const VdCertificate& cert, int offset = 0);

/// Inverse readers. Throw std::invalid_argument on malformed input.
VertexSet vertex_set_from_json(const Json& j);
SimplicialComplex complex_from_json(const Json& j);
EliminationCertificate elimination_from_json(const Json& j);
std::vector<VertexSet> shelling_order_from_json(const Json& j);

}  // namespace cocon

#endif
