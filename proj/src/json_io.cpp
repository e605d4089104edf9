#include "cocon/json_io.hpp"

#include <stdexcept>
#include <string>

namespace cocon {

namespace {

Json set_list(const std::vector<VertexSet>& sets, int offset)
{
    Json out = Json::array();
    for (VertexSet s : sets) out.push_back(to_json(s, offset));
    return out;
}

void expect(bool ok, const char* what)
{
    if (!ok) throw std::invalid_argument(std::string("malformed JSON: ") + what);
}

}  // namespace

Json to_json(VertexSet s, int offset)
{
    Json out = Json::array();
    for (Vertex v : s) out.push_back(v + offset);
    return out;
}

Json to_json(const Graph& g, int offset)
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u + offset, v + offset});
    return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Json to_json(const Clutter& h, int offset)
{
    return Json{{"universe", h.universe()}, {"d", h.d()}, {"circuits", set_list(h.circuits(), offset)}};
}

Json to_json(const SimplicialComplex& d, int offset)
{
    return Json{{"ground", to_json(d.ground(), offset)}, {"facets", set_list(d.facets(), offset)}};
}

Json to_json(const BettiProfile& b)
{
    Json betti = Json::object();
    for (std::size_t i = 0; i < b.betti.size(); ++i) betti[std::to_string(static_cast<int>(i) - 1)] = b.betti[i];
    Json torsion = Json::object();
    for (const auto& [dim, orders] : b.torsion) torsion[std::to_string(dim)] = orders;
    return Json{{"field", b.field}, {"betti", std::move(betti)}, {"torsion", std::move(torsion)}};
}

Json elimination_json(const EliminationCertificate& cert, int offset)
{
    return Json{{"kind", "elimination"}, {"d", cert.d}, {"subcircuits", set_list(cert.subcircuits, offset)}};
}

Json shedding_order_json(const std::vector<Vertex>& order, int r, int offset)
{
    Json vs = Json::array();
    for (Vertex v : order) vs.push_back(v + offset);
    return Json{{"kind", "shedding_order"}, {"r", r}, {"vertices", std::move(vs)}};
}

Json shelling_order_json(const std::vector<VertexSet>& order, int offset)
{
    return Json{{"kind", "shelling_order"}, {"facets", set_list(order, offset)}};
}

Json vd_tree_json(const VdCertificate& cert, int offset)
{
    Json nodes = Json::array();
    for (const VdNode& node : cert.nodes) {
        Json j{{"complex", to_json(node.complex, offset)}};
        j["shedding"] = node.shedding ? Json(*node.shedding + offset) : Json(nullptr);
        j["link"] = node.link;
        j["del"] = node.del;
        nodes.push_back(std::move(j));
    }
    return Json{{"kind", "vd_tree"}, {"nodes", std::move(nodes)}};
}

VertexSet vertex_set_from_json(const Json& j)
{
    expect(j.is_array(), "vertex set must be an array");
    VertexSet out;
    for (const Json& v : j) {
        expect(v.is_number_integer(), "vertex labels must be integers");
        const int x = v.get<int>();
        expect(x >= 0 && x < kMaxVertices, "vertex label out of range");
        out.insert(x);
    }
    return out;
}

SimplicialComplex complex_from_json(const Json& j)
{
    expect(j.is_object() && j.contains("ground") && j.contains("facets"), "complex needs ground and facets");
    expect(j["facets"].is_array(), "facets must be an array");
    std::vector<VertexSet> facets;
    for (const Json& f : j["facets"]) facets.push_back(vertex_set_from_json(f));
    return SimplicialComplex(vertex_set_from_json(j["ground"]), std::move(facets));
}

EliminationCertificate elimination_from_json(const Json& j)
{
    expect(j.is_object() && j.value("kind", "") == "elimination", "expected an elimination certificate");
    expect(j.contains("d") && j["d"].is_number_integer() && j.contains("subcircuits"), "elimination needs d and subcircuits");
    EliminationCertificate out{j["d"].get<int>(), {}};
    for (const Json& z : j["subcircuits"]) out.subcircuits.push_back(vertex_set_from_json(z));
    return out;
}

std::vector<VertexSet> shelling_order_from_json(const Json& j)
{
    expect(j.is_object() && j.value("kind", "") == "shelling_order" && j.contains("facets"), "expected a shelling order");
    std::vector<VertexSet> out;
    for (const Json& f : j["facets"]) out.push_back(vertex_set_from_json(f));
    return out;
}

}  // namespace cocon
