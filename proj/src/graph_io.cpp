#include "cocon/graph_io.hpp"

#include <sstream>

namespace cocon {

namespace {

std::string strip_comment(const std::string& line)
{
    const auto hash = line.find('#');
    std::string out = hash == std::string::npos ? line : line.substr(0, hash);
    const auto first = out.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = out.find_last_not_of(" \t\r\n");
    return out.substr(first, last - first + 1);
}

}  // namespace

Graph read_edge_list(std::istream& in)
{
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long n = 0;
    long m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = strip_comment(line);
        if (body.empty()) continue;
        std::istringstream fields(body);
        long a = 0;
        long b = 0;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra)) {
            throw ParseError("edge list line " + std::to_string(lineno) + ": expected two integers");
        }
        if (!have_header) {
            if (a < 0 || a > kMaxVertices || b < 0) {
                throw ParseError("edge list header: bad vertex or edge count");
            }
            n = a;
            m = b;
            have_header = true;
            continue;
        }
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw ParseError("edge list line " + std::to_string(lineno) + ": vertex id out of range");
        }
        if (a == b) throw ParseError("edge list line " + std::to_string(lineno) + ": self-loop");
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header) throw ParseError("edge list: missing 'n m' header");
    if (static_cast<long>(edges.size()) != m) {
        throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g)
{
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(const std::string& raw)
{
    std::string line = raw;
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw ParseError("graph6: empty line");
    for (char c : line) {
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126");
    }
    if (line[0] == 126) throw ParseError("graph6: only n <= 62 is supported");
    const int n = line[0] - 63;
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() != 1 + bytes) {
        throw ParseError("graph6: expected " + std::to_string(1 + bytes) + " bytes for n=" + std::to_string(n) +
                         ", got " + std::to_string(line.size()));
    }
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = line[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g)
{
    const int n = g.n();
    if (n > 62) throw std::invalid_argument("graph6: only n <= 62 is supported");
    std::string out(1, static_cast<char>(63 + n));
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<int> groups((bits + 5) / 6, 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (g.has_edge(i, j)) groups[k / 6] |= 1 << (5 - k % 6);
        }
    }
    for (int v : groups) out.push_back(static_cast<char>(63 + v));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (strip_comment(line).empty()) continue;
        out.push_back(parse_graph6(strip_comment(line)));
    }
    return out;
}

}  // namespace cocon
