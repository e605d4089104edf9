#include "cocon/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cocon/limits.hpp"

namespace cocon {

namespace {

// Largest n whose upper-triangle adjacency fits in one 64-bit word.
constexpr int kWordLimit = 11;

/// Colour refinement: start from degrees, split by neighbour-colour multisets until stable.
std::vector<int> refine_colors(const Graph& g)
{
    const int n = g.n();
    std::vector<int> color(n);
    for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].first = color[v];
            for (Vertex u : g.neighbors(v)) sig[v].second.push_back(color[u]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::vector<std::pair<int, std::vector<int>>> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(n);
        for (Vertex v = 0; v < n; ++v) {
            next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        }
        const int before = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
        const int after = static_cast<int>(distinct.size());
        color = std::move(next);
        if (after == before) return color;
    }
}

struct Search {
    const Graph& g;
    int n;
    int total_bits;
    std::vector<VertexSet> cell_of_position;  // allowed vertices at each position
    std::vector<Vertex> placed;
    std::vector<Vertex> best_perm;
    std::uint64_t best = ~std::uint64_t{0};
    bool have_best = false;

    // Bits are emitted position by position: for position p, pairs (0,p),(1,p),...,(p-1,p).
    void dfs(int pos, VertexSet used, std::uint64_t prefix, int bits)
    {
        if (have_best) {
            const std::uint64_t best_prefix = bits == 0 ? 0 : (best >> (total_bits - bits));
            if (prefix > best_prefix) return;
        }
        if (pos == n) {
            if (!have_best || prefix < best) {
                best = prefix;
                best_perm = placed;
                have_best = true;
            }
            return;
        }
        for (Vertex v : cell_of_position[pos] - used) {
            std::uint64_t next = prefix;
            for (int q = 0; q < pos; ++q) next = (next << 1) | (g.has_edge(placed[q], v) ? 1U : 0U);
            placed.push_back(v);
            dfs(pos + 1, used.with(v), next, bits + pos);
            placed.pop_back();
        }
    }
};

std::vector<Vertex> canonical_labeling(const Graph& g, int max_n)
{
    const int n = g.n();
    if (n > max_n) throw BoundExceeded("canonical key: graph with " + std::to_string(n) + " vertices", max_n);
    if (n > kWordLimit) throw BoundExceeded("canonical key: graph with " + std::to_string(n) + " vertices", kWordLimit);
    const std::vector<int> color = refine_colors(g);
    std::vector<Vertex> by_color(n);
    std::iota(by_color.begin(), by_color.end(), 0);
    std::stable_sort(by_color.begin(), by_color.end(), [&](Vertex a, Vertex b) { return color[a] < color[b]; });
    Search s{g, n, n * (n - 1) / 2, {}, {}, {}};
    s.cell_of_position.resize(n);
    for (int pos = 0; pos < n; ++pos) {
        for (Vertex v = 0; v < n; ++v) {
            if (color[v] == color[by_color[pos]]) s.cell_of_position[pos].insert(v);
        }
    }
    s.dfs(0, VertexSet{}, 0, 0);
    return s.best_perm;
}

}  // namespace

std::string canonical_key(const Graph& g, int max_n)
{
    const std::vector<Vertex> perm = canonical_labeling(g, max_n);
    std::uint64_t code = 0;
    for (int p = 1; p < g.n(); ++p) {
        for (int q = 0; q < p; ++q) code = (code << 1) | (g.has_edge(perm[q], perm[p]) ? 1U : 0U);
    }
    std::string key(1, static_cast<char>(g.n()));
    for (int byte = 7; byte >= 0; --byte) key.push_back(static_cast<char>((code >> (8 * byte)) & 0xFF));
    return key;
}

Graph canonical_form(const Graph& g, int max_n)
{
    const std::vector<Vertex> perm = canonical_labeling(g, max_n);
    std::vector<int> position(g.n());
    for (int p = 0; p < g.n(); ++p) position[perm[p]] = p;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
    return Graph::from_edge_list(g.n(), edges);
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only, int max_n)
{
    if (n < 0) throw std::invalid_argument("enumerate_graphs: n must be >= 0");
    if (n > max_n) throw BoundExceeded("graph enumeration on " + std::to_string(n) + " vertices", max_n);
    if (n == 0) return connected_only ? std::vector<Graph>{} : std::vector<Graph>{Graph(0)};
    std::map<std::string, Graph> level;
    level.emplace(canonical_key(Graph(1), max_n), Graph(1));
    for (int m = 2; m <= n; ++m) {
        std::map<std::string, Graph> next;
        for (const auto& [key, h] : level) {
            std::vector<Edge> base = h.edges();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                std::vector<Edge> edges = base;
                for (Vertex v : VertexSet(mask)) edges.emplace_back(v, m - 1);
                Graph g = Graph::from_edge_list(m, edges);
                std::string k = canonical_key(g, max_n);
                if (!next.count(k)) next.emplace(std::move(k), canonical_form(g, max_n));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (auto& [key, g] : level) {
        if (!connected_only || is_connected(g)) out.push_back(g);
    }
    return out;
}

bool isomorphic_bruteforce(const Graph& a, const Graph& b)
{
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<Vertex> perm(a.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges()) {
            if (!b.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace cocon
