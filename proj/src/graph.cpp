#include "cocon/graph.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cocon {

Graph::Graph(int n)
{
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    adj_.assign(n, VertexSet{});
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for n=" +
                                        std::to_string(n));
        }
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    adj_[u].insert(v);
    adj_[v].insert(u);
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (VertexSet s : adj_) twice += s.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

VertexSet InducedGraph::lift(VertexSet local) const
{
    VertexSet out;
    for (Vertex v : local) out.insert(to_parent[v]);
    return out;
}

Graph complement(const Graph& g)
{
    Graph c(g.n());
    const VertexSet all = g.vertices();
    for (Vertex v = 0; v < g.n(); ++v) c.adj_[v] = (all - g.neighbors(v)).without(v);
    return c;
}

InducedGraph induced(const Graph& g, VertexSet w)
{
    if (!w.subset_of(g.vertices())) throw std::invalid_argument("induced: vertex set " + w.to_string() + " not within V(G)");
    InducedGraph out{Graph(w.size()), w.to_vector()};
    std::vector<Edge> edges;
    std::vector<int> local(g.n(), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) local[out.to_parent[i]] = static_cast<int>(i);
    for (auto [u, v] : g.edges()) {
        if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
    }
    out.graph = Graph::from_edge_list(w.size(), edges);
    return out;
}

InducedGraph remove_vertices(const Graph& g, VertexSet w)
{
    return induced(g, g.vertices() - w);
}

VertexSet neighborhood(const Graph& g, VertexSet b, bool closed)
{
    VertexSet out;
    for (Vertex v : b) out |= g.neighbors(v);
    out -= b;
    return closed ? (out | b) : out;
}

bool is_connected_within(const Graph& g, VertexSet w)
{
    if (w.empty()) return true;
    VertexSet seen = VertexSet::singleton(w.min());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbors(v);
        next = (next & w) - seen;
        seen |= next;
        frontier = next;
    }
    return seen == w;
}

bool is_connected(const Graph& g)
{
    return is_connected_within(g, g.vertices());
}

std::vector<VertexSet> connected_components_within(const Graph& g, VertexSet w)
{
    std::vector<VertexSet> out;
    VertexSet rest = w;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::singleton(rest.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            next = (next & rest) - comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    return connected_components_within(g, g.vertices());
}

VertexSet non_cut_vertices(const Graph& g)
{
    if (!is_connected(g)) throw std::invalid_argument("non_cut_vertices: graph is disconnected");
    VertexSet out;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (is_connected_within(g, g.vertices().without(v))) out.insert(v);
    }
    return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2)
{
    const int n1 = g1.n();
    Graph out(n1 + g2.n());
    for (auto [u, v] : g1.edges()) out.add_edge(u, v);
    for (auto [u, v] : g2.edges()) out.add_edge(u + n1, v + n1);
    return out;
}

Graph join(const Graph& g1, const Graph& g2)
{
    Graph out = disjoint_union(g1, g2);
    for (Vertex u = 0; u < g1.n(); ++u) {
        for (Vertex v = 0; v < g2.n(); ++v) out.add_edge(u, g1.n() + v);
    }
    return out;
}

Graph product(const Graph& g1, const Graph& g2)
{
    const int m = g2.n();
    Graph out(g1.n() * m);
    for (Vertex x = 0; x < g1.n(); ++x) {
        for (auto [a, b] : g2.edges()) out.add_edge(x * m + a, x * m + b);
    }
    for (auto [a, b] : g1.edges()) {
        for (Vertex y = 0; y < m; ++y) out.add_edge(a * m + y, b * m + y);
    }
    return out;
}

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph path_graph(int n)
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n)
{
    require(n >= 1, "complete graph needs n >= 1");
    return complement(Graph(n));
}

Graph ladder_graph(int n)
{
    require(n >= 1, "ladder needs n >= 1");
    return product(path_graph(n), path_graph(2));
}

Graph grid3_graph(int n)
{
    require(n >= 1, "grid3 needs n >= 1");
    return product(path_graph(n), path_graph(3));
}

Graph cycle_complement(int n)
{
    require(n >= 3, "cycle complement needs n >= 3");
    return complement(cycle_graph(n));
}

Graph unicyclic_graph(int r)
{
    require(r >= 3, "unicyclic family needs r >= 3");
    const int cycle_len = r + 2;
    const int leaves = (r + 3) / 2;
    std::vector<Edge> edges;
    // x_i has id i - 1
    edges.emplace_back(cycle_len - 1, 0);
    for (int i = 1; i <= r + 1; ++i) edges.emplace_back(i - 1, i);
    for (int j = 1; j <= cycle_len; j += 2) edges.emplace_back(j - 1, cycle_len + (j + 1) / 2 - 1);
    return Graph::from_edge_list(cycle_len + leaves, edges);
}

int Cotree::leaf_count() const
{
    if (kind == Kind::Leaf) return 1;
    int total = 0;
    for (const Cotree& c : children) total += c.leaf_count();
    return total;
}

std::string Cotree::to_string() const
{
    if (kind == Kind::Leaf) return "K1";
    std::string out = kind == Kind::Union ? "union(" : "join(";
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += ',';
        out += children[i].to_string();
    }
    return out + ")";
}

namespace {

struct CotreeParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(const std::string& token)
    {
        skip_ws();
        if (text.compare(pos, token.size(), token) == 0) {
            pos += token.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("cotree parse error at offset " + std::to_string(pos) + ": " + what);
    }

    Cotree node()
    {
        Cotree t;
        if (eat("K1")) return t;
        if (eat("union")) {
            t.kind = Cotree::Kind::Union;
        } else if (eat("join")) {
            t.kind = Cotree::Kind::Join;
        } else {
            fail("expected K1, union or join");
        }
        if (!eat("(")) fail("expected '('");
        t.children.push_back(node());
        while (eat(",")) t.children.push_back(node());
        if (!eat(")")) fail("expected ')'");
        return t;
    }
};

Graph build_cograph(const Cotree& t)
{
    if (t.kind == Cotree::Kind::Leaf) return Graph(1);
    if (t.children.empty()) throw std::invalid_argument("cotree node without children");
    Graph g = build_cograph(t.children.front());
    for (std::size_t i = 1; i < t.children.size(); ++i) {
        Graph next = build_cograph(t.children[i]);
        g = t.kind == Cotree::Kind::Union ? disjoint_union(g, next) : join(g, next);
    }
    return g;
}

}  // namespace

Cotree Cotree::parse(const std::string& text)
{
    CotreeParser p{text};
    Cotree t = p.node();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return t;
}

Graph cograph_from_cotree(const Cotree& tree)
{
    return build_cograph(tree);
}

Graph family(const std::string& name, int param)
{
    if (name == "path") return path_graph(param);
    if (name == "cycle") return cycle_graph(param);
    if (name == "complete") return complete_graph(param);
    if (name == "ladder") return ladder_graph(param);
    if (name == "grid3") return grid3_graph(param);
    if (name == "cycle_complement") return cycle_complement(param);
    if (name == "unicyclic") return unicyclic_graph(param);
    throw std::invalid_argument("unknown graph family: " + name);
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order)
{
    if (static_cast<int>(order.size()) != g.n()) return false;
    VertexSet later = g.vertices();
    if (VertexSet::from_vector(order) != later) return false;
    for (Vertex v : order) {
        later.erase(v);
        const VertexSet nb = g.neighbors(v) & later;
        for (Vertex u : nb) {
            if (!(nb.without(u)).subset_of(g.neighbors(u))) return false;
        }
    }
    return true;
}

ChordalResult is_chordal(const Graph& g)
{
    // Maximum cardinality search; the reverse visit order is a perfect
    // elimination ordering iff G is chordal.
    const int n = g.n();
    std::vector<int> weight(n, 0);
    VertexSet unvisited = g.vertices();
    std::vector<Vertex> visit;
    visit.reserve(n);
    while (!unvisited.empty()) {
        Vertex best = unvisited.min();
        for (Vertex v : unvisited) {
            if (weight[v] > weight[best]) best = v;
        }
        visit.push_back(best);
        unvisited.erase(best);
        for (Vertex u : g.neighbors(best) & unvisited) ++weight[u];
    }
    std::reverse(visit.begin(), visit.end());
    ChordalResult out;
    out.chordal = is_perfect_elimination_order(g, visit);
    if (out.chordal) out.elimination_order = std::move(visit);
    return out;
}

bool is_cochordal(const Graph& g)
{
    return is_chordal(complement(g)).chordal;
}

namespace {

std::optional<Cotree> cotree_of(const Graph& g, VertexSet w)
{
    if (w.size() == 1) {
        Cotree leaf;
        leaf.leaf = w.min();
        return leaf;
    }
    Cotree node;
    std::vector<VertexSet> parts = connected_components_within(g, w);
    if (parts.size() > 1) {
        node.kind = Cotree::Kind::Union;
    } else {
        const Graph c = complement(g);
        parts = connected_components_within(c, w);
        if (parts.size() == 1) return std::nullopt;
        node.kind = Cotree::Kind::Join;
    }
    for (VertexSet part : parts) {
        auto child = cotree_of(g, part);
        if (!child) return std::nullopt;
        node.children.push_back(std::move(*child));
    }
    return node;
}

}  // namespace

CographResult is_cograph(const Graph& g)
{
    CographResult out;
    if (g.n() == 0) {
        out.cograph = true;
        return out;
    }
    out.cotree = cotree_of(g, g.vertices());
    out.cograph = out.cotree.has_value();
    return out;
}

VertexSet simplicial_vertices(const Graph& g)
{
    VertexSet out;
    for (Vertex v = 0; v < g.n(); ++v) {
        const VertexSet nb = g.neighbors(v);
        bool clique = true;
        for (Vertex u : nb) {
            if (!nb.without(u).subset_of(g.neighbors(u))) {
                clique = false;
                break;
            }
        }
        if (clique) out.insert(v);
    }
    return out;
}

namespace {

// Connected-set growth: `sub` is the current set, `ext` the candidates that may
// still be added, `closed_nb` = N[sub]. A new vertex w contributes only those
// neighbours that are not already adjacent to sub, which makes every set reachable
// along exactly one branch.
template <typename Emit>
bool grow(const Graph& g, VertexSet within, VertexSet floor_mask, VertexSet sub, VertexSet ext, VertexSet closed_nb,
          int target, Emit& emit)
{
    if (sub.size() == target) return emit(sub);
    while (!ext.empty()) {
        const Vertex w = ext.min();
        ext.erase(w);
        const VertexSet nw = g.neighbors(w) & within & floor_mask;
        const VertexSet fresh = nw - closed_nb - sub;
        if (!grow(g, within, floor_mask, sub.with(w), ext | fresh, closed_nb | nw | VertexSet::singleton(w), target,
                  emit)) {
            return false;
        }
    }
    return true;
}

VertexSet above(Vertex v)
{
    return VertexSet(v >= 63 ? 0 : ~((std::uint64_t{2} << v) - 1));
}

template <typename Emit>
void for_each_connected_subset(const Graph& g, VertexSet within, int r, Emit& emit)
{
    if (r < 1) return;
    for (Vertex v : within) {
        const VertexSet floor_mask = above(v);
        const VertexSet nv = g.neighbors(v) & within & floor_mask;
        if (!grow(g, within, floor_mask, VertexSet::singleton(v), nv, nv.with(v), r, emit)) return;
    }
}

}  // namespace

std::vector<VertexSet> enumerate_connected_subsets_within(const Graph& g, VertexSet within, int r)
{
    if (r < 1) throw std::invalid_argument("connected subset size must be >= 1");
    std::vector<VertexSet> out;
    auto emit = [&](VertexSet s) {
        out.push_back(s);
        return true;
    };
    for_each_connected_subset(g, within, r, emit);
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

std::vector<VertexSet> enumerate_connected_subsets(const Graph& g, int r)
{
    return enumerate_connected_subsets_within(g, g.vertices(), r);
}

std::vector<VertexSet> enumerate_connected_subsets_bruteforce(const Graph& g, int r)
{
    if (r < 1) throw std::invalid_argument("connected subset size must be >= 1");
    std::vector<VertexSet> out;
    for_each_k_subset(g.vertices(), r, [&](VertexSet s) {
        if (is_connected_within(g, s)) out.push_back(s);
    });
    return out;
}

std::size_t count_connected_subsets(const Graph& g, VertexSet within, int r, std::size_t limit)
{
    std::size_t count = 0;
    if (limit == 0) return 0;
    auto emit = [&](VertexSet) { return ++count < limit; };
    for_each_connected_subset(g, within, r, emit);
    return count;
}

std::vector<VertexSet> enumerate_connected_supersets(const Graph& g, VertexSet root, VertexSet within, int extra)
{
    if (root.empty() || !is_connected_within(g, root)) {
        throw std::invalid_argument("enumerate_connected_supersets: root must be nonempty and connected");
    }
    std::vector<VertexSet> out;
    if (extra < 0) return out;
    auto emit = [&](VertexSet s) {
        out.push_back(s);
        return true;
    };
    const VertexSet pool = within | root;
    const VertexSet closed = neighborhood(g, root, true) & pool;
    grow(g, pool, VertexSet::range(64), root, closed - root, closed, root.size() + extra, emit);
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

}  // namespace cocon
