#ifndef COCON_TESTS_ORACLES_HPP
#define COCON_TESTS_ORACLES_HPP

// Slow reference implementations, written straight from the definitions and
// sharing no code with the library beyond VertexSet and Graph adjacency.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "cocon/graph.hpp"
#include "cocon/vertex_set.hpp"

namespace oracle {

using cocon::Graph;
using cocon::Vertex;
using cocon::VertexSet;
using SetList = std::vector<VertexSet>;

inline SetList all_subsets(VertexSet ground)
{
    const std::vector<Vertex> v = ground.to_vector();
    SetList out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v.size()); ++mask) {
        VertexSet s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if ((mask >> i) & 1U) s.insert(v[i]);
        }
        out.push_back(s);
    }
    return out;
}

inline SetList subsets_of_size(VertexSet ground, int k)
{
    SetList out;
    for (VertexSet s : all_subsets(ground)) {
        if (s.size() == k) out.push_back(s);
    }
    return out;
}

inline std::set<std::uint64_t> key(const SetList& sets)
{
    std::set<std::uint64_t> out;
    for (VertexSet s : sets) out.insert(s.bits());
    return out;
}

/// BFS inside W.
inline bool connected(const Graph& g, VertexSet w)
{
    if (w.empty()) return true;
    VertexSet seen{w.min()};
    std::vector<Vertex> stack{w.min()};
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : w) {
            if (!seen.contains(u) && g.has_edge(u, v)) {
                seen.insert(u);
                stack.push_back(u);
            }
        }
    }
    return seen == w;
}

inline SetList connected_sets(const Graph& g, int r)
{
    SetList out;
    for (VertexSet s : subsets_of_size(g.vertices(), r)) {
        if (connected(g, s)) out.push_back(s);
    }
    return out;
}

inline SetList maximal(const SetList& sets)
{
    SetList out;
    for (VertexSet s : sets) {
        bool dominated = false;
        for (VertexSet t : sets) dominated = dominated || (s != t && s.subset_of(t));
        if (!dominated && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    return out;
}

/// Facets of Sigma_r(A,G) on ground V - A.
inline SetList sigma_facets(const Graph& g, VertexSet a, int r)
{
    const VertexSet ground = g.vertices() - a;
    SetList gens;
    for (VertexSet f : subsets_of_size(ground, r)) {
        if (connected(g, f | a)) gens.push_back(ground - f);
    }
    return maximal(gens);
}

/// Faces whose induced components all have fewer than r vertices.
inline SetList ind_facets(const Graph& g, int r)
{
    SetList faces;
    for (VertexSet s : all_subsets(g.vertices())) {
        bool ok = true;
        for (VertexSet t : all_subsets(s)) {
            if (t.size() >= r && connected(g, t)) {
                // a connected subset of size >= r inside s means some component has >= r vertices
                ok = false;
                break;
            }
        }
        if (ok) faces.push_back(s);
    }
    return maximal(faces);
}

inline SetList faces(const SetList& facets)
{
    std::set<std::uint64_t> seen;
    SetList out;
    for (VertexSet f : facets) {
        for (VertexSet s : all_subsets(f)) {
            if (seen.insert(s.bits()).second) out.push_back(s);
        }
    }
    return out;
}

inline bool is_face(const SetList& facets, VertexSet s)
{
    for (VertexSet f : facets) {
        if (s.subset_of(f)) return true;
    }
    return false;
}

inline SetList link_facets(const SetList& facets, VertexSet f)
{
    SetList out;
    for (VertexSet g : facets) {
        if (f.subset_of(g)) out.push_back(g - f);
    }
    return maximal(out);
}

/// Facets of the deletion: maximal faces avoiding x.
inline SetList del_facets(const SetList& facets, Vertex x)
{
    SetList out;
    for (VertexSet g : facets) out.push_back(g.without(x));
    return maximal(out);
}

/// Alexander dual on `ground`: complements of non-faces.
inline SetList dual_facets(VertexSet ground, const SetList& facets)
{
    SetList out;
    for (VertexSet s : all_subsets(ground)) {
        if (!is_face(facets, s)) out.push_back(ground - s);
    }
    return maximal(out);
}

/// Literal definition. `facets` empty means the void complex.
inline bool vertex_decomposable(const SetList& facets)
{
    if (facets.size() <= 1) return true;
    VertexSet vs;
    for (VertexSet f : facets) vs |= f;
    for (Vertex x : vs) {
        const SetList d = del_facets(facets, x);
        bool shedding = true;
        for (VertexSet f : d) shedding = shedding && std::find(facets.begin(), facets.end(), f) != facets.end();
        if (!shedding) continue;
        if (vertex_decomposable(link_facets(facets, VertexSet{x})) && vertex_decomposable(d)) return true;
    }
    return false;
}

/// Literal shelling condition on an order.
inline bool is_shelling(const SetList& order)
{
    for (std::size_t i = 1; i < order.size(); ++i) {
        const VertexSet f = order[i];
        for (std::size_t j = 0; j < i; ++j) {
            const VertexSet meet = order[j] & f;
            bool covered = false;
            for (std::size_t k = 0; k < i && !covered; ++k) {
                const VertexSet other = order[k] & f;
                covered = meet.subset_of(other) && other.size() == f.size() - 1;
            }
            if (!covered) return false;
        }
    }
    return true;
}

/// Tries every order (facet count <= 8).
inline bool shellable(SetList facets)
{
    if (facets.size() <= 1) return true;
    std::sort(facets.begin(), facets.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    do {
        if (is_shelling(facets)) return true;
    } while (std::next_permutation(facets.begin(), facets.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); }));
    return false;
}

/// Rank over Q (p = 0) or F_p with exact rational elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m, int p)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        auto reduce = [&](mpq_class& x) {
            if (p == 0) return;
            mpz_class num = x.get_num() % p;
            if (num < 0) num += p;
            x = num;
        };
        for (auto& row : m) reduce(row[c]);
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class factor = m[i][c] / m[r][c];
            if (p != 0) {
                // inverse modulo p by search; p is small in tests
                mpz_class inv = 1;
                const mpz_class a = m[r][c].get_num();
                while ((inv * a) % p != 1) ++inv;
                factor = mpz_class(m[i][c].get_num() * inv % p);
            }
            for (std::size_t k = c; k < cols; ++k) {
                m[i][k] -= factor * m[r][k];
                if (p != 0) {
                    mpz_class v = m[i][k].get_num() % p;
                    if (v < 0) v += p;
                    m[i][k] = v;
                }
            }
        }
        ++r;
    }
    return r;
}

/// Reduced Betti numbers, index dim + 1, from the full face list.
inline std::vector<long> reduced_betti(const SetList& facets, int p)
{
    if (facets.empty()) return {};
    const SetList fs = faces(facets);
    int top = -1;
    for (VertexSet f : fs) top = std::max(top, f.size() - 1);
    std::vector<SetList> by(top + 2);
    for (VertexSet f : fs) by[f.size()].push_back(f);
    // rank of the boundary from size k to size k-1, k >= 1
    std::vector<std::size_t> rk(top + 3, 0);
    for (int k = 1; k <= top + 1; ++k) {
        std::vector<std::vector<mpq_class>> m(by[k - 1].size(), std::vector<mpq_class>(by[k].size(), 0));
        for (std::size_t j = 0; j < by[k].size(); ++j) {
            const std::vector<Vertex> vs = by[k][j].to_vector();
            for (std::size_t pos = 0; pos < vs.size(); ++pos) {
                const VertexSet b = by[k][j].without(vs[pos]);
                const auto it = std::find(by[k - 1].begin(), by[k - 1].end(), b);
                m[it - by[k - 1].begin()][j] = pos % 2 == 0 ? 1 : -1;
            }
        }
        rk[k] = rank(m, p);
    }
    std::vector<long> out(top + 2, 0);
    for (int k = 0; k <= top + 1; ++k) {
        out[k] = static_cast<long>(by[k].size()) - static_cast<long>(rk[k]) - static_cast<long>(rk[k + 1]);
    }
    return out;
}

/// Reisner's criterion over every face.
inline bool cohen_macaulay(const SetList& facets, int p)
{
    if (facets.empty()) return true;
    for (VertexSet f : faces(facets)) {
        const SetList lk = link_facets(facets, f);
        const std::vector<long> b = reduced_betti(lk, p);
        for (std::size_t i = 0; i + 1 < b.size(); ++i) {
            if (b[i] != 0) return false;
        }
    }
    return true;
}

inline VertexSet closed_neighborhood(const SetList& circuits, VertexSet z)
{
    VertexSet out = z;
    for (VertexSet e : circuits) {
        if (z.subset_of(e)) out |= e;
    }
    return out;
}

/// Plain backtracking over every simplicial maximal subcircuit, no memo.
inline bool chordal_clutter(const SetList& circuits, int d)
{
    if (circuits.empty()) return true;
    std::set<std::uint64_t> tried;
    for (VertexSet e : circuits) {
        for (Vertex v : e) {
            const VertexSet z = e.without(v);
            if (!tried.insert(z.bits()).second) continue;
            const VertexSet nz = closed_neighborhood(circuits, z);
            bool clique = true;
            for (VertexSet t : subsets_of_size(nz, d)) {
                clique = clique && std::find(circuits.begin(), circuits.end(), t) != circuits.end();
            }
            if (!clique) continue;
            SetList rest;
            for (VertexSet c : circuits) {
                if (!z.subset_of(c)) rest.push_back(c);
            }
            if (chordal_clutter(rest, d)) return true;
        }
    }
    return false;
}

/// Largest set of pairwise disjoint circuits, optionally with no other circuit inside their union.
inline std::size_t matching(const SetList& circuits, bool induced)
{
    std::size_t best = 0;
    const std::size_t m = circuits.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        VertexSet cover;
        bool ok = true;
        std::size_t count = 0;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if (!((mask >> i) & 1U)) continue;
            ok = !cover.intersects(circuits[i]);
            cover |= circuits[i];
            ++count;
        }
        if (!ok) continue;
        if (induced) {
            std::size_t inside = 0;
            for (VertexSet c : circuits) inside += c.subset_of(cover) ? 1 : 0;
            if (inside != count) continue;
        }
        best = std::max(best, count);
    }
    return best;
}

inline bool gap_free(const Graph& g, int r)
{
    const SetList cs = connected_sets(g, r);
    for (VertexSet a : cs) {
        for (VertexSet b : cs) {
            if (a.intersects(b)) continue;
            std::size_t inside = 0;
            for (VertexSet c : cs) inside += c.subset_of(a | b) ? 1 : 0;
            if (inside == 2) return false;
        }
    }
    return true;
}

/// Isomorphism classes by trying every relabeling into the smallest edge mask.
inline std::size_t count_graphs(int n, bool connected_only)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::set<std::uint64_t> classes;
    std::vector<int> perm(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<cocon::Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1U) edges.push_back(pairs[i]);
        }
        const Graph g = Graph::from_edge_list(n, edges);
        if (connected_only && !connected(g, g.vertices())) continue;
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::uint64_t best = ~std::uint64_t{0};
        do {
            std::uint64_t code = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (g.has_edge(perm[pairs[i].first], perm[pairs[i].second])) code |= std::uint64_t{1} << i;
            }
            best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(best);
    }
    return classes.size();
}

}  // namespace oracle

#endif
