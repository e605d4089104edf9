#include "cocon/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cocon {

std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return lex_less(a, b);
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (VertexSet s : sets) {
        bool dominated = false;
        for (VertexSet k : kept) {
            if (s.subset_of(k)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end(), LexLess{});
    return kept;
}

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return lex_less(a, b);
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (VertexSet s : sets) {
        bool dominated = false;
        for (VertexSet k : kept) {
            if (k.subset_of(s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end(), LexLess{});
    return kept;
}

SimplicialComplex::SimplicialComplex(VertexSet ground, std::vector<VertexSet> generators) : ground_(ground)
{
    for (VertexSet f : generators) {
        if (!f.subset_of(ground)) throw std::invalid_argument("face " + f.to_string() + " leaves the ground set " + ground.to_string());
    }
    facets_ = maximal_sets(std::move(generators));
}

bool SimplicialComplex::is_pure() const
{
    for (VertexSet f : facets_) {
        if (f.size() != facets_.front().size()) return false;
    }
    return true;
}

int SimplicialComplex::dimension() const
{
    if (facets_.empty()) return -2;
    int best = 0;
    for (VertexSet f : facets_) best = std::max(best, f.size());
    return best - 1;
}

VertexSet SimplicialComplex::vertices() const
{
    VertexSet out;
    for (VertexSet f : facets_) out |= f;
    return out;
}

bool SimplicialComplex::contains_face(VertexSet f) const
{
    for (VertexSet g : facets_) {
        if (f.subset_of(g)) return true;
    }
    return false;
}

std::vector<VertexSet> supp_r(const Graph& g, VertexSet a, int r)
{
    if (r < 1) throw std::invalid_argument("supp_r: r must be >= 1");
    if (!a.subset_of(g.vertices())) throw std::invalid_argument("supp_r: A leaves V(G)");
    if (a.empty()) return enumerate_connected_subsets(g, r);
    std::vector<VertexSet> out;
    if (is_connected_within(g, a)) {
        for (VertexSet s : enumerate_connected_supersets(g, a, g.vertices(), r)) out.push_back(s - a);
    } else {
        // G[A] disconnected: F has to bridge the components, so test every candidate
        for_each_k_subset(g.vertices() - a, r, [&](VertexSet f) {
            if (is_connected_within(g, f | a)) out.push_back(f);
        });
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

SimplicialComplex sigma_r(const Graph& g, VertexSet a, int r)
{
    const VertexSet ground = g.vertices() - a;
    std::vector<VertexSet> generators;
    for (VertexSet f : supp_r(g, a, r)) generators.push_back(ground - f);
    return SimplicialComplex(ground, std::move(generators));
}

namespace {

VertexSet component_of(const Graph& g, VertexSet within, Vertex v)
{
    VertexSet seen = VertexSet::singleton(v);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex u : frontier) next |= g.neighbors(u);
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

struct IndependentSearch {
    const Graph& g;
    int r;
    std::vector<VertexSet> out;

    bool fits(VertexSet w, Vertex v) const { return component_of(g, w.with(v), v).size() < r; }

    void dfs(Vertex v, VertexSet w)
    {
        if (v == g.n()) {
            for (Vertex u : g.vertices() - w) {
                if (fits(w, u)) return;
            }
            out.push_back(w);
            return;
        }
        if (fits(w, v)) dfs(v + 1, w.with(v));
        dfs(v + 1, w);
    }
};

}  // namespace

SimplicialComplex ind_r(const Graph& g, int r)
{
    if (r < 1) throw std::invalid_argument("ind_r: r must be >= 1");
    IndependentSearch s{g, r, {}};
    s.dfs(0, VertexSet{});
    return SimplicialComplex(g.vertices(), std::move(s.out));
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& d)
{
    // N is a non-face iff it meets the complement of every facet
    std::vector<VertexSet> transversals{VertexSet{}};
    for (VertexSet f : d.facets()) {
        const VertexSet edge = d.ground() - f;
        std::vector<VertexSet> next;
        for (VertexSet t : transversals) {
            if (t.intersects(edge)) {
                next.push_back(t);
            } else {
                for (Vertex v : edge) next.push_back(t.with(v));
            }
        }
        transversals = minimal_sets(std::move(next));
    }
    return transversals;
}

SimplicialComplex alexander_dual(const SimplicialComplex& d)
{
    std::vector<VertexSet> facets;
    for (VertexSet n : minimal_nonfaces(d)) facets.push_back(d.ground() - n);
    return SimplicialComplex(d.ground(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& d, VertexSet f)
{
    if (!d.contains_face(f)) throw std::invalid_argument("link: " + f.to_string() + " is not a face");
    std::vector<VertexSet> facets;
    for (VertexSet g : d.facets()) {
        if (f.subset_of(g)) facets.push_back(g - f);
    }
    return SimplicialComplex(d.ground() - f, std::move(facets));
}

SimplicialComplex del_face(const SimplicialComplex& d, VertexSet f)
{
    if (!f.subset_of(d.ground())) throw std::invalid_argument("del_face: " + f.to_string() + " leaves the ground set");
    std::vector<VertexSet> facets;
    for (VertexSet g : d.facets()) facets.push_back(g - f);
    return SimplicialComplex(d.ground() - f, std::move(facets));
}

SimplicialComplex join_complex(const SimplicialComplex& d1, const SimplicialComplex& d2)
{
    if (d1.ground().intersects(d2.ground())) throw std::invalid_argument("join_complex: ground sets overlap");
    std::vector<VertexSet> facets;
    for (VertexSet a : d1.facets()) {
        for (VertexSet b : d2.facets()) facets.push_back(a | b);
    }
    return SimplicialComplex(d1.ground() | d2.ground(), std::move(facets));
}

SimplicialComplex union_complex(const SimplicialComplex& d1, const SimplicialComplex& d2)
{
    std::vector<VertexSet> facets = d1.facets();
    facets.insert(facets.end(), d2.facets().begin(), d2.facets().end());
    return SimplicialComplex(d1.ground() | d2.ground(), std::move(facets));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& d, VertexSet w)
{
    std::vector<VertexSet> facets;
    for (VertexSet f : d.facets()) facets.push_back(f & w);
    return SimplicialComplex(d.ground() & w, std::move(facets));
}

SimplicialComplex relabel(const SimplicialComplex& d, const std::vector<Vertex>& to_parent)
{
    auto map = [&](VertexSet s) {
        VertexSet out;
        for (Vertex v : s) out.insert(to_parent.at(v));
        return out;
    };
    std::vector<VertexSet> facets;
    for (VertexSet f : d.facets()) facets.push_back(map(f));
    return SimplicialComplex(map(d.ground()), std::move(facets));
}

SimplicialComplex shift(const SimplicialComplex& d, int offset)
{
    std::vector<Vertex> to_parent;
    for (Vertex v = 0; v <= (d.ground().empty() ? -1 : d.ground().max()); ++v) to_parent.push_back(v + offset);
    return relabel(d, to_parent);
}

std::vector<std::vector<VertexSet>> faces_by_size(const SimplicialComplex& d, const Limits& limits)
{
    if (d.is_void()) return {};
    const int top = d.dimension() + 1;
    std::vector<std::unordered_set<VertexSet, VertexSetHash>> seen(top + 1);
    std::size_t total = 0;
    for (VertexSet f : d.facets()) {
        // walk every subset of f by the standard submask recurrence
        const std::uint64_t full = f.bits();
        std::uint64_t sub = full;
        while (true) {
            const VertexSet s(sub);
            if (seen[s.size()].insert(s).second && ++total > limits.max_faces) {
                throw BoundExceeded("face enumeration", limits.max_faces);
            }
            if (sub == 0) break;
            sub = (sub - 1) & full;
        }
    }
    std::vector<std::vector<VertexSet>> out(top + 1);
    for (int k = 0; k <= top; ++k) {
        out[k].assign(seen[k].begin(), seen[k].end());
        std::sort(out[k].begin(), out[k].end(), LexLess{});
    }
    return out;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& d, const Limits& limits)
{
    std::vector<std::size_t> out;
    for (const auto& layer : faces_by_size(d, limits)) out.push_back(layer.size());
    return out;
}

}  // namespace cocon
