#include "cocon/decomp.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cocon/homology.hpp"

namespace cocon {

bool is_shedding_generic(const SimplicialComplex& d, Vertex x)
{
    if (x < 0 || x >= kMaxVertices || !d.ground().contains(x)) throw std::invalid_argument("vertex " + std::to_string(x) + " is outside the ground set");
    const SimplicialComplex deletion = del_face(d, VertexSet::singleton(x));
    for (VertexSet f : deletion.facets()) {
        if (!std::binary_search(d.facets().begin(), d.facets().end(), f, LexLess{})) return false;
    }
    return true;
}

bool is_shedding_supp(const Graph& g, VertexSet a, int r, Vertex x)
{
    const std::vector<VertexSet> supp = supp_r(g, a, r);
    const std::unordered_set<VertexSet, VertexSetHash> members(supp.begin(), supp.end());
    for (VertexSet f : supp) {
        if (f.contains(x)) continue;
        bool exchanged = false;
        for (Vertex y : f) {
            if (members.count(f.without(y).with(x))) {
                exchanged = true;
                break;
            }
        }
        if (!exchanged) return false;
    }
    return true;
}

bool is_shedding_conr(const Graph& g, int r, Vertex x)
{
    const VertexSet rest = g.vertices() - neighborhood(g, VertexSet::singleton(x), true);
    return count_connected_subsets(g, rest, r, 1) == 0;
}

namespace {

/// Facets renamed so that the used vertices become 0..m-1 in order.
std::vector<VertexSet> compress(const std::vector<VertexSet>& facets, VertexSet used)
{
    std::vector<Vertex> position(kMaxVertices, -1);
    int next = 0;
    for (Vertex v : used) position[v] = next++;
    std::vector<VertexSet> out;
    out.reserve(facets.size());
    for (VertexSet f : facets) {
        VertexSet g;
        for (Vertex v : f) g.insert(position[v]);
        out.push_back(g);
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

VertexSet used_vertices(const std::vector<VertexSet>& facets)
{
    VertexSet out;
    for (VertexSet f : facets) out |= f;
    return out;
}

class VdSearch {
public:
    struct Entry {
        bool ok = false;
        int vertex = -1;  // compressed index of the chosen shedding vertex
    };

    bool decide(const std::vector<VertexSet>& facets)
    {
        if (facets.size() <= 1) return true;
        auto it = memo_.find(facets);
        if (it != memo_.end()) return it->second.ok;
        ++states_;
        const VertexSet used = used_vertices(facets);

        struct Candidate {
            Vertex x;
            std::size_t del_count;
        };
        std::vector<Candidate> candidates;
        for (Vertex x : used) {
            std::size_t del_count = 0;
            for (VertexSet f : facets) del_count += f.contains(x) ? 0 : 1;
            if (shedding(facets, x)) candidates.push_back({x, del_count});
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Candidate& a, const Candidate& b) { return a.del_count < b.del_count; });

        Entry entry;
        for (const Candidate& c : candidates) {
            std::vector<VertexSet> lk, del;
            for (VertexSet f : facets) {
                if (f.contains(c.x)) {
                    lk.push_back(f.without(c.x));
                } else {
                    del.push_back(f);
                }
            }
            if (decide(compress(lk, used_vertices(lk))) && decide(compress(del, used_vertices(del)))) {
                entry = {true, c.x};
                break;
            }
        }
        memo_.emplace(facets, entry);
        return entry.ok;
    }

    Entry lookup(const std::vector<VertexSet>& facets) const { return memo_.at(facets); }
    std::size_t states() const { return states_; }

private:
    /// Every facet through x loses x into some facet avoiding x.
    static bool shedding(const std::vector<VertexSet>& facets, Vertex x)
    {
        for (VertexSet f : facets) {
            if (!f.contains(x)) continue;
            const VertexSet rest = f.without(x);
            bool covered = false;
            for (VertexSet g : facets) {
                if (!g.contains(x) && rest.subset_of(g)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        return true;
    }

    std::unordered_map<std::vector<VertexSet>, Entry, SetListHash> memo_;
    std::size_t states_ = 0;
};

int build_tree(const SimplicialComplex& d, const VdSearch& search, VdCertificate& cert)
{
    const int index = static_cast<int>(cert.nodes.size());
    cert.nodes.push_back({d, std::nullopt, -1, -1});
    if (d.facet_count() <= 1) return index;
    const VertexSet used = d.vertices();
    const VdSearch::Entry entry = search.lookup(compress(d.facets(), used));
    const Vertex x = used.to_vector().at(entry.vertex);
    const int l = build_tree(link(d, VertexSet::singleton(x)), search, cert);
    const int r = build_tree(del_face(d, VertexSet::singleton(x)), search, cert);
    cert.nodes[index].shedding = x;
    cert.nodes[index].link = l;
    cert.nodes[index].del = r;
    return index;
}

bool verify_node(const SimplicialComplex& d, const VdCertificate& cert, int index)
{
    if (index < 0 || index >= static_cast<int>(cert.nodes.size())) return false;
    const VdNode& node = cert.nodes[index];
    if (!(node.complex == d)) return false;
    if (d.facet_count() <= 1) return true;
    if (!node.shedding) return false;
    const Vertex x = *node.shedding;
    if (x < 0 || x >= kMaxVertices || !d.vertices().contains(x) || !is_shedding_generic(d, x)) return false;
    return verify_node(link(d, VertexSet::singleton(x)), cert, node.link) &&
           verify_node(del_face(d, VertexSet::singleton(x)), cert, node.del);
}

}  // namespace

VdResult is_vertex_decomposable(const SimplicialComplex& d)
{
    VdSearch search;
    VdResult out;
    out.decomposable = search.decide(compress(d.facets(), d.vertices()));
    out.states = search.states();
    if (out.decomposable) {
        VdCertificate cert;
        build_tree(d, search, cert);
        out.certificate = std::move(cert);
    }
    return out;
}

bool verify_vd_certificate(const SimplicialComplex& d, const VdCertificate& cert) { return verify_node(d, cert, 0); }

namespace {

class OrderingSearch {
public:
    OrderingSearch(const Graph& g, int r) : g_(g), r_(r) {}

    bool dfs(VertexSet w, std::vector<Vertex>& order)
    {
        if (count_connected_subsets(g_, w, r_, 2) <= 1) return true;
        if (failed_.count(w)) return false;
        ++states_;
        for (Vertex x : w) {
            const VertexSet rest = w - (g_.neighbors(x) | VertexSet::singleton(x));
            if (count_connected_subsets(g_, rest, r_, 1) != 0) continue;
            order.push_back(x);
            if (dfs(w.without(x), order)) return true;
            order.pop_back();
        }
        failed_.insert(w);
        return false;
    }

    std::size_t states() const { return states_; }

private:
    const Graph& g_;
    int r_;
    std::unordered_set<VertexSet, VertexSetHash> failed_;
    std::size_t states_ = 0;
};

}  // namespace

SheddingOrderResult vd_sigma_via_ordering(const Graph& g, int r)
{
    if (r < 2) throw std::invalid_argument("vd_sigma_via_ordering: r must be >= 2");
    OrderingSearch search(g, r);
    SheddingOrderResult out;
    out.decomposable = search.dfs(g.vertices(), out.order);
    out.states = search.states();
    if (!out.decomposable) out.order.clear();
    return out;
}

OrderCheck verify_shedding_order(const Graph& g, int r, const std::vector<Vertex>& order)
{
    OrderCheck out;
    VertexSet w = g.vertices();
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex x = order[i];
        if (count_connected_subsets(g, w, r, 2) <= 1 || x < 0 || x >= g.n() || !w.contains(x)) {
            out.failing_index = i;
            return out;
        }
        const VertexSet rest = w - (g.neighbors(x) | VertexSet::singleton(x));
        if (count_connected_subsets(g, rest, r, 1) != 0) {
            out.failing_index = i;
            return out;
        }
        w.erase(x);
    }
    if (count_connected_subsets(g, w, r, 2) > 1) {
        out.failing_index = order.size();
        return out;
    }
    out.ok = true;
    return out;
}

std::vector<long long> h_vector(const SimplicialComplex& d, const Limits& limits)
{
    if (!d.is_pure()) throw std::invalid_argument("h_vector: complex is not pure");
    const std::vector<std::size_t> f = f_vector(d, limits);
    if (f.empty()) return {};
    const int top = static_cast<int>(f.size()) - 1;  // facet size
    auto binom = [](long long n, long long k) {
        if (k < 0 || k > n) return 0LL;
        long long out = 1;
        for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
        return out;
    };
    std::vector<long long> h(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
        for (int i = 0; i <= k; ++i) {
            const long long term = binom(top - i, k - i) * static_cast<long long>(f[i]);
            h[k] += (k - i) % 2 == 0 ? term : -term;
        }
    }
    return h;
}

namespace {

constexpr std::size_t kQuickShellingStates = 50000;

using Placed = std::vector<std::uint64_t>;

struct PlacedHash {
    std::size_t operator()(const Placed& s) const noexcept
    {
        std::uint64_t h = 0x84222325cbf29ce4ULL;
        for (std::uint64_t w : s) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

class ShellingSearch {
public:
    struct OutOfBudget {};

    /// `budget` caps expanded states; 0 means unbounded.
    ShellingSearch(const std::vector<VertexSet>& facets, std::vector<long long> h, std::size_t budget)
        : facets_(facets), m_(facets.size()), h_(std::move(h)), budget_(budget), placed_((m_ + 63) / 64, 0), restriction_(m_)
    {
        drop_.assign(m_, std::vector<VertexSet>(m_));
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < m_; ++j) {
                const VertexSet diff = facets_[i] - facets_[j];
                if (i != j && diff.size() == 1) drop_[i][j] = diff;
            }
        }
        used_.assign(h_.size() + 1, 0);
    }

    bool run() { return h_feasible() && dfs(); }
    const std::vector<std::size_t>& order() const { return order_; }
    std::size_t states() const { return states_; }

private:
    bool is_placed(std::size_t i) const { return (placed_[i / 64] >> (i % 64)) & 1U; }
    void flip(std::size_t i) { placed_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    bool valid(std::size_t i) const
    {
        if (order_.empty()) return true;
        const VertexSet c = restriction_[i];
        if (c.empty()) return false;
        for (std::size_t j : order_) {
            if (c.subset_of(facets_[j])) return false;
        }
        return true;
    }

    /// Every unplaced facet ends with a restriction size between its current one and the
    /// number of its ridges shared with a facet that may still precede it. The h-vector
    /// fixes how many facets end at each size, so the intervals must admit an exact
    /// assignment; earliest-deadline-first decides that.
    bool h_feasible() const
    {
        if (h_.empty()) return true;
        const int top = static_cast<int>(h_.size()) - 1;
        std::vector<long long> remaining(h_.begin(), h_.end());
        for (int k = 0; k <= top; ++k) remaining[k] -= used_[k];
        std::vector<std::pair<int, int>> spans;  // (lower, upper)
        for (std::size_t i = 0; i < m_; ++i) {
            if (is_placed(i)) continue;
            VertexSet reach = restriction_[i];
            for (std::size_t j = 0; j < m_; ++j) {
                if (!is_placed(j)) reach |= drop_[i][j];
            }
            const int lo = restriction_[i].size();
            if (lo > top) return false;
            spans.emplace_back(lo, reach.size());
        }
        std::sort(spans.begin(), spans.end());
        std::priority_queue<int, std::vector<int>, std::greater<>> open;  // upper ends
        std::size_t next = 0;
        for (int k = 0; k <= top; ++k) {
            while (next < spans.size() && spans[next].first <= k) open.push(spans[next++].second);
            for (long long slot = 0; slot < remaining[k]; ++slot) {
                if (open.empty()) return false;
                open.pop();
            }
            if (!open.empty() && open.top() <= k) return false;
        }
        return next == spans.size() && open.empty();
    }

    bool dfs()
    {
        if (order_.size() == m_) return true;
        if (failed_.count(placed_)) return false;
        if (budget_ != 0 && states_ >= budget_) throw OutOfBudget{};
        ++states_;
        std::vector<std::size_t> candidates;
        for (std::size_t i = 0; i < m_; ++i) {
            if (!is_placed(i) && valid(i)) candidates.push_back(i);
        }
        std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
            return restriction_[a].size() < restriction_[b].size();
        });
        for (std::size_t i : candidates) {
            const int size = restriction_[i].size();
            const bool pure = !h_.empty();
            if (pure && used_[size] + 1 > h_[size]) continue;
            std::vector<VertexSet> saved = restriction_;
            flip(i);
            order_.push_back(i);
            if (pure) ++used_[size];
            for (std::size_t j = 0; j < m_; ++j) {
                if (!is_placed(j)) restriction_[j] |= drop_[j][i];
            }
            if (h_feasible() && dfs()) return true;
            if (pure) --used_[size];
            order_.pop_back();
            flip(i);
            restriction_ = std::move(saved);
        }
        failed_.insert(placed_);
        return false;
    }

    const std::vector<VertexSet>& facets_;
    std::size_t m_;
    std::vector<long long> h_;  // empty for nonpure complexes
    std::size_t budget_;
    Placed placed_;
    std::vector<VertexSet> restriction_;
    std::vector<std::vector<VertexSet>> drop_;  // drop_[i][j] = F_i - F_j when that is one vertex
    std::vector<long long> used_;
    std::vector<std::size_t> order_;
    std::unordered_set<Placed, PlacedHash> failed_;
    std::size_t states_ = 0;
};

}  // namespace

ShellingResult find_shelling(const SimplicialComplex& d, const Limits& limits)
{
    if (d.facet_count() > limits.max_shelling_facets) {
        throw BoundExceeded("shelling search on " + std::to_string(d.facet_count()) + " facets", limits.max_shelling_facets);
    }
    ShellingResult out;
    if (d.is_void() || d.is_empty_complex()) {
        out.shellable = true;
        return out;
    }
    std::vector<long long> h;
    if (d.is_pure()) {
        h = h_vector(d, limits);
        for (long long x : h) {
            if (x < 0) return out;
        }
    }
    {
        ShellingSearch quick(d.facets(), h, kQuickShellingStates);
        try {
            out.shellable = quick.run();
            out.states = quick.states();
            if (out.shellable) {
                for (std::size_t i : quick.order()) out.order.push_back(d.facets()[i]);
            }
            return out;
        } catch (const ShellingSearch::OutOfBudget&) {
            out.states = quick.states();
        }
    }
    // nonpure shellable complexes may carry homology in several dimensions
    if (d.is_pure()) {
        const BettiProfile betti = reduced_betti(d, FieldSpec::rationals(), limits);
        for (int i = -1; i < d.dimension(); ++i) {
            if (betti.at(i) != 0) {
                out.obstruction_dimension = i;
                return out;
            }
        }
    }
    ShellingSearch search(d.facets(), std::move(h), 0);
    out.shellable = search.run();
    out.states += search.states();
    if (out.shellable) {
        for (std::size_t i : search.order()) out.order.push_back(d.facets()[i]);
    }
    return out;
}

OrderCheck verify_shelling(const SimplicialComplex& d, const std::vector<VertexSet>& order)
{
    OrderCheck out;
    if (order.empty() && (d.is_void() || d.is_empty_complex())) {
        out.ok = true;
        return out;
    }
    std::vector<VertexSet> sorted = order;
    std::sort(sorted.begin(), sorted.end(), LexLess{});
    if (sorted != d.facets()) throw std::invalid_argument("verify_shelling: order is not a permutation of the facets");
    for (std::size_t i = 1; i < order.size(); ++i) {
        const VertexSet f = order[i];
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
            bool found = false;
            for (std::size_t k = 0; k < i && !found; ++k) {
                const VertexSet meet = order[k] & f;
                found = (order[j] & f).subset_of(meet) && meet.size() == f.size() - 1;
            }
            ok = found;
        }
        if (!ok) {
            out.failing_index = i;
            return out;
        }
    }
    out.ok = true;
    return out;
}

}  // namespace cocon
