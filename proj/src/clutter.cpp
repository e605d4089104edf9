#include "cocon/clutter.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cocon {

Clutter::Clutter(int universe, int d, std::vector<VertexSet> circuits)
    : universe_(universe), d_(d), circuits_(std::move(circuits))
{
    if (universe < 0 || universe > kMaxVertices) throw std::invalid_argument("clutter universe out of range");
    if (d < 0) throw std::invalid_argument("clutter uniformity must be >= 0");
    const VertexSet all = VertexSet::range(universe);
    for (VertexSet e : circuits_) {
        if (e.size() != d) throw std::invalid_argument("circuit " + e.to_string() + " does not have size " + std::to_string(d));
        if (!e.subset_of(all)) throw std::invalid_argument("circuit " + e.to_string() + " leaves the universe");
    }
    std::sort(circuits_.begin(), circuits_.end(), LexLess{});
    circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());
}

bool Clutter::contains(VertexSet e) const
{
    return std::binary_search(circuits_.begin(), circuits_.end(), e, LexLess{});
}

Clutter con_r(const Graph& g, int r)
{
    return Clutter(g.n(), r, enumerate_connected_subsets(g, r));
}

Clutter complement_clutter(const Clutter& h)
{
    std::vector<VertexSet> out;
    for_each_k_subset(VertexSet::range(h.universe()), h.d(), [&](VertexSet s) {
        if (!h.contains(s)) out.push_back(s);
    });
    return Clutter(h.universe(), h.d(), std::move(out));
}

Clutter deletion_d(const Clutter& h, VertexSet w)
{
    if (w.size() > h.d()) throw std::invalid_argument("deletion_d: |W| exceeds the circuit size");
    std::vector<VertexSet> kept;
    for (VertexSet e : h.circuits()) {
        if (!w.subset_of(e)) kept.push_back(e);
    }
    return Clutter(h.universe(), h.d(), std::move(kept));
}

VertexSet clutter_closed_neighborhood(const Clutter& h, VertexSet z)
{
    VertexSet out = z;
    for (VertexSet e : h.circuits()) {
        const VertexSet rest = e - z;
        if (rest.size() == 1) out |= rest;
    }
    return out;
}

bool is_clique(const Clutter& h, VertexSet w)
{
    bool all = true;
    for_each_k_subset(w, h.d(), [&](VertexSet s) {
        if (!h.contains(s)) all = false;
        return all;
    });
    return all;
}

bool is_simplicial_maximal_subcircuit(const Clutter& h, VertexSet z)
{
    if (z.size() != h.d() - 1) return false;
    bool in_circuit = false;
    for (VertexSet e : h.circuits()) {
        if (z.subset_of(e)) {
            in_circuit = true;
            break;
        }
    }
    return in_circuit && is_clique(h, clutter_closed_neighborhood(h, z));
}

std::vector<VertexSet> simplicial_maximal_subcircuits(const Clutter& h)
{
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<VertexSet> out;
    for (VertexSet e : h.circuits()) {
        for (Vertex v : e) {
            const VertexSet z = e.without(v);
            if (!seen.insert(z).second) continue;
            if (is_clique(h, clutter_closed_neighborhood(h, z))) out.push_back(z);
        }
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

namespace {

/// Circuits alive in a search state, as a bitset over the original circuit list.
using State = std::vector<std::uint64_t>;

struct StateHash {
    std::size_t operator()(const State& s) const noexcept
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint64_t w : s) {
            h ^= w;
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

bool test_bit(const State& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1U; }
void set_bit(State& s, std::size_t i) { s[i / 64] |= std::uint64_t{1} << (i % 64); }
void clear_bit(State& s, std::size_t i) { s[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

/// Vertex permutations of the support preserving the circuit set, as permutations of
/// circuit indices. Stops after `cap` of them; any subset of the group is still sound
/// for canonical keys, it only merges fewer states.
std::vector<std::vector<std::uint32_t>> circuit_automorphisms(const Clutter& h, std::size_t cap)
{
    const auto& cs = h.circuits();
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    for (std::size_t i = 0; i < cs.size(); ++i) index.emplace(cs[i].bits(), static_cast<std::uint32_t>(i));

    VertexSet support;
    for (VertexSet e : cs) support |= e;
    const std::vector<Vertex> order = support.to_vector();
    std::vector<int> degree(h.universe(), 0);
    for (VertexSet e : cs) {
        for (Vertex v : e) ++degree[v];
    }
    // circuits whose last vertex in `order` is order[k] are checked once order[k] is placed
    std::vector<std::vector<VertexSet>> closing(order.size());
    for (VertexSet e : cs) {
        const auto pos = std::find(order.begin(), order.end(), e.max()) - order.begin();
        closing[pos].push_back(e);
    }

    std::vector<std::vector<std::uint32_t>> out;
    std::vector<Vertex> image(h.universe(), -1);
    VertexSet used;
    auto map_set = [&](VertexSet e) {
        VertexSet m;
        for (Vertex v : e) m.insert(image[v]);
        return m;
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (out.size() >= cap) return;
        if (k == order.size()) {
            std::vector<std::uint32_t> perm(cs.size());
            for (std::size_t i = 0; i < cs.size(); ++i) perm[i] = index.at(map_set(cs[i]).bits());
            out.push_back(std::move(perm));
            return;
        }
        const Vertex v = order[k];
        for (Vertex u : order) {
            if (used.contains(u) || degree[u] != degree[v]) continue;
            image[v] = u;
            used.insert(u);
            bool ok = true;
            for (VertexSet e : closing[k]) {
                if (!index.count(map_set(e).bits())) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, k + 1);
            used.erase(u);
            image[v] = -1;
            if (out.size() >= cap) return;
        }
    };
    rec(rec, 0);
    return out;
}

class ChordalSearch {
public:
    /// `budget` caps the number of expanded states; 0 means unbounded.
    ChordalSearch(const Clutter& h, std::size_t budget) : h_(h), budget_(budget)
    {
        const auto& cs = h.circuits();
        for (std::size_t i = 0; i < cs.size(); ++i) index_.emplace(cs[i].bits(), i);
        automorphisms_ = circuit_automorphisms(h, kMaxAutomorphisms);
    }

    /// nullopt when the budget ran out before a verdict.
    std::optional<bool> run(EliminationCertificate& cert)
    {
        State start((h_.size() + 63) / 64, 0);
        for (std::size_t i = 0; i < h_.size(); ++i) set_bit(start, i);
        if (!induced_pieces_ok(start)) return false;
        try {
            return dfs(start, cert.subcircuits);
        } catch (const OutOfBudget&) {
            return std::nullopt;
        }
    }

    std::size_t explored() const { return explored_; }

private:
    struct OutOfBudget {};

    static constexpr std::size_t kMaxAutomorphisms = 256;
    static constexpr int kMaxPieceSupport = 12;

    bool alive(const State& s, VertexSet e) const
    {
        auto it = index_.find(e.bits());
        if (it == index_.end()) return false;
        return test_bit(s, it->second);
    }

    State canonical(const State& s) const
    {
        State best = s;
        State img(s.size());
        for (const auto& perm : automorphisms_) {
            std::fill(img.begin(), img.end(), 0);
            for (std::size_t i = 0; i < perm.size(); ++i) {
                if (test_bit(s, i)) set_bit(img, perm[i]);
            }
            if (img < best) best = img;
        }
        return best;
    }

    // Chordality passes to induced subclutters (restrict an elimination to the steps inside W),
    // so every nonempty restriction must offer a simplicial subcircuit of its own.
    bool induced_pieces_ok(const State& s) const
    {
        const auto& cs = h_.circuits();
        VertexSet support;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (test_bit(s, i)) support |= cs[i];
        }
        if (support.size() > kMaxPieceSupport) return true;
        const std::vector<Vertex> sv = support.to_vector();
        const std::uint64_t count = std::uint64_t{1} << sv.size();
        std::vector<std::size_t> inside;
        for (std::uint64_t mask = 1; mask < count; ++mask) {
            if (std::popcount(mask) <= h_.d()) continue;
            VertexSet w;
            for (std::size_t b = 0; b < sv.size(); ++b) {
                if ((mask >> b) & 1U) w.insert(sv[b]);
            }
            inside.clear();
            for (std::size_t i = 0; i < cs.size(); ++i) {
                if (test_bit(s, i) && cs[i].subset_of(w)) inside.push_back(i);
            }
            if (!inside.empty() && !has_simplicial_within(s, w, inside)) return false;
        }
        return true;
    }

    bool has_simplicial_within(const State& s, VertexSet w, const std::vector<std::size_t>& inside) const
    {
        const auto& cs = h_.circuits();
        for (std::size_t i : inside) {
            for (Vertex v : cs[i]) {
                const VertexSet z = cs[i].without(v);
                VertexSet closed = z;
                for (Vertex x : w - z) {
                    if (alive(s, z.with(x))) closed.insert(x);
                }
                if (clique_around(s, z, closed)) return true;
            }
        }
        return false;
    }

    bool clique_around(const State& s, VertexSet z, VertexSet closed) const
    {
        bool clique = true;
        // d-subsets containing z are alive by construction of `closed`
        for_each_k_subset(closed, h_.d(), [&](VertexSet t) {
            if (!z.subset_of(t) && !alive(s, t)) clique = false;
            return clique;
        });
        return clique;
    }

    struct Candidate {
        VertexSet z;
        VertexSet closed;
    };

    std::vector<Candidate> candidates(const State& s) const
    {
        std::unordered_set<VertexSet, VertexSetHash> seen;
        std::vector<Candidate> out;
        const VertexSet all = VertexSet::range(h_.universe());
        const auto& cs = h_.circuits();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (!test_bit(s, i)) continue;
            for (Vertex v : cs[i]) {
                const VertexSet z = cs[i].without(v);
                if (!seen.insert(z).second) continue;
                VertexSet closed = z;
                for (Vertex x : all - z) {
                    if (alive(s, z.with(x))) closed.insert(x);
                }
                if (clique_around(s, z, closed)) out.push_back({z, closed});
            }
        }
        std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
            if (a.closed.size() != b.closed.size()) return a.closed.size() < b.closed.size();
            return lex_less(a.z, b.z);
        });
        // A subcircuit lying in exactly one circuit E can be eliminated first without loss:
        // any elimination of H replays on H minus E, because E fits in no other simplicial
        // neighbourhood (that would put Z in a second circuit).
        if (!out.empty() && out.front().closed.size() == h_.d()) out.resize(1);
        return out;
    }

    bool dfs(const State& s, std::vector<VertexSet>& path)
    {
        bool any = false;
        for (std::uint64_t w : s) any = any || w != 0;
        if (!any) return true;
        State key = canonical(s);
        if (failed_.count(key)) return false;
        if (budget_ != 0 && explored_ >= budget_) throw OutOfBudget{};
        ++explored_;
        for (const Candidate& c : candidates(s)) {
            State next = s;
            for (Vertex x : c.closed - c.z) clear_bit(next, index_.at(c.z.with(x).bits()));
            path.push_back(c.z);
            if (dfs(next, path)) return true;
            path.pop_back();
        }
        failed_.insert(std::move(key));
        return false;
    }

    const Clutter& h_;
    std::size_t budget_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<std::vector<std::uint32_t>> automorphisms_;
    std::unordered_set<State, StateHash> failed_;
    std::size_t explored_ = 0;
};

Clutter restrict_to(const Clutter& h, VertexSet w)
{
    std::vector<VertexSet> kept;
    for (VertexSet e : h.circuits()) {
        if (e.subset_of(w)) kept.push_back(e);
    }
    return Clutter(h.universe(), h.d(), std::move(kept));
}

VertexSet support_of(const Clutter& h)
{
    VertexSet out;
    for (VertexSet e : h.circuits()) out |= e;
    return out;
}

/// Decides chordality of induced subclutters, smallest obstruction first when the direct
/// search is slow: a non-chordal H[W - v] settles H[W] at once.
class HereditaryDecider {
public:
    explicit HereditaryDecider(const Clutter& h) : h_(h) {}

    bool decide(VertexSet w, EliminationCertificate* cert)
    {
        if (auto it = memo_.find(w); it != memo_.end()) return it->second;
        const Clutter sub = restrict_to(h_, w);
        const VertexSet live = support_of(sub);
        if (live != w) return remember(w, decide(live, cert));
        if (sub.empty()) return remember(w, true);

        EliminationCertificate local{h_.d(), {}};
        {
            ChordalSearch quick(sub, kQuickBudget);
            const auto verdict = quick.run(local);
            states_ += quick.explored();
            if (verdict) return finish(w, *verdict, local, cert);
        }
        for (Vertex v : w) {
            if (!decide(w.without(v), nullptr)) return remember(w, false);
        }
        local.subcircuits.clear();
        ChordalSearch full(sub, 0);
        const auto verdict = full.run(local);
        states_ += full.explored();
        return finish(w, *verdict, local, cert);
    }

    std::size_t states() const { return states_; }
    /// Smallest vertex set found whose induced subclutter is not chordal.
    std::optional<VertexSet> obstruction() const
    {
        std::optional<VertexSet> best;
        for (const auto& [w, ok] : memo_) {
            if (!ok && (!best || w.size() < best->size() || (w.size() == best->size() && lex_less(w, *best)))) best = w;
        }
        return best;
    }

private:
    static constexpr std::size_t kQuickBudget = 20000;

    bool remember(VertexSet w, bool verdict)
    {
        memo_.emplace(w, verdict);
        return verdict;
    }

    bool finish(VertexSet w, bool verdict, EliminationCertificate& local, EliminationCertificate* cert)
    {
        if (verdict && cert) *cert = std::move(local);
        return remember(w, verdict);
    }

    const Clutter& h_;
    std::unordered_map<VertexSet, bool, VertexSetHash> memo_;
    std::size_t states_ = 0;
};

}  // namespace

ChordalClutterResult is_chordal_clutter(const Clutter& h, const Limits& limits)
{
    if (h.size() > limits.max_circuits) throw BoundExceeded("chordality search on " + std::to_string(h.size()) + " circuits", limits.max_circuits);
    ChordalClutterResult out;
    if (h.empty()) {
        out.chordal = true;
        out.certificate = EliminationCertificate{h.d(), {}};
        return out;
    }
    HereditaryDecider decider(h);
    EliminationCertificate cert{h.d(), {}};
    out.chordal = decider.decide(support_of(h), &cert);
    out.states_explored = decider.states();
    if (out.chordal) {
        out.certificate = std::move(cert);
    } else {
        out.obstruction = decider.obstruction();
    }
    return out;
}

EliminationReplay verify_elimination(const Clutter& h, const EliminationCertificate& cert)
{
    EliminationReplay out;
    Clutter current = h;
    for (std::size_t i = 0; i < cert.subcircuits.size(); ++i) {
        if (!is_simplicial_maximal_subcircuit(current, cert.subcircuits[i])) {
            out.failed_step = i;
            out.remaining_circuits = current.size();
            return out;
        }
        current = deletion_d(current, cert.subcircuits[i]);
    }
    out.remaining_circuits = current.size();
    out.ok = current.empty();
    if (!out.ok) out.failed_step = cert.subcircuits.size();
    return out;
}

bool is_induced_matching(const Clutter& h, const std::vector<VertexSet>& m)
{
    VertexSet cover;
    for (VertexSet e : m) {
        if (cover.intersects(e)) return false;
        cover |= e;
    }
    std::size_t inside = 0;
    for (VertexSet e : h.circuits()) {
        if (e.subset_of(cover)) ++inside;
    }
    return inside == m.size();
}

namespace {

struct MatchingSearch {
    const std::vector<VertexSet>& circuits;
    bool induced;
    int d;
    std::size_t best = 0;

    std::size_t inside(VertexSet cover) const
    {
        std::size_t n = 0;
        for (VertexSet e : circuits) n += e.subset_of(cover) ? 1 : 0;
        return n;
    }

    void dfs(std::size_t from, VertexSet cover, std::size_t count, VertexSet free_vertices)
    {
        best = std::max(best, count);
        const std::size_t by_vertices = d > 0 ? static_cast<std::size_t>(free_vertices.size() / d) : circuits.size();
        const std::size_t by_circuits = circuits.size() - from;
        if (count + std::min(by_vertices, by_circuits) <= best) return;
        for (std::size_t i = from; i < circuits.size(); ++i) {
            const VertexSet e = circuits[i];
            if (e.intersects(cover)) continue;
            const VertexSet next = cover | e;
            if (induced && inside(next) != count + 1) continue;
            dfs(i + 1, next, count + 1, free_vertices - e);
            if (count + std::min(static_cast<std::size_t>(free_vertices.size() / std::max(d, 1)), circuits.size() - i - 1) <= best) {
                return;
            }
        }
    }
};

}  // namespace

MatchingNumbers matching_numbers(const Clutter& h, const Limits& limits)
{
    if (h.size() > limits.max_circuits) throw BoundExceeded("matching numbers on " + std::to_string(h.size()) + " circuits", limits.max_circuits);
    MatchingNumbers out;
    VertexSet support;
    for (VertexSet e : h.circuits()) support |= e;
    for (bool induced : {false, true}) {
        MatchingSearch s{h.circuits(), induced, h.d()};
        if (h.d() == 0) {
            // the only possible circuit is the empty set
            s.best = h.empty() ? 0 : 1;
        } else {
            s.dfs(0, VertexSet{}, 0, support);
        }
        (induced ? out.induced_matching : out.matching) = s.best;
    }
    return out;
}

GapFreeResult is_r_gap_free(const Graph& g, int r)
{
    if (r < 1) throw std::invalid_argument("is_r_gap_free: r must be >= 1");
    const std::vector<VertexSet> cs = enumerate_connected_subsets(g, r);
    GapFreeResult out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            if (cs[i].intersects(cs[j])) continue;
            if (count_connected_subsets(g, cs[i] | cs[j], r, 3) == 2) {
                out.gap = std::make_pair(cs[i], cs[j]);
                return out;
            }
        }
    }
    out.gap_free = true;
    return out;
}

}  // namespace cocon
