#include "cocon/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>

#include "cocon/canonical.hpp"
#include "cocon/clutter.hpp"
#include "cocon/complex.hpp"
#include "cocon/decomp.hpp"
#include "cocon/fixtures.hpp"
#include "cocon/graph_io.hpp"

namespace cocon {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class Fn>
Verdict decide(std::string property, Fn&& fn)
{
    Verdict v{std::move(property), std::nullopt, ""};
    try {
        fn(v);
    } catch (const BoundExceeded& e) {
        v.value.reset();
        v.note = e.what();
    }
    return v;
}

void finalize(EquivalenceReport& report)
{
    std::optional<bool> common;
    report.agreement = true;
    for (const std::string& p : report.claimed) {
        const Verdict* v = report.find(p);
        if (!v || !v->value) {
            report.skipped = true;
            report.agreement = false;
            continue;
        }
        if (!common) common = v->value;
        if (*common != *v->value) report.agreement = false;
    }
    auto value = [&](std::string_view p) -> std::optional<bool> {
        const Verdict* v = report.find(p);
        return v ? v->value : std::nullopt;
    };
    report.hierarchy = true;
    const auto vd = value("vd");
    const auto sh = value("shellable");
    if (vd && sh && *vd && !*sh) report.hierarchy = false;
    for (const Verdict& v : report.verdicts) {
        if (v.property.rfind("cm:", 0) != 0 || !v.value) continue;
        if (sh && *sh && !*v.value) report.hierarchy = false;
        if (vd && *vd && !*v.value) report.hierarchy = false;
    }
}

std::vector<std::string> five_way(const std::vector<FieldSpec>& fields, bool with_gap_free, bool with_predicate)
{
    std::vector<std::string> out{"vd", "shellable"};
    for (const FieldSpec& f : fields) out.push_back("cm:" + f.name());
    if (with_gap_free) out.push_back("gap_free");
    out.push_back("cochordal");
    if (with_predicate) out.push_back("predicate");
    return out;
}

struct Instance {
    Graph graph;
    int n = 0;
    int r = 0;
    std::string description;
    std::optional<bool> predicate;
    std::vector<std::string> claimed;
};

}  // namespace

const Verdict* EquivalenceReport::find(std::string_view property) const
{
    for (const Verdict& v : verdicts) {
        if (v.property == property) return &v;
    }
    return nullptr;
}

Limits harness_limits()
{
    Limits out;
    out.max_shelling_facets = 256;
    return out;
}

Graph random_chordal_graph(int n, Rng& rng)
{
    if (n < 1) throw std::invalid_argument("random_chordal_graph needs n >= 1");
    std::vector<Edge> edges;
    std::vector<VertexSet> adj(n);
    for (Vertex v = 1; v < n; ++v) {
        const Vertex anchor = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
        std::vector<Vertex> pool = adj[anchor].to_vector();
        std::shuffle(pool.begin(), pool.end(), rng);
        VertexSet clique{anchor};
        std::bernoulli_distribution keep(0.6);
        for (Vertex u : pool) {
            if (!clique.subset_of(adj[u])) continue;
            if (keep(rng)) clique.insert(u);
        }
        for (Vertex u : clique) {
            edges.emplace_back(u, v);
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    return Graph::from_edge_list(n, edges);
}

Cotree random_cotree(int leaves, Rng& rng)
{
    if (leaves < 1) throw std::invalid_argument("random_cotree needs at least one leaf");
    Vertex next = 0;
    auto build = [&](auto&& self, int count, Cotree::Kind kind) -> Cotree {
        if (count == 1) return Cotree{Cotree::Kind::Leaf, next++, {}};
        Cotree node{kind, 0, {}};
        const Cotree::Kind child_kind = kind == Cotree::Kind::Union ? Cotree::Kind::Join : Cotree::Kind::Union;
        int left = count;
        while (left > 0) {
            // at least two children per internal node
            const int max_part = node.children.empty() ? left - 1 : left;
            const int part = std::uniform_int_distribution<int>(1, max_part)(rng);
            node.children.push_back(self(self, part, child_kind));
            left -= part;
        }
        return node;
    };
    const Cotree::Kind root = std::bernoulli_distribution(0.5)(rng) ? Cotree::Kind::Union : Cotree::Kind::Join;
    return build(build, leaves, root);
}

std::string family_name(Family f)
{
    switch (f) {
        case Family::Cycle: return "cycle";
        case Family::Ladder: return "ladder";
        case Family::Grid3: return "grid3";
        case Family::CycleComplement: return "cycle_complement";
        case Family::Chordal: return "chordal";
        case Family::Cograph: return "cograph";
        case Family::Cochordal: return "cochordal";
    }
    return "?";
}

Family parse_family(const std::string& name)
{
    for (Family f : {Family::Cycle, Family::Ladder, Family::Grid3, Family::CycleComplement, Family::Chordal, Family::Cograph,
                     Family::Cochordal}) {
        if (family_name(f) == name) return f;
    }
    throw std::invalid_argument("unknown family: " + name);
}

EquivalenceReport evaluate_graph(const Graph& g, int r, const std::vector<FieldSpec>& fields, const Limits& limits,
                                 std::optional<bool> predicate)
{
    if (r < 2) throw std::invalid_argument("evaluate_graph needs r >= 2");
    const auto t0 = std::chrono::steady_clock::now();
    EquivalenceReport out;
    out.r = r;
    out.n = g.n();
    const SimplicialComplex sigma = sigma_r(g, VertexSet{}, r);

    out.verdicts.push_back(decide("vd", [&](Verdict& v) { v.value = is_vertex_decomposable(sigma).decomposable; }));
    out.verdicts.push_back(decide("vd_ordering", [&](Verdict& v) { v.value = vd_sigma_via_ordering(g, r).decomposable; }));
    out.verdicts.push_back(decide("shellable", [&](Verdict& v) {
        const ShellingResult s = find_shelling(sigma, limits);
        v.value = s.shellable;
        if (s.obstruction_dimension) v.note = "refuted by reduced homology in dimension " + std::to_string(*s.obstruction_dimension);
    }));
    for (const FieldSpec& f : fields) {
        out.verdicts.push_back(decide("cm:" + f.name(), [&](Verdict& v) {
            const CohenMacaulayResult cm = is_cohen_macaulay(sigma, f, limits);
            v.value = cm.cohen_macaulay;
            if (cm.failing_face) v.note = "link of " + cm.failing_face->to_string() + " fails";
        }));
    }
    out.verdicts.push_back(decide("cochordal", [&](Verdict& v) {
        const ChordalClutterResult c = is_chordal_clutter(complement_clutter(con_r(g, r)), limits);
        v.value = c.chordal;
        if (c.obstruction) v.note = "induced subclutter on " + c.obstruction->to_string() + " is not chordal";
    }));
    out.verdicts.push_back(decide("gap_free", [&](Verdict& v) {
        const GapFreeResult gf = is_r_gap_free(g, r);
        v.value = gf.gap_free;
        if (gf.gap) v.note = "gap " + gf.gap->first.to_string() + " " + gf.gap->second.to_string();
    }));
    if (predicate) out.verdicts.push_back({"predicate", predicate, ""});
    finalize(out);
    out.seconds = seconds_since(t0);
    return out;
}

std::vector<EquivalenceReport> run_family_check(const FamilyCheckConfig& config)
{
    std::vector<Instance> instances;
    Rng rng(config.seed);
    const int r_lo = std::max(2, config.r_min);
    const auto& fields = config.fields;
    switch (config.family) {
        case Family::Cycle:
            for (int n = std::max(3, config.n_min); n <= config.n_max; ++n) {
                for (int r = r_lo; r <= config.r_max; ++r) {
                    instances.push_back({cycle_graph(n), n, r, "C_" + std::to_string(n), n <= r + 2, five_way(fields, false, true)});
                }
            }
            break;
        case Family::Ladder:
            for (int n = std::max(1, config.n_min); n <= config.n_max; ++n) {
                for (int r = r_lo; r <= config.r_max; ++r) {
                    instances.push_back({ladder_graph(n), n, r, "P_" + std::to_string(n) + " x P_2", n <= r, five_way(fields, true, true)});
                }
            }
            break;
        case Family::Grid3:
            // the characterization needs n >= 3; smaller grids are left out rather than extrapolated
            for (int n = std::max(3, config.n_min); n <= config.n_max; ++n) {
                for (int r = r_lo; r <= config.r_max; ++r) {
                    instances.push_back({grid3_graph(n), n, r, "P_" + std::to_string(n) + " x P_3", 2 * n <= r, five_way(fields, false, true)});
                }
            }
            break;
        case Family::CycleComplement:
            for (int n = std::max(3, config.n_min); n <= config.n_max; ++n) {
                for (int r = std::max(3, config.r_min); r <= config.r_max; ++r) {
                    instances.push_back({cycle_complement(n), n, r, "complement of C_" + std::to_string(n), true, {"vd", "predicate"}});
                }
            }
            break;
        case Family::Chordal:
        case Family::Cochordal:
            for (int n = std::max(1, config.n_min); n <= config.n_max; ++n) {
                for (int r = r_lo; r <= config.r_max; ++r) {
                    for (int s = 0; s < config.samples; ++s) {
                        Graph g = random_chordal_graph(n, rng);
                        if (config.family == Family::Chordal) {
                            instances.push_back({g, n, r, write_edge_list(g), std::nullopt, five_way(fields, true, false)});
                        } else {
                            g = complement(g);
                            instances.push_back({g, n, r, write_edge_list(g), true, {"vd", "predicate"}});
                        }
                    }
                }
            }
            break;
        case Family::Cograph:
            for (int n = std::max(1, config.n_min); n <= config.n_max; ++n) {
                for (int r = r_lo; r <= config.r_max; ++r) {
                    for (int s = 0; s < config.samples; ++s) {
                        const Cotree t = random_cotree(n, rng);
                        instances.push_back({cograph_from_cotree(t), n, r, t.to_string(), std::nullopt, five_way(fields, true, false)});
                    }
                }
            }
            break;
    }

    std::vector<EquivalenceReport> out(instances.size());
    parallel_for(instances.size(), config.workers, [&](std::size_t i) {
        const Instance& in = instances[i];
        EquivalenceReport rep = evaluate_graph(in.graph, in.r, fields, config.limits, in.predicate);
        rep.family = family_name(config.family);
        rep.n = in.n;
        rep.instance = in.description;
        rep.claimed = in.claimed;
        finalize(rep);
        out[i] = std::move(rep);
    });
    return out;
}

CertificateReport replay_certificates(bool include_grid4, const Limits& limits)
{
    CertificateReport out;
    auto run = [&](std::string name, auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        SubCheck c{std::move(name), false, "", 0};
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("error: ") + e.what();
        }
        c.seconds = seconds_since(t0);
        out.checks.push_back(std::move(c));
    };

    const Graph g = fixtures::gap_free_example();
    const SimplicialComplex sigma = sigma_r(g, VertexSet{}, 3);

    run("gap_free", [&](SubCheck& c) {
        const GapFreeResult gf = is_r_gap_free(g, 3);
        c.ok = gf.gap_free;
        c.detail = gf.gap_free ? "no two connected 3-sets form a gap" : "gap " + gf.gap->first.to_string() + " " + gf.gap->second.to_string();
    });
    run("elimination", [&](SubCheck& c) {
        const EliminationReplay replay = verify_elimination(complement_clutter(con_r(g, 3)), fixtures::gap_free_elimination());
        c.ok = replay.ok;
        c.detail = replay.ok ? "20 steps, every subcircuit simplicial, no circuits left"
                             : "step " + std::to_string(*replay.failed_step) + " fails, " + std::to_string(replay.remaining_circuits) + " circuits left";
    });
    run("shelling_order", [&](SubCheck& c) {
        const OrderCheck check = verify_shelling(sigma, fixtures::gap_free_shelling());
        c.ok = check.ok;
        c.detail = check.ok ? std::to_string(sigma.facet_count()) + " facets shell in the given order"
                            : "fails at position " + std::to_string(*check.failing_index);
    });
    run("no_shedding_vertex", [&](SubCheck& c) {
        int shedding = 0;
        for (Vertex x : sigma.ground()) {
            const bool generic = is_shedding_generic(sigma, x);
            const bool supp = is_shedding_supp(g, VertexSet{}, 3, x);
            const bool conr = is_shedding_conr(g, 3, x);
            if (generic != supp || supp != conr) throw std::logic_error("shedding tests disagree at vertex " + std::to_string(x));
            shedding += generic ? 1 : 0;
        }
        c.ok = shedding == 0;
        c.detail = std::to_string(sigma.ground().size()) + " vertices, " + std::to_string(shedding) + " shedding";
    });
    run("unicyclic", [&](SubCheck& c) {
        c.ok = true;
        for (int r : {3, 4}) {
            const Graph u = unicyclic_graph(r);
            const SimplicialComplex s = sigma_r(u, VertexSet{}, r);
            const ShellingResult sh = find_shelling(s, limits);
            const bool shellable = sh.shellable && verify_shelling(s, sh.order).ok;
            const bool vd = is_vertex_decomposable(s).decomposable;
            const bool gf = is_r_gap_free(u, r).gap_free;
            c.ok = c.ok && shellable && !vd && gf;
            if (!c.detail.empty()) c.detail += "; ";
            c.detail += "r=" + std::to_string(r) + ": " + std::to_string(s.facet_count()) + " facets, shellable " + (shellable ? "yes" : "no") +
                        ", vd " + (vd ? "yes" : "no") + ", gap-free " + (gf ? "yes" : "no");
        }
    });
    if (include_grid4) {
        run("grid4_r10", [&](SubCheck& c) {
            const Graph p4 = path_graph(4);
            const Graph grid = product(p4, p4);
            const SimplicialComplex s = sigma_r(grid, VertexSet{}, 10);
            Limits big = limits;
            big.max_shelling_facets = std::max<std::size_t>(big.max_shelling_facets, s.facet_count());
            const ShellingResult sh = find_shelling(s, big);
            const bool shellable = sh.shellable && verify_shelling(s, sh.order).ok;
            const bool vd = is_vertex_decomposable(s).decomposable;
            c.ok = shellable && !vd;
            c.detail = std::to_string(s.facet_count()) + " facets, shellable " + (shellable ? "yes" : "no") + ", vd " + (vd ? "yes" : "no");
        });
    }
    out.ok = std::all_of(out.checks.begin(), out.checks.end(), [](const SubCheck& c) { return c.ok; });
    return out;
}

ScanReport cm_cochordal_scan(const ScanConfig& config)
{
    if (config.r < 2) throw std::invalid_argument("cm_cochordal_scan needs r >= 2");
    std::vector<Graph> graphs;
    if (config.graphs) {
        graphs = *config.graphs;
    } else {
        for (int n = std::max(1, config.min_n); n <= config.max_n; ++n) {
            std::vector<Graph> level = enumerate_graphs(n, true, config.limits.max_canonical_n);
            graphs.insert(graphs.end(), level.begin(), level.end());
        }
    }

    struct Row {
        std::vector<ScanFinding> findings;
        std::optional<std::string> field_dependent;
        std::optional<std::string> notice;
        bool cochordal = false;
    };
    std::vector<Row> rows(graphs.size());
    parallel_for(graphs.size(), config.workers, [&](std::size_t i) {
        const Graph& g = graphs[i];
        Row& row = rows[i];
        const std::string g6 = to_graph6(g);
        try {
            const SimplicialComplex sigma = sigma_r(g, VertexSet{}, config.r);
            const Clutter co = complement_clutter(con_r(g, config.r));
            const ChordalClutterResult chordal = is_chordal_clutter(co, config.limits);
            row.cochordal = chordal.chordal;
            std::optional<bool> first;
            for (const FieldSpec& f : config.fields) {
                const CohenMacaulayResult cm = is_cohen_macaulay(sigma, f, config.limits);
                if (first && *first != cm.cohen_macaulay) row.field_dependent = g6;
                if (!first) first = cm.cohen_macaulay;
                if (cm.cohen_macaulay == chordal.chordal) continue;
                ScanFinding hit{g, g6, f.name(), cm.cohen_macaulay, chordal.chordal, false, ""};
                // replay both sides independently before calling it confirmed
                bool co_side = true;
                if (chordal.chordal) co_side = verify_elimination(co, *chordal.certificate).ok;
                bool cm_side = true;
                if (!cm.cohen_macaulay) {
                    const SimplicialComplex lk = link(sigma, *cm.failing_face);
                    const BettiProfile b = reduced_betti(lk, f, config.limits);
                    cm_side = false;
                    for (int i = -1; i < lk.dimension(); ++i) cm_side = cm_side || b.at(i) != 0;
                    hit.detail = "link of " + cm.failing_face->to_string() + " has homology below its top dimension";
                } else {
                    hit.detail = "CM but the complement of Con_r is not chordal";
                }
                hit.confirmed = co_side && cm_side;
                row.findings.push_back(std::move(hit));
            }
        } catch (const BoundExceeded& e) {
            row.notice = g6 + ": skipped, " + e.what();
        }
    });

    ScanReport out;
    out.graphs_scanned = graphs.size();
    for (Row& row : rows) {
        out.cochordal_count += row.cochordal ? 1 : 0;
        for (ScanFinding& f : row.findings) out.findings.push_back(std::move(f));
        if (row.field_dependent) out.field_dependent.push_back(*row.field_dependent);
        if (row.notice) out.notices.push_back(*row.notice);
    }
    return out;
}

std::vector<std::int64_t> cycle_independence_betti(int n, int r)
{
    if (r < 2 || n < r + 1) throw std::invalid_argument("cycle_independence_betti needs r >= 2 and n >= r + 1");
    const int k = n / (r + 1);
    const int l = n % (r + 1);
    int dim = 0;
    std::int64_t count = 1;
    if (l == 0) {
        dim = (r - 1) * k - 1;
        count = r;
    } else if (l == 1) {
        dim = (r - 1) * k - 1;
    } else {
        dim = (r - 1) * k + l - 2;
    }
    std::vector<std::int64_t> out(dim + 2, 0);
    out[dim + 1] = count;
    return out;
}

std::vector<CycleHomologyRow> cycle_homology_check(int n_min, int n_max, int r_min, int r_max, const Limits& limits)
{
    std::vector<CycleHomologyRow> out;
    for (int n = n_min; n <= n_max; ++n) {
        for (int r = std::max(2, r_min); r <= std::min(r_max, n - 1); ++r) {
            CycleHomologyRow row;
            row.n = n;
            row.r = r;
            row.expected = cycle_independence_betti(n, r);
            row.actual = integer_homology(ind_r(cycle_graph(n), r), limits);
            std::vector<std::int64_t> a = row.actual.betti;
            std::vector<std::int64_t> e = row.expected;
            const std::size_t len = std::max(a.size(), e.size());
            a.resize(len, 0);
            e.resize(len, 0);
            row.match = a == e && row.actual.torsion.empty();
            out.push_back(std::move(row));
        }
    }
    return out;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn)
{
    const std::size_t threads = std::min<std::size_t>(std::max(1, workers), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace cocon
