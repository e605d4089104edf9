#include "cocon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cocon/clutter.hpp"
#include "cocon/complex.hpp"
#include "cocon/decomp.hpp"
#include "cocon/graph.hpp"
#include "cocon/graph_io.hpp"
#include "cocon/homology.hpp"
#include "cocon/json_io.hpp"
#include "cocon/verify.hpp"

namespace cocon {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string edges;
    std::string graph6;
    std::string family;
    std::string cotree;
    std::optional<int> n;

    void attach(CLI::App* app)
    {
        app->add_option("--edges", edges, "edge-list file: header 'n m', then one 'u v' per line (0-based)");
        app->add_option("--graph6", graph6, "graph6 string");
        app->add_option("--family", family, "named family: path, cycle, complete, ladder, grid3, cycle_complement, unicyclic");
        app->add_option("--n", n, "family parameter");
        app->add_option("--cotree", cotree, "cotree such as join(K1,union(K1,K1))");
    }

    Graph load() const
    {
        const int given = !edges.empty() + !graph6.empty() + !family.empty() + !cotree.empty();
        if (given != 1) throw UsageError("give exactly one graph source: --edges, --graph6, --family or --cotree");
        if (!edges.empty()) {
            std::ifstream in(edges);
            if (!in) throw UsageError("cannot open edge list " + edges);
            return read_edge_list(in);
        }
        if (!graph6.empty()) return parse_graph6(graph6);
        if (!cotree.empty()) return cograph_from_cotree(Cotree::parse(cotree));
        if (!n) throw UsageError("--family needs --n");
        return cocon::family(family, *n);
    }
};

struct BoundFlags {
    std::optional<std::size_t> max_faces;
    std::optional<std::size_t> max_shelling_facets;
    std::optional<std::size_t> max_circuits;
    std::optional<int> max_canonical_n;
    std::optional<int> max_leray_ground;

    void attach(CLI::App* app)
    {
        app->add_option("--max-faces", max_faces, "face enumeration bound");
        app->add_option("--max-shelling-facets", max_shelling_facets, "facet bound for the shelling search");
        app->add_option("--max-circuits", max_circuits, "circuit bound for clutter searches");
        app->add_option("--max-canonical-n", max_canonical_n, "vertex bound for canonical keys and enumeration");
        app->add_option("--max-leray-ground", max_leray_ground, "ground-set bound for Leray numbers");
    }

    Limits apply(Limits base, std::ostream& err) const
    {
        auto set = [&](const char* name, auto& slot, const auto& value) {
            if (!value) return;
            err << "warning: bound " << name << " changed from " << slot << " to " << *value << "\n";
            slot = *value;
        };
        set("max-faces", base.max_faces, max_faces);
        set("max-shelling-facets", base.max_shelling_facets, max_shelling_facets);
        set("max-circuits", base.max_circuits, max_circuits);
        set("max-canonical-n", base.max_canonical_n, max_canonical_n);
        set("max-leray-ground", base.max_leray_ground, max_leray_ground);
        return base;
    }
};

std::vector<FieldSpec> parse_fields(const std::vector<std::string>& names)
{
    std::vector<FieldSpec> out;
    for (const std::string& s : names) {
        try {
            out.push_back(FieldSpec::parse(s));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (out.empty()) throw UsageError("--fields needs at least one field");
    return out;
}

VertexSet parse_a(const Graph& g, const std::vector<int>& a)
{
    VertexSet out;
    for (int x : a) {
        if (x < 0 || x >= g.n()) throw UsageError("--A vertex " + std::to_string(x) + " is not a vertex of the graph");
        out.insert(x);
    }
    return out;
}

std::string yes_no(std::optional<bool> v)
{
    if (!v) return "-";
    return *v ? "yes" : "no";
}

Json report_json(const EquivalenceReport& rep, bool timings)
{
    Json verdicts = Json::object();
    Json notes = Json::object();
    for (const Verdict& v : rep.verdicts) {
        verdicts[v.property] = v.value ? Json(*v.value) : Json(nullptr);
        if (!v.note.empty()) notes[v.property] = v.note;
    }
    Json j{{"family", rep.family}, {"n", rep.n}, {"r", rep.r}, {"instance", rep.instance}, {"verdicts", std::move(verdicts)}};
    if (!notes.empty()) j["notes"] = std::move(notes);
    j["claimed"] = rep.claimed;
    j["agreement"] = rep.agreement;
    j["hierarchy"] = rep.hierarchy;
    j["skipped"] = rep.skipped;
    if (timings) j["seconds"] = rep.seconds;
    return j;
}

void print_report_table(const std::vector<EquivalenceReport>& reports, std::ostream& out)
{
    if (reports.empty()) return;
    std::vector<std::string> columns;
    for (const Verdict& v : reports.front().verdicts) columns.push_back(v.property);
    out << std::left << std::setw(18) << "instance" << std::setw(4) << "r";
    for (const std::string& c : columns) out << std::setw(12) << c;
    out << "agree\n";
    for (const EquivalenceReport& rep : reports) {
        std::string name = rep.instance.size() > 16 ? rep.instance.substr(0, 13) + "..." : rep.instance;
        for (char& ch : name) {
            if (ch == '\n') ch = ' ';
        }
        out << std::setw(18) << name << std::setw(4) << rep.r;
        for (const std::string& c : columns) {
            const Verdict* v = rep.find(c);
            out << std::setw(12) << yes_no(v ? v->value : std::nullopt);
        }
        out << (rep.skipped ? "skipped" : rep.agreement && rep.hierarchy ? "yes" : "NO") << "\n";
    }
}

struct Outputs {
    std::ostream& out;
    std::ostream& err;
    std::ofstream file;
    std::ostream* json = nullptr;

    Outputs(std::ostream& o, std::ostream& e, const std::string& path) : out(o), err(e)
    {
        if (path.empty()) {
            json = &out;
            return;
        }
        file.open(path);
        if (!file) throw UsageError("cannot write " + path);
        json = &file;
    }

    void line(const Json& j) { *json << j.dump() << "\n"; }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Co-connected complexes and clutters of small graphs", "cocon"};
    app.require_subcommand(1);

    GraphSource source;
    BoundFlags bounds;
    int r = 0;
    std::vector<int> a;
    bool one_indexed = false;
    std::string output;
    std::vector<std::string> field_names{"Q", "F2"};
    std::string what = "sigma";
    std::string property;
    int workers = 1;
    std::uint64_t seed = 1;
    bool timings = false;

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--one-indexed", one_indexed, "print vertex labels starting from 1");
        sub->add_option("--output", output, "write JSON lines to this file instead of standard output");
    };

    CLI::App* build = app.add_subcommand("build", "print Sigma_r(A,G), Ind_r(G) or Con_r(G) as JSON");
    source.attach(build);
    build->add_option("--r", r, "size parameter")->required()->check(CLI::PositiveNumber);
    build->add_option("--A", a, "vertices of A (Sigma only)")->delimiter(',');
    build->add_option("--what", what, "sigma, ind or con")->check(CLI::IsMember({"sigma", "ind", "con"}));
    common(build);

    CLI::App* check = app.add_subcommand("check", "decide one property, with a certificate or a witness");
    check->add_option("property", property, "vd, shell, cm, cochordal or gapfree")
        ->required()
        ->check(CLI::IsMember({"vd", "shell", "cm", "cochordal", "gapfree"}));
    source.attach(check);
    check->add_option("--r", r, "size parameter")->required()->check(CLI::PositiveNumber);
    check->add_option("--A", a, "vertices of A (vd, shell, cm)")->delimiter(',');
    check->add_option("--fields", field_names, "fields for cm: Q, F2, Fp:p")->delimiter(',');
    common(check);
    bounds.attach(check);

    CLI::App* verify = app.add_subcommand("verify", "equivalence harness");
    verify->require_subcommand(1);
    CLI::App* vfamily = verify->add_subcommand("family", "equivalence sweep over a graph family");
    std::string family_name_opt;
    std::optional<int> n_min, n_max, r_min, r_max;
    int samples = 10;
    vfamily->add_option("--family", family_name_opt, "cycle, ladder, grid3, cycle_complement, chordal, cograph, cochordal")->required();
    vfamily->add_option("--n-min", n_min);
    vfamily->add_option("--n-max", n_max);
    vfamily->add_option("--r-min", r_min);
    vfamily->add_option("--r-max", r_max);
    vfamily->add_option("--samples", samples, "random graphs per (n, r) for random families");
    vfamily->add_option("--seed", seed);
    vfamily->add_option("--workers", workers)->check(CLI::PositiveNumber);
    vfamily->add_option("--fields", field_names)->delimiter(',');
    vfamily->add_flag("--timings", timings, "include wall-clock seconds in the JSON");
    common(vfamily);
    bounds.attach(vfamily);

    CLI::App* vcert = verify->add_subcommand("certificates", "replay the embedded certificates");
    bool grid4 = false;
    vcert->add_flag("--grid4", grid4, "also check Sigma_10(P_4 x P_4) (long-running)");
    common(vcert);
    bounds.attach(vcert);

    CLI::App* vcycles = verify->add_subcommand("cycles", "homology of Ind_r(C_n) against the wedge-of-spheres formula");
    int cn_min = 4, cn_max = 10, cr_min = 2, cr_max = 4;
    vcycles->add_option("--n-min", cn_min);
    vcycles->add_option("--n-max", cn_max);
    vcycles->add_option("--r-min", cr_min);
    vcycles->add_option("--r-max", cr_max);
    common(vcycles);
    bounds.attach(vcycles);

    CLI::App* scan = app.add_subcommand("scan", "compare CM with co-chordality over small connected graphs");
    int scan_min = 1, scan_max = 6, scan_r = 3;
    std::string graph6_file;
    scan->add_option("--min-n", scan_min);
    scan->add_option("--max-n", scan_max);
    scan->add_option("--r", scan_r)->check(CLI::Range(2, 64));
    scan->add_option("--fields", field_names)->delimiter(',');
    scan->add_option("--workers", workers)->check(CLI::PositiveNumber);
    scan->add_option("--graph6-file", graph6_file, "scan the graphs in this graph6 stream instead ('-' for standard input)");
    common(scan);
    bounds.attach(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    const int offset = one_indexed ? 1 : 0;
    try {
        if (build->parsed()) {
            Outputs io(out, err, output);
            const Graph g = source.load();
            Json j{{"object", what}, {"r", r}};
            if (what == "sigma") {
                const VertexSet aset = parse_a(g, a);
                j["A"] = to_json(aset, offset);
                j.update(to_json(sigma_r(g, aset, r), offset));
            } else {
                if (!a.empty()) throw UsageError("--A applies to sigma only");
                if (what == "ind") j.update(to_json(ind_r(g, r), offset));
                if (what == "con") j.update(to_json(con_r(g, r), offset));
            }
            io.line(j);
            return kExitOk;
        }

        if (check->parsed()) {
            Outputs io(out, err, output);
            const Graph g = source.load();
            const Limits limits = bounds.apply(Limits{}, err);
            const VertexSet aset = parse_a(g, a);
            if ((property == "cochordal" || property == "gapfree") && !aset.empty()) {
                throw UsageError("--A does not apply to " + property);
            }
            Json j{{"property", property}, {"r", r}};
            bool verdict = false;
            if (property == "vd" || property == "shell" || property == "cm") {
                j["A"] = to_json(aset, offset);
                const SimplicialComplex sigma = sigma_r(g, aset, r);
                if (property == "vd") {
                    const VdResult vd = is_vertex_decomposable(sigma);
                    verdict = vd.decomposable;
                    j["verdict"] = verdict;
                    if (verdict) {
                        j["certificate"] = vd_tree_json(*vd.certificate, offset);
                        if (aset.empty() && r >= 2) {
                            const SheddingOrderResult ord = vd_sigma_via_ordering(g, r);
                            if (ord.decomposable) j["shedding_order"] = shedding_order_json(ord.order, r, offset);
                        }
                    } else {
                        VertexSet shedding;
                        for (Vertex x : sigma.ground()) {
                            if (is_shedding_generic(sigma, x)) shedding.insert(x);
                        }
                        j["witness"] = Json{{"reason", shedding.empty() ? "no shedding vertex"
                                                                        : "every shedding vertex leaves a link or deletion that is not vertex decomposable"},
                                            {"shedding_vertices", to_json(shedding, offset)}};
                    }
                } else if (property == "shell") {
                    const ShellingResult sh = find_shelling(sigma, limits);
                    verdict = sh.shellable;
                    j["verdict"] = verdict;
                    if (verdict) {
                        j["certificate"] = shelling_order_json(sh.order, offset);
                    } else {
                        Json w = Json::object();
                        const std::vector<long long> h = sigma.is_pure() ? h_vector(sigma, limits) : std::vector<long long>{};
                        if (sh.obstruction_dimension) {
                            w["reason"] = "reduced homology below the top dimension";
                            w["dimension"] = *sh.obstruction_dimension;
                            w["homology"] = to_json(reduced_betti(sigma, FieldSpec::rationals(), limits));
                        } else if (std::any_of(h.begin(), h.end(), [](long long x) { return x < 0; })) {
                            w["reason"] = "negative h-vector entry";
                            w["h_vector"] = h;
                        } else {
                            w["reason"] = "exhaustive search found no shelling";
                            w["states"] = sh.states;
                        }
                        j["witness"] = std::move(w);
                    }
                } else {
                    verdict = true;
                    Json per = Json::array();
                    for (const FieldSpec& f : parse_fields(field_names)) {
                        const CohenMacaulayResult cm = is_cohen_macaulay(sigma, f, limits);
                        verdict = verdict && cm.cohen_macaulay;
                        Json fj{{"field", f.name()}, {"cohen_macaulay", cm.cohen_macaulay}, {"distinct_links", cm.distinct_links}};
                        if (cm.failing_face) {
                            fj["failing_face"] = to_json(*cm.failing_face, offset);
                            fj["failing_dimension"] = *cm.failing_dimension;
                            fj["link_homology"] = to_json(reduced_betti(link(sigma, *cm.failing_face), f, limits));
                        }
                        per.push_back(std::move(fj));
                    }
                    j["verdict"] = verdict;
                    j["fields"] = std::move(per);
                }
            } else if (property == "cochordal") {
                const ChordalClutterResult c = is_chordal_clutter(complement_clutter(con_r(g, r)), limits);
                verdict = c.chordal;
                j["verdict"] = verdict;
                if (verdict) {
                    j["certificate"] = elimination_json(*c.certificate, offset);
                } else {
                    j["witness"] = Json{{"reason", "an induced subclutter of the complement admits no elimination"},
                                        {"vertices", c.obstruction ? to_json(*c.obstruction, offset) : Json(nullptr)}};
                }
            } else {
                const GapFreeResult gf = is_r_gap_free(g, r);
                verdict = gf.gap_free;
                j["verdict"] = verdict;
                if (verdict) {
                    j["certificate"] = Json{{"kind", "gap_free"}, {"connected_sets", enumerate_connected_subsets(g, r).size()}};
                } else {
                    j["witness"] = Json{{"gap", Json::array({to_json(gf.gap->first, offset), to_json(gf.gap->second, offset)})}};
                }
            }
            io.line(j);
            return verdict ? kExitOk : kExitFalse;
        }

        if (vfamily->parsed()) {
            Outputs io(out, err, output);
            FamilyCheckConfig config;
            try {
                config.family = parse_family(family_name_opt);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            struct Range {
                int n_lo, n_hi, r_lo, r_hi;
            };
            Range def{3, 8, 2, 6};
            switch (config.family) {
                case Family::Cycle: def = {3, 8, 2, 6}; break;
                case Family::Ladder: def = {2, 5, 2, 6}; break;
                case Family::Grid3: def = {3, 3, 5, 7}; break;
                case Family::CycleComplement: def = {3, 9, 3, 4}; break;
                case Family::Chordal:
                case Family::Cograph:
                case Family::Cochordal: def = {2, 8, 2, 3}; break;
            }
            config.n_min = n_min.value_or(def.n_lo);
            config.n_max = n_max.value_or(def.n_hi);
            config.r_min = r_min.value_or(def.r_lo);
            config.r_max = r_max.value_or(def.r_hi);
            config.samples = samples;
            config.seed = seed;
            config.workers = workers;
            config.fields = parse_fields(field_names);
            config.limits = bounds.apply(harness_limits(), err);
            const std::vector<EquivalenceReport> reports = run_family_check(config);
            bool agree = true;
            bool skipped = false;
            for (const EquivalenceReport& rep : reports) {
                io.line(report_json(rep, timings));
                if (rep.skipped) {
                    skipped = true;
                    err << "notice: " << rep.instance << " r=" << rep.r << " skipped on a bound\n";
                } else if (!rep.agreement || !rep.hierarchy) {
                    agree = false;
                }
            }
            out << "family " << family_name(config.family) << ", seed " << config.seed << ", " << reports.size() << " instances\n";
            print_report_table(reports, out);
            if (!agree) return kExitFalse;
            return skipped ? kExitBound : kExitOk;
        }

        if (vcert->parsed()) {
            Outputs io(out, err, output);
            const CertificateReport rep = replay_certificates(grid4, bounds.apply(harness_limits(), err));
            for (const SubCheck& c : rep.checks) io.line(Json{{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
            for (const SubCheck& c : rep.checks) out << std::left << std::setw(22) << c.name << (c.ok ? "ok    " : "FAIL  ") << c.detail << "\n";
            return rep.ok ? kExitOk : kExitFalse;
        }

        if (vcycles->parsed()) {
            Outputs io(out, err, output);
            const auto rows = cycle_homology_check(cn_min, cn_max, cr_min, cr_max, bounds.apply(Limits{}, err));
            bool all = true;
            for (const CycleHomologyRow& row : rows) {
                Json expected = Json::object();
                for (std::size_t i = 0; i < row.expected.size(); ++i) {
                    if (row.expected[i] != 0) expected[std::to_string(static_cast<int>(i) - 1)] = row.expected[i];
                }
                io.line(Json{{"n", row.n}, {"r", row.r}, {"expected", std::move(expected)}, {"homology", to_json(row.actual)}, {"match", row.match}});
                out << "C_" << row.n << " r=" << row.r << (row.match ? "  match" : "  MISMATCH") << "\n";
                all = all && row.match;
            }
            return all ? kExitOk : kExitFalse;
        }

        if (scan->parsed()) {
            Outputs io(out, err, output);
            ScanConfig config;
            config.min_n = scan_min;
            config.max_n = scan_max;
            config.r = scan_r;
            config.fields = parse_fields(field_names);
            config.workers = workers;
            config.limits = bounds.apply(harness_limits(), err);
            if (!graph6_file.empty()) {
                if (graph6_file == "-") {
                    config.graphs = read_graph6_stream(std::cin);
                } else {
                    std::ifstream in(graph6_file);
                    if (!in) throw UsageError("cannot open " + graph6_file);
                    config.graphs = read_graph6_stream(in);
                }
            }
            const ScanReport rep = cm_cochordal_scan(config);
            bool confirmed = false;
            for (const ScanFinding& f : rep.findings) {
                io.line(Json{{"graph6", f.graph6}, {"field", f.field}, {"cohen_macaulay", f.cohen_macaulay}, {"cochordal", f.cochordal},
                             {"confirmed", f.confirmed}, {"detail", f.detail}});
                confirmed = confirmed || f.confirmed;
            }
            for (const std::string& n : rep.notices) err << "notice: " << n << "\n";
            io.line(Json{{"scanned", rep.graphs_scanned}, {"cochordal", rep.cochordal_count}, {"findings", rep.findings.size()},
                         {"field_dependent", rep.field_dependent}});
            out << "scanned " << rep.graphs_scanned << " graphs (r=" << config.r << "), " << rep.cochordal_count << " co-chordal, "
                << rep.findings.size() << " discrepancies, " << rep.field_dependent.size() << " field-dependent\n";
            return confirmed ? kExitFalse : (rep.notices.empty() ? kExitOk : kExitBound);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BoundExceeded& e) {
        err << "bound exceeded: " << e.what() << "\n";
        return kExitBound;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cocon
