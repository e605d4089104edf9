#ifndef COCON_VERIFY_HPP
#define COCON_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cocon/graph.hpp"
#include "cocon/homology.hpp"
#include "cocon/limits.hpp"

// Equivalence harness: family sweeps, the embedded certificates, the cycle homology
// table and the CM versus co-chordality scan.
namespace cocon {

using Rng = std::mt19937_64;

/// Chordal graph on n vertices grown one simplicial vertex at a time: each new
/// vertex is joined to a random clique around a random earlier vertex.
Graph random_chordal_graph(int n, Rng& rng);
/// Random cotree with `leaves` leaves; children of a node alternate between union and join.
Cotree random_cotree(int leaves, Rng& rng);

/// Harness bounds: the library defaults with the shelling facet bound raised, since
/// positive shelling searches on the swept families finish greedily.
Limits harness_limits();

struct Verdict {
    std::string property;  // "vd", "shellable", "cm:Q", "cm:F2", "cochordal", "gap_free", "predicate"
    std::optional<bool> value;  // nullopt when a bound stopped the computation
    std::string note;
};

struct EquivalenceReport {
    std::string family;
    int n = 0;
    int r = 0;
    std::string instance;  // human-readable graph description
    std::vector<Verdict> verdicts;
    /// Properties expected to coincide on this family.
    std::vector<std::string> claimed;
    bool agreement = false;
    /// vd implies shellable implies cm over every field, wherever all three were decided.
    bool hierarchy = true;
    /// Some claimed property could not be decided within bounds.
    bool skipped = false;
    double seconds = 0;

    const Verdict* find(std::string_view property) const;
};

enum class Family { Cycle, Ladder, Grid3, CycleComplement, Chordal, Cograph, Cochordal };

std::string family_name(Family f);
/// "cycle", "ladder", "grid3", "cycle_complement", "chordal", "cograph", "cochordal".
Family parse_family(const std::string& name);

struct FamilyCheckConfig {
    Family family = Family::Cycle;
    int n_min = 3;
    int n_max = 8;
    int r_min = 2;
    int r_max = 6;
    std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2)};
    /// Random families: graphs drawn per (n, r).
    int samples = 10;
    std::uint64_t seed = 1;
    int workers = 1;
    Limits limits = harness_limits();
};

/// Evaluates every property of Sigma_r(G) and Con_r(G); `predicate` is recorded when given.
EquivalenceReport evaluate_graph(const Graph& g, int r, const std::vector<FieldSpec>& fields, const Limits& limits,
                                 std::optional<bool> predicate = std::nullopt);

/// One report per instance, in instance order regardless of worker count.
std::vector<EquivalenceReport> run_family_check(const FamilyCheckConfig& config);

struct SubCheck {
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0;
};

struct CertificateReport {
    std::vector<SubCheck> checks;
    bool ok = false;
};

/**
 * Replays the embedded certificates: gap-freeness of the eight-vertex example, its
 * elimination sequence, its 26-facet shelling order, the absence of shedding
 * vertices, and the unicyclic family for r = 3, 4. With `include_grid4` also
 * checks that Sigma_10(P_4 x P_4) is shellable and not vertex decomposable.
 */
CertificateReport replay_certificates(bool include_grid4 = false, const Limits& limits = harness_limits());

struct ScanConfig {
    int min_n = 1;
    int max_n = 6;
    int r = 3;
    std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2)};
    int workers = 1;
    Limits limits = harness_limits();
    /// When set, scan these graphs instead of enumerating.
    std::optional<std::vector<Graph>> graphs;
};

struct ScanFinding {
    Graph graph;
    std::string graph6;
    std::string field;
    bool cohen_macaulay = false;
    bool cochordal = false;
    /// The co-chordal side replays (elimination certificate) and the CM side re-derives.
    bool confirmed = false;
    std::string detail;
};

struct ScanReport {
    std::size_t graphs_scanned = 0;
    std::size_t cochordal_count = 0;
    std::vector<ScanFinding> findings;
    /// Graphs whose CM verdict differs between fields.
    std::vector<std::string> field_dependent;
    std::vector<std::string> notices;
};

/// Compares CM(Sigma_r(G)) per field with co-chordality of Con_r(G) over connected graphs up to isomorphism.
ScanReport cm_cochordal_scan(const ScanConfig& config);

struct CycleHomologyRow {
    int n = 0;
    int r = 0;
    std::vector<std::int64_t> expected;  // reduced Betti numbers, index dim + 1
    BettiProfile actual;                 // integer coefficients
    bool match = false;
};

/// Expected reduced Betti numbers of Ind_r(C_n) from the wedge-of-spheres formula (n >= r + 1).
std::vector<std::int64_t> cycle_independence_betti(int n, int r);

/// Rows for n_min <= n <= n_max and r_min <= r <= min(r_max, n - 1).
std::vector<CycleHomologyRow> cycle_homology_check(int n_min, int n_max, int r_min, int r_max, const Limits& limits = {});

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Exceptions propagate from the lowest index.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace cocon

#endif
