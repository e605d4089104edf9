#ifndef COCON_HOMOLOGY_HPP
#define COCON_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cocon/complex.hpp"
#include "cocon/limits.hpp"

namespace cocon {

/// Coefficient field: characteristic 0 (the rationals) or a prime p.
struct FieldSpec {
    int characteristic = 0;

    static FieldSpec rationals() { return {0}; }
    static FieldSpec prime(int p);
    /// Accepts "Q", "F2" and "Fp:p". Throws std::invalid_argument otherwise.
    static FieldSpec parse(const std::string& text);
    std::string name() const;

    bool operator==(const FieldSpec&) const = default;
};

/// Reduced homology of a complex, indexed by dimension -1 .. dim.
struct BettiProfile {
    std::string field;  // "Q", "F2", "Fp:p" or "Z"
    std::vector<std::int64_t> betti;  // betti[i + 1] is the rank in dimension i
    /// Integer coefficients only: torsion orders per dimension (those > 1).
    std::map<int, std::vector<std::int64_t>> torsion;

    std::int64_t at(int dim) const;
    /// Highest dimension with nonzero rank or torsion, or nullopt if acyclic.
    std::optional<int> top_nonzero() const;
    bool acyclic() const;
};

/// Rank of a dense integer matrix over the rationals or over F_p.
std::size_t matrix_rank(const std::vector<std::vector<std::int64_t>>& m, FieldSpec field);
/// Diagonal of the Smith normal form (the nonzero invariant factors, ascending).
std::vector<std::int64_t> smith_invariant_factors(const std::vector<std::vector<std::int64_t>>& m);

/**
 * Boundary matrix from faces of size k to faces of size k - 1 (rows index the
 * smaller faces). k = 0 gives an empty matrix; k = 1 is the augmentation.
 */
std::vector<std::vector<std::int64_t>> boundary_matrix(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper);

BettiProfile reduced_betti(const SimplicialComplex& d, FieldSpec field, const Limits& limits = {});
BettiProfile integer_homology(const SimplicialComplex& d, const Limits& limits = {});

struct CohenMacaulayResult {
    bool cohen_macaulay = false;
    /// On failure: a face whose link has homology below the link's dimension.
    std::optional<VertexSet> failing_face;
    std::optional<int> failing_dimension;
    std::size_t distinct_links = 0;
};

/// Reisner's criterion over every face, one homology computation per distinct link.
CohenMacaulayResult is_cohen_macaulay(const SimplicialComplex& d, FieldSpec field, const Limits& limits = {});

/// Least d such that every induced subcomplex has zero integral reduced homology in dimensions >= d.
int leray_number(const SimplicialComplex& d, const Limits& limits = {});

/**
 * Whether the Stanley-Reisner ideal of `d` has a linear resolution over the field,
 * decided as Cohen-Macaulayness of the Alexander dual (Eagon-Reiner).
 */
bool dual_has_linear_resolution(const SimplicialComplex& d, FieldSpec field, const Limits& limits = {});

}  // namespace cocon

#endif
