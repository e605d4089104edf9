#include "cocon/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace cocon {

namespace {

bool is_prime(int p)
{
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q) {
        if (p % q == 0) return false;
    }
    return true;
}

}  // namespace

FieldSpec FieldSpec::prime(int p)
{
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (p > 2147483647 / 2) throw std::invalid_argument("field characteristic too large");
    return {p};
}

FieldSpec FieldSpec::parse(const std::string& text)
{
    if (text == "Q") return rationals();
    if (text == "F2") return prime(2);
    if (text.rfind("Fp:", 0) == 0 && text.size() > 3) {
        std::size_t used = 0;
        int p = 0;
        try {
            p = std::stoi(text.substr(3), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == text.size() - 3) return prime(p);
    }
    throw std::invalid_argument("unknown field '" + text + "' (expected Q, F2 or Fp:p)");
}

std::string FieldSpec::name() const
{
    if (characteristic == 0) return "Q";
    if (characteristic == 2) return "F2";
    return "Fp:" + std::to_string(characteristic);
}

std::int64_t BettiProfile::at(int dim) const
{
    const int i = dim + 1;
    if (i < 0 || i >= static_cast<int>(betti.size())) return 0;
    return betti[i];
}

std::optional<int> BettiProfile::top_nonzero() const
{
    std::optional<int> top;
    for (int i = 0; i < static_cast<int>(betti.size()); ++i) {
        if (betti[i] != 0) top = i - 1;
    }
    for (const auto& [dim, orders] : torsion) {
        if (!orders.empty() && (!top || dim > *top)) top = dim;
    }
    return top;
}

bool BettiProfile::acyclic() const { return !top_nonzero().has_value(); }

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
    return out;
}

std::int64_t magnitude(std::int64_t a) { return a < 0 ? -a : a; }
mpz_class magnitude(const mpz_class& a) { return abs(a); }

std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
mpz_class gcd_of(const mpz_class& a, const mpz_class& b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

std::int64_t mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
std::int64_t sub(std::int64_t a, std::int64_t b) { return checked_sub(a, b); }
mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }

/// Fraction-free elimination; each new row is divided by its content to keep entries small.
template <class T>
std::size_t rational_rank(std::vector<std::vector<T>> a)
{
    if (a.empty()) return 0;
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (a[i][c] != 0 && (pivot == rows || magnitude(a[i][c]) < magnitude(a[pivot][c]))) pivot = i;
        }
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        const T p = a[rank][c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const T g = gcd_of(p, a[i][c]);
            const T fi = p / g;
            const T fr = a[i][c] / g;
            T content = 0;
            for (std::size_t j = c; j < cols; ++j) {
                a[i][j] = sub(mul(a[i][j], fi), mul(a[rank][j], fr));
                content = gcd_of(content, magnitude(a[i][j]));
            }
            if (content > 1) {
                for (std::size_t j = c; j < cols; ++j) a[i][j] /= content;
            }
        }
        ++rank;
    }
    return rank;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p)
{
    std::int64_t out = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) out = out * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return out;
}

std::size_t modular_rank(const Matrix& m, std::int64_t p)
{
    if (m.empty()) return 0;
    Matrix a = m;
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    for (auto& row : a) {
        for (auto& x : row) x = ((x % p) + p) % p;
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        const std::int64_t inv = mod_pow(a[rank][c], p - 2, p);
        for (std::size_t j = c; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::int64_t f = a[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t matrix_rank(const Matrix& m, FieldSpec field)
{
    if (field.characteristic != 0) return modular_rank(m, field.characteristic);
    try {
        return rational_rank(m);
    } catch (const Overflow&) {
        std::vector<std::vector<mpz_class>> big(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::int64_t x : m[i]) big[i].emplace_back(static_cast<long>(x));
        }
        return rational_rank(std::move(big));
    }
}

std::vector<std::int64_t> smith_invariant_factors(const Matrix& m)
{
    if (m.empty() || m.front().empty()) return {};
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(m[i][j]);
    }
    std::vector<mpz_class> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == rows) break;
            std::swap(a[t], a[pi]);
            for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const mpz_class q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const mpz_class q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // enforce divisibility: fold an offending row into the pivot row and retry
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad == rows) {
                diag.push_back(abs(a[t][t]));
                break;
            }
            for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
        }
        if (diag.size() <= t) break;
    }
    std::vector<std::int64_t> out;
    for (const mpz_class& d : diag) {
        if (!d.fits_slong_p()) throw std::overflow_error("invariant factor does not fit in 64 bits");
        out.push_back(d.get_si());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Matrix boundary_matrix(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper)
{
    std::unordered_map<VertexSet, std::size_t, VertexSetHash> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
    Matrix out(lower.size(), std::vector<std::int64_t>(upper.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
        int position = 0;
        for (Vertex v : upper[j]) {
            out[index.at(upper[j].without(v))][j] = position % 2 == 0 ? 1 : -1;
            ++position;
        }
    }
    return out;
}

namespace {

struct Chain {
    std::vector<std::vector<VertexSet>> layers;  // layers[k]: faces with k vertices
    std::vector<Matrix> boundaries;               // boundaries[k]: layer k -> layer k - 1 (k >= 1)
};

Chain chain_complex(const SimplicialComplex& d, const Limits& limits)
{
    Chain c;
    c.layers = faces_by_size(d, limits);
    c.boundaries.resize(c.layers.size());
    for (std::size_t k = 1; k < c.layers.size(); ++k) c.boundaries[k] = boundary_matrix(c.layers[k - 1], c.layers[k]);
    return c;
}

}  // namespace

BettiProfile reduced_betti(const SimplicialComplex& d, FieldSpec field, const Limits& limits)
{
    BettiProfile out;
    out.field = field.name();
    const Chain c = chain_complex(d, limits);
    const std::size_t top = c.layers.size();
    std::vector<std::size_t> rank(top + 1, 0);
    for (std::size_t k = 1; k < top; ++k) rank[k] = matrix_rank(c.boundaries[k], field);
    for (std::size_t k = 0; k < top; ++k) {
        out.betti.push_back(static_cast<std::int64_t>(c.layers[k].size() - rank[k] - rank[k + 1]));
    }
    return out;
}

BettiProfile integer_homology(const SimplicialComplex& d, const Limits& limits)
{
    BettiProfile out;
    out.field = "Z";
    const Chain c = chain_complex(d, limits);
    const std::size_t top = c.layers.size();
    std::vector<std::vector<std::int64_t>> factors(top + 1);
    for (std::size_t k = 1; k < top; ++k) factors[k] = smith_invariant_factors(c.boundaries[k]);
    for (std::size_t k = 0; k < top; ++k) {
        out.betti.push_back(static_cast<std::int64_t>(c.layers[k].size() - factors[k].size() - factors[k + 1].size()));
        std::vector<std::int64_t> torsion;
        for (std::int64_t f : factors[k + 1]) {
            if (f > 1) torsion.push_back(f);
        }
        if (!torsion.empty()) out.torsion[static_cast<int>(k) - 1] = torsion;
    }
    return out;
}

namespace {

/// Relabels the used vertices onto 0..m-1 so equal links on different vertex names share a key.
std::vector<VertexSet> compressed_facets(const SimplicialComplex& d)
{
    const VertexSet used = d.vertices();
    std::vector<Vertex> position(kMaxVertices, -1);
    int next = 0;
    for (Vertex v : used) position[v] = next++;
    std::vector<VertexSet> facets;
    for (VertexSet f : d.facets()) {
        VertexSet g;
        for (Vertex v : f) g.insert(position[v]);
        facets.push_back(g);
    }
    std::sort(facets.begin(), facets.end(), LexLess{});
    return facets;
}

}  // namespace

CohenMacaulayResult is_cohen_macaulay(const SimplicialComplex& d, FieldSpec field, const Limits& limits)
{
    CohenMacaulayResult out;
    if (d.is_void()) {
        out.cohen_macaulay = true;
        return out;
    }
    // value: the lowest failing dimension, or nullopt if the link passes
    std::unordered_map<std::vector<VertexSet>, std::optional<int>, SetListHash> seen;
    for (const auto& layer : faces_by_size(d, limits)) {
        for (VertexSet f : layer) {
            const SimplicialComplex l = link(d, f);
            std::vector<VertexSet> key = compressed_facets(l);
            auto it = seen.find(key);
            if (it == seen.end()) {
                const int m = l.vertices().size();
                const SimplicialComplex local(VertexSet::range(m), key);
                const BettiProfile b = reduced_betti(local, field, limits);
                std::optional<int> failure;
                for (int i = -1; i < local.dimension(); ++i) {
                    if (b.at(i) != 0) {
                        failure = i;
                        break;
                    }
                }
                it = seen.emplace(std::move(key), failure).first;
            }
            if (it->second) {
                out.failing_face = f;
                out.failing_dimension = it->second;
                out.distinct_links = seen.size();
                return out;
            }
        }
    }
    out.cohen_macaulay = true;
    out.distinct_links = seen.size();
    return out;
}

int leray_number(const SimplicialComplex& d, const Limits& limits)
{
    const VertexSet ground = d.ground();
    if (ground.size() > limits.max_leray_ground) throw BoundExceeded("Leray number over " + std::to_string(ground.size()) + " ground vertices", limits.max_leray_ground);
    if (d.is_void()) return 0;
    const std::vector<Vertex> members = ground.to_vector();
    std::unordered_map<std::vector<VertexSet>, int, SetListHash> seen;
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size()); ++mask) {
        VertexSet w;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if ((mask >> i) & 1U) w.insert(members[i]);
        }
        const SimplicialComplex sub = induced_subcomplex(d, w);
        std::vector<VertexSet> key = compressed_facets(sub);
        auto it = seen.find(key);
        if (it == seen.end()) {
            const SimplicialComplex local(VertexSet::range(sub.vertices().size()), key);
            const std::optional<int> top = integer_homology(local, limits).top_nonzero();
            it = seen.emplace(std::move(key), top ? *top + 1 : 0).first;
        }
        best = std::max(best, it->second);
    }
    return best;
}

bool dual_has_linear_resolution(const SimplicialComplex& d, FieldSpec field, const Limits& limits)
{
    return is_cohen_macaulay(alexander_dual(d), field, limits).cohen_macaulay;
}

}  // namespace cocon
