#include "cocon/fixtures.hpp"

#include <stdexcept>

namespace cocon::fixtures {

namespace {

VertexSet one_based(std::initializer_list<int> labels)
{
    VertexSet out;
    for (int x : labels) out.insert(x - 1);
    return out;
}

Graph one_based_graph(int n, std::initializer_list<std::pair<int, int>> edges)
{
    std::vector<Edge> shifted;
    for (auto [u, v] : edges) shifted.emplace_back(u - 1, v - 1);
    return Graph::from_edge_list(n, shifted);
}

/// (x_i, y_j) of P_n x P_k, both 1-based.
Vertex cell(int i, int j, int k) { return (i - 1) * k + (j - 1); }

}  // namespace

Graph chordal_example()
{
    return one_based_graph(6, {{1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {5, 6}});
}

std::vector<VertexSet> chordal_example_support()
{
    return {one_based({2, 3}), one_based({2, 5}), one_based({3, 4}), one_based({3, 5}), one_based({5, 6})};
}

std::vector<VertexSet> chordal_example_facets()
{
    return {one_based({4, 5, 6}), one_based({3, 4, 6}), one_based({2, 5, 6}), one_based({2, 4, 6}), one_based({2, 3, 4})};
}

Graph gap_free_example()
{
    return one_based_graph(8, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 8}, {3, 6}, {3, 8}, {4, 7}, {5, 7}, {6, 7}, {7, 8}});
}

EliminationCertificate gap_free_elimination()
{
    return {3,
            {one_based({1, 2}), one_based({1, 3}), one_based({1, 4}), one_based({1, 5}), one_based({2, 6}),
             one_based({2, 8}), one_based({3, 6}), one_based({3, 8}), one_based({4, 6}), one_based({4, 7}),
             one_based({4, 8}), one_based({5, 6}), one_based({5, 7}), one_based({6, 7}), one_based({6, 8}),
             one_based({1, 7}), one_based({2, 7}), one_based({2, 3}), one_based({2, 4}), one_based({3, 4})}};
}

std::vector<VertexSet> gap_free_shelling()
{
    return {one_based({4, 5, 6, 7, 8}), one_based({3, 5, 6, 7, 8}), one_based({2, 5, 6, 7, 8}), one_based({3, 4, 6, 7, 8}),
            one_based({2, 4, 6, 7, 8}), one_based({2, 3, 6, 7, 8}), one_based({3, 4, 5, 7, 8}), one_based({2, 4, 5, 7, 8}),
            one_based({1, 4, 5, 7, 8}), one_based({2, 3, 5, 6, 8}), one_based({2, 3, 4, 6, 8}), one_based({1, 3, 4, 5, 8}),
            one_based({1, 2, 4, 5, 8}), one_based({1, 2, 3, 5, 8}), one_based({1, 2, 3, 6, 8}), one_based({1, 2, 3, 4, 8}),
            one_based({3, 4, 5, 6, 7}), one_based({2, 4, 5, 6, 7}), one_based({1, 3, 4, 5, 7}), one_based({1, 2, 4, 5, 7}),
            one_based({1, 2, 3, 5, 6}), one_based({1, 3, 4, 5, 6}), one_based({1, 4, 5, 6, 7}), one_based({1, 2, 4, 5, 6}),
            one_based({1, 2, 3, 4, 6}), one_based({1, 2, 3, 4, 5})};
}

SimplicialComplex projective_plane()
{
    return SimplicialComplex(VertexSet::range(6),
                             {one_based({1, 2, 3}), one_based({1, 2, 4}), one_based({1, 3, 5}), one_based({1, 4, 6}),
                              one_based({1, 5, 6}), one_based({2, 3, 6}), one_based({2, 4, 5}), one_based({2, 5, 6}),
                              one_based({3, 4, 5}), one_based({3, 4, 6})});
}

std::pair<VertexSet, VertexSet> ladder_gap(int n, int r)
{
    if (r < 2 || n < r + 1) throw std::invalid_argument("ladder_gap needs r >= 2 and n >= r + 1");
    const int s = r / 2;
    VertexSet e1, e2;
    for (int i = n - (s - 1); i <= n; ++i) {
        e1.insert(cell(i, 1, 2));
        e1.insert(cell(i, 2, 2));
    }
    for (int i = 1; i <= s; ++i) {
        e2.insert(cell(i, 1, 2));
        e2.insert(cell(i, 2, 2));
    }
    if (r % 2 == 1) {
        e1.insert(cell(n - s, 1, 2));
        e2.insert(cell(s + 1, 2, 2));
    }
    return {e1, e2};
}

std::vector<Vertex> ladder_order(int n)
{
    if (n < 2) throw std::invalid_argument("ladder_order needs n >= 2");
    const int middle = n % 2 == 0 ? n / 2 : n / 2 + 1;
    return {cell(middle, 1, 2), cell(middle, 2, 2)};
}

std::vector<Vertex> grid3_order(int n)
{
    if (n < 3) throw std::invalid_argument("grid3_order needs n >= 3");
    std::vector<Vertex> out;
    const int m = n / 2;
    if (n % 2 == 0) {
        // x_m, x_{m+1}, x_{m-1}, x_{m+2}, ..., x_1, x_n
        for (int t = 0; t < m; ++t) {
            out.push_back(cell(m - t, 2, 3));
            out.push_back(cell(m + 1 + t, 2, 3));
        }
    } else {
        // x_{m+1}, x_m, x_{m+2}, x_{m-1}, ..., x_1, x_n
        out.push_back(cell(m + 1, 2, 3));
        for (int t = 0; t < m; ++t) {
            out.push_back(cell(m - t, 2, 3));
            out.push_back(cell(m + 2 + t, 2, 3));
        }
    }
    return out;
}

}  // namespace cocon::fixtures
