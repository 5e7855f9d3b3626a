#include <gridbc/theory.hpp>

#include <algorithm>
#include <string>

namespace gridbc {

auto is_valid_decomposition(int p, int q, Decomposition d) -> bool
{
    return d.k >= 1 && d.ell >= 0 && d.ell < d.k &&
           static_cast<long long>(q) - 1 == static_cast<long long>(d.k) * (p - 1) + 2LL * d.ell;
}

auto representable(int p, int q) -> std::optional<Decomposition>
{
    if (p < 1 || p % 2 != 0)
        throw std::invalid_argument("representable needs an even p, got " + std::to_string(p));
    if (q < p)
        throw std::invalid_argument("representable needs p <= q");

    for (int k = (q - 1) / (p - 1); k >= 1; --k) {
        int rest = (q - 1) - k * (p - 1);
        if (rest % 2 != 0)
            continue;
        Decomposition d{k, rest / 2};
        if (d.ell < d.k)
            return d;
    }
    return std::nullopt;
}

auto drops_below_half(int p, int q) -> bool
{
    if (p > q)
        std::swap(p, q);
    return p % 2 == 0 && representable(p, q).has_value();
}

auto bc_value(int p, int q) -> long long
{
    if (p < 1 || q < 1)
        throw std::invalid_argument("grid dimensions must be positive");
    long long half = static_cast<long long>(p) * q / 2;
    return drops_below_half(p, q) ? half - 1 : half;
}

auto special_edge_set(int p, int q) -> SpecialEdgeSet
{
    if (p > q) {
        auto t = special_edge_set(q, p);
        return {{p, q}, apply(Symmetry::transpose, t.dims, t.edges)};
    }

    Grid grid({p, q});
    auto edges = grid.empty_set();
    // peel rings from the outside in; offset/rows/cols bound the current sub-grid
    int offset = 0, rows = p, cols = q;
    while (rows >= 3) {
        for (int c = 1; c < cols; ++c) {
            edges.set(grid.edge_index(Edge::make({offset + c, offset + 1}, {offset + c + 1, offset + 1})));
            edges.set(grid.edge_index(Edge::make({offset + c, offset + rows}, {offset + c + 1, offset + rows})));
        }
        for (int r = 1; r < rows; ++r) {
            edges.set(grid.edge_index(Edge::make({offset + 1, offset + r}, {offset + 1, offset + r + 1})));
            edges.set(grid.edge_index(Edge::make({offset + cols, offset + r}, {offset + cols, offset + r + 1})));
        }
        ++offset;
        rows -= 2;
        cols -= 2;
    }
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c < cols; ++c)
            edges.set(grid.edge_index(Edge::make({offset + c, offset + r}, {offset + c + 1, offset + r})));
    return {{p, q}, std::move(edges)};
}

auto lower_bound(int p, int q) -> long long
{
    auto s = static_cast<long long>(special_edge_set(p, q).size());
    return (s + 1) / 2;
}

} // namespace gridbc
