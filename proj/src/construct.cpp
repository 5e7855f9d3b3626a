#include <gridbc/construct.hpp>

#include <string>

namespace gridbc {

namespace {
    auto require_edges(int p, int q) -> void
    {
        if (p < 1 || q < 1)
            throw std::invalid_argument("grid dimensions must be positive");
        if (static_cast<long long>(p) * q < 2)
            throw std::invalid_argument("the 1x1 grid has no edges to cover");
    }

    auto require_even(int p) -> void
    {
        if (p < 2 || p % 2 != 0)
            throw std::invalid_argument("expected an even p >= 2, got " + std::to_string(p));
    }

    auto covers_everything(const Grid & grid, const Cover & cover) -> bool
    {
        auto covered = grid.empty_set();
        for (const auto & b : cover)
            covered |= edge_mask(grid, b);
        return covered.all();
    }

    auto on_diagonal(Vertex v, int p, Diagonal orientation) -> bool
    {
        return orientation == Diagonal::main ? v.col == v.row : v.col + v.row == p + 1;
    }
}

auto checkerboard_cover(int p, int q) -> Cover
{
    require_edges(p, q);
    Grid grid({p, q});
    Cover cover(grid.dims());
    for (auto v : grid.vertices())
        if (color(v) == 1)
            cover.insert(full_star(grid, v));
    return cover;
}

auto square_diagonal_cover(int p, Diagonal orientation) -> Cover
{
    require_even(p);
    Grid grid({p, p});
    // every vertex of the diagonal has the same colour as (1,1) for main and as (p,1) for anti
    const int star_color = orientation == Diagonal::main ? 0 : 1;

    Cover cover(grid.dims());
    for (int i = 1; i < p; ++i)
        cover.insert(Biclique::cycle(orientation == Diagonal::main ? Vertex{i, i} : Vertex{p - i, i}));
    for (auto v : grid.vertices())
        if (color(v) == star_color && ! on_diagonal(v, p, orientation))
            cover.insert(full_star(grid, v));
    return cover;
}

auto stitched_cover(int p, int q, Decomposition d) -> Cover
{
    require_even(p);
    if (! is_valid_decomposition(p, q, d))
        throw std::invalid_argument("invalid decomposition (k=" + std::to_string(d.k) + ", ell=" +
                                    std::to_string(d.ell) + ") for " + std::to_string(p) + "x" + std::to_string(q));

    Grid grid({p, q});
    Cover cover(grid.dims());
    auto place = [&](const Biclique & b, int shift) {
        auto o = b.origin();
        Vertex moved{o.col + shift, o.row};
        // a star on a block's side column becomes a full star once the neighbour block exists
        cover.insert(b.is_cycle() ? Biclique::cycle(moved) : full_star(grid, moved));
    };

    auto orientation = Diagonal::main;
    int start = 1;
    for (int block = 0; block < d.k; ++block) {
        for (const auto & b : square_diagonal_cover(p, orientation))
            place(b, start - 1);
        if (block + 1 == d.k)
            break;

        if (block < d.ell) {
            // the diagonal of this block ends on the top row (main) or the bottom row (anti)
            const int meet_row = orientation == Diagonal::main ? p : 1;
            const int mid = start + p;
            for (int r = 1; r <= p; ++r)
                if (color({mid, r}) == 0 || r == meet_row)
                    cover.insert(full_star(grid, {mid, r}));
            start += p + 1;
        }
        else
            start += p - 1;
        orientation = orientation == Diagonal::main ? Diagonal::anti : Diagonal::main;
    }

    const long long half = p / 2;
    const long long expected = d.k * (half * p - 1) + d.ell * (half + 1) - (d.k - d.ell - 1) * (half - 1);
    if (static_cast<long long>(cover.size()) != expected || expected != static_cast<long long>(p) * q / 2 - 1)
        throw std::logic_error("stitched cover has size " + std::to_string(cover.size()) + ", expected " +
                               std::to_string(expected));
    return cover;
}

auto optimal_uses_stitching(int p, int q) -> bool
{
    return drops_below_half(p, q);
}

auto optimal_cover(int p, int q) -> Cover
{
    require_edges(p, q);
    if (p > q)
        return apply(Symmetry::transpose, optimal_cover(q, p));

    Cover cover = [&] {
        if (p % 2 == 0)
            if (auto d = representable(p, q))
                return stitched_cover(p, q, *d);
        return checkerboard_cover(p, q);
    }();

    Grid grid({p, q});
    if (! covers_everything(grid, cover) || static_cast<long long>(cover.size()) != bc_value(p, q))
        throw std::logic_error("optimal cover failed its self-check");
    return cover;
}

} // namespace gridbc
