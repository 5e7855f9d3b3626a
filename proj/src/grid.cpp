#include <gridbc/grid.hpp>

#include <algorithm>
#include <cstdlib>
#include <limits>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace gridbc {

auto Edge::make(Vertex u, Vertex v) -> Edge
{
    return u < v ? Edge{u, v} : Edge{v, u};
}

Grid::Grid(GridDims dims) :
    _dims(dims)
{
    if (dims.p < 1 || dims.q < 1)
        throw std::invalid_argument("grid dimensions must be positive, got " + std::to_string(dims.p) + "x" +
                                    std::to_string(dims.q));
    constexpr long long limit = std::numeric_limits<int>::max() / 4;
    if (static_cast<long long>(dims.p) * dims.q > limit)
        throw std::invalid_argument("grid too large");

    auto p = static_cast<size_t>(dims.p), q = static_cast<size_t>(dims.q);
    _num_horizontal = p * (q - 1);
    _num_edges = _num_horizontal + (p - 1) * q;
    _outer = EdgeSet(_num_edges);
    if (has_outer_cycle())
        for (const auto & e : outer_cycle(*this))
            _outer.set(edge_index(e));
}

auto Grid::num_vertices() const -> size_t
{
    return static_cast<size_t>(_dims.p) * static_cast<size_t>(_dims.q);
}

auto Grid::contains(Vertex v) const -> bool
{
    return v.col >= 1 && v.col <= _dims.q && v.row >= 1 && v.row <= _dims.p;
}

auto Grid::adjacent(Vertex u, Vertex v) const -> bool
{
    return contains(u) && contains(v) && std::abs(u.col - v.col) + std::abs(u.row - v.row) == 1;
}

auto Grid::find_edge(Vertex u, Vertex v) const -> optional<size_t>
{
    if (! adjacent(u, v))
        return std::nullopt;
    auto e = Edge::make(u, v);
    auto q = static_cast<size_t>(_dims.q);
    auto c = static_cast<size_t>(e.a.col - 1), r = static_cast<size_t>(e.a.row - 1);
    if (e.horizontal())
        return r * (q - 1) + c;
    return _num_horizontal + r * q + c;
}

auto Grid::edge_index(const Edge & e) const -> size_t
{
    auto idx = find_edge(e.a, e.b);
    if (! idx)
        throw std::invalid_argument("not an edge of the grid");
    return *idx;
}

auto Grid::edge_at(size_t index) const -> Edge
{
    if (index >= _num_edges)
        throw std::out_of_range("edge index out of range");
    if (index < _num_horizontal) {
        auto width = static_cast<size_t>(_dims.q - 1);
        Vertex a{static_cast<int>(index % width) + 1, static_cast<int>(index / width) + 1};
        return {a, {a.col + 1, a.row}};
    }
    index -= _num_horizontal;
    auto width = static_cast<size_t>(_dims.q);
    Vertex a{static_cast<int>(index % width) + 1, static_cast<int>(index / width) + 1};
    return {a, {a.col, a.row + 1}};
}

auto Grid::neighbors(Vertex v) const -> vector<Vertex>
{
    vector<Vertex> result;
    for (Vertex w : {Vertex{v.col - 1, v.row}, Vertex{v.col, v.row - 1}, Vertex{v.col, v.row + 1},
                     Vertex{v.col + 1, v.row}})
        if (contains(w))
            result.push_back(w);
    return result;
}

auto Grid::degree(Vertex v) const -> int
{
    return static_cast<int>(neighbors(v).size());
}

auto Grid::is_corner(Vertex v) const -> bool
{
    return (v.col == 1 || v.col == _dims.q) && (v.row == 1 || v.row == _dims.p);
}

auto Grid::on_boundary(Vertex v) const -> bool
{
    return contains(v) && (v.col == 1 || v.col == _dims.q || v.row == 1 || v.row == _dims.p);
}

auto Grid::corners() const -> std::array<Vertex, 4>
{
    return {Vertex{1, 1}, Vertex{1, _dims.p}, Vertex{_dims.q, 1}, Vertex{_dims.q, _dims.p}};
}

auto Grid::full_set() const -> EdgeSet
{
    EdgeSet all(_num_edges);
    all.set();
    return all;
}

auto Grid::vertices() const -> vector<Vertex>
{
    vector<Vertex> result;
    result.reserve(num_vertices());
    for (int c = 1; c <= _dims.q; ++c)
        for (int r = 1; r <= _dims.p; ++r)
            result.push_back({c, r});
    return result;
}

auto make_grid(int p, int q) -> Grid
{
    return Grid{GridDims{p, q}};
}

auto outer_cycle(const Grid & grid) -> vector<Edge>
{
    if (! grid.has_outer_cycle())
        throw NoOuterCycle{};
    const int p = grid.rows(), q = grid.cols();
    vector<Edge> walk;
    walk.reserve(static_cast<size_t>(2 * p + 2 * q - 4));
    for (int c = 1; c < q; ++c)
        walk.push_back(Edge::make({c, 1}, {c + 1, 1}));
    for (int r = 1; r < p; ++r)
        walk.push_back(Edge::make({q, r}, {q, r + 1}));
    for (int c = q; c > 1; --c)
        walk.push_back(Edge::make({c, p}, {c - 1, p}));
    for (int r = p; r > 1; --r)
        walk.push_back(Edge::make({1, r}, {1, r - 1}));
    return walk;
}

auto Biclique::star(Vertex center, vector<Vertex> leaves) -> Biclique
{
    if (leaves.empty())
        throw std::invalid_argument("star without leaves");
    std::ranges::sort(leaves);
    if (std::ranges::adjacent_find(leaves) != leaves.end())
        throw std::invalid_argument("star with a repeated leaf");
    Biclique b;
    b._kind = BicliqueKind::star;
    b._origin = center;
    b._leaves = std::move(leaves);
    return b;
}

auto Biclique::cycle(Vertex anchor) -> Biclique
{
    Biclique b;
    b._kind = BicliqueKind::cycle;
    b._origin = anchor;
    return b;
}

auto Biclique::center() const -> Vertex
{
    if (! is_star())
        throw std::logic_error("center() on a 4-cycle");
    return _origin;
}

auto Biclique::anchor() const -> Vertex
{
    if (! is_cycle())
        throw std::logic_error("anchor() on a star");
    return _origin;
}

auto square_vertices(Vertex anchor) -> std::array<Vertex, 4>
{
    return {anchor, Vertex{anchor.col + 1, anchor.row}, Vertex{anchor.col, anchor.row + 1},
            Vertex{anchor.col + 1, anchor.row + 1}};
}

auto biclique_edges(const Biclique & b) -> vector<Edge>
{
    vector<Edge> result;
    if (b.is_star()) {
        for (auto leaf : b.leaves())
            result.push_back(Edge::make(b.center(), leaf));
    }
    else {
        auto [a, right, up, diag] = square_vertices(b.anchor());
        result = {Edge::make(a, right), Edge::make(a, up), Edge::make(right, diag), Edge::make(up, diag)};
    }
    std::ranges::sort(result);
    return result;
}

auto validate(const Grid & grid, const Biclique & b) -> optional<string>
{
    if (b.is_cycle()) {
        auto a = b.anchor();
        if (a.col < 1 || a.row < 1 || a.col >= grid.cols() || a.row >= grid.rows())
            return "4-cycle anchor outside the grid";
        return std::nullopt;
    }
    if (! grid.contains(b.center()))
        return "star centre outside the grid";
    if (b.leaves().size() > 4)
        return "star with more than 4 leaves";
    for (auto leaf : b.leaves())
        if (! grid.adjacent(b.center(), leaf))
            return "star leaf not adjacent to its centre";
    return std::nullopt;
}

auto edge_mask(const Grid & grid, const Biclique & b) -> EdgeSet
{
    if (auto why = validate(grid, b))
        throw std::invalid_argument(*why);
    auto mask = grid.empty_set();
    for (const auto & e : biclique_edges(b))
        mask.set(grid.edge_index(e));
    return mask;
}

auto full_star(const Grid & grid, Vertex center) -> Biclique
{
    return Biclique::star(center, grid.neighbors(center));
}

namespace {
    auto is_path(const Grid & grid) -> bool
    {
        return grid.rows() == 1 || grid.cols() == 1;
    }

    auto covers_all_neighbors(const Grid & grid, const Biclique & b) -> bool
    {
        auto nbrs = grid.neighbors(b.center());
        return std::ranges::equal(nbrs, b.leaves());
    }
}

auto is_maximal(const Grid & grid, const Biclique & b) -> bool
{
    if (validate(grid, b))
        return false;
    if (b.is_cycle())
        return true;
    if (! covers_all_neighbors(grid, b))
        return false;
    if (is_path(grid))
        return b.leaves().size() == 2 || grid.num_vertices() == 2;
    return b.leaves().size() >= 3;
}

auto enumerate_maximal_bicliques(const Grid & grid) -> vector<Biclique>
{
    vector<Biclique> result;
    if (is_path(grid)) {
        if (grid.num_vertices() == 2)
            result.push_back(Biclique::star({1, 1}, grid.neighbors({1, 1})));
        else
            for (auto v : grid.vertices())
                if (grid.degree(v) == 2)
                    result.push_back(full_star(grid, v));
    }
    else {
        for (auto v : grid.vertices())
            if (grid.degree(v) >= 3)
                result.push_back(full_star(grid, v));
        for (int c = 1; c < grid.cols(); ++c)
            for (int r = 1; r < grid.rows(); ++r)
                result.push_back(Biclique::cycle({c, r}));
    }
    std::ranges::sort(result);
    return result;
}

auto maximal_superset(const Grid & grid, const Biclique & b) -> Biclique
{
    if (auto why = validate(grid, b))
        throw std::invalid_argument(*why);
    if (is_maximal(grid, b)) {
        // a single-edge path grid has two spellings of its only biclique
        if (is_path(grid) && grid.num_vertices() == 2)
            return enumerate_maximal_bicliques(grid).front();
        return b;
    }

    auto mine = edge_mask(grid, b);
    auto o = b.origin();
    for (int c = o.col - 1; c <= o.col; ++c)
        for (int r = o.row - 1; r <= o.row; ++r) {
            auto sq = Biclique::cycle({c, r});
            if (! validate(grid, sq) && mine.is_subset_of(edge_mask(grid, sq)))
                return sq;
        }

    vector<Vertex> centers{b.center()};
    if (b.leaves().size() == 1)
        centers.push_back(b.leaves().front());
    for (auto center : centers) {
        auto st = full_star(grid, center);
        if (is_maximal(grid, st) && mine.is_subset_of(edge_mask(grid, st)))
            return st;
    }
    throw std::logic_error("no maximal biclique contains the given one");
}

Cover::Cover(GridDims dims, vector<Biclique> elements) :
    _dims(dims),
    _elements(std::move(elements))
{
    std::ranges::sort(_elements);
    if (std::ranges::adjacent_find(_elements) != _elements.end())
        throw std::invalid_argument("cover contains a duplicate biclique");
}

auto Cover::contains(const Biclique & b) const -> bool
{
    return std::ranges::binary_search(_elements, b);
}

auto Cover::insert(Biclique b) -> bool
{
    auto it = std::ranges::lower_bound(_elements, b);
    if (it != _elements.end() && *it == b)
        return false;
    _elements.insert(it, std::move(b));
    return true;
}

auto Cover::erase(const Biclique & b) -> bool
{
    auto it = std::ranges::lower_bound(_elements, b);
    if (it == _elements.end() || *it != b)
        return false;
    _elements.erase(it);
    return true;
}

auto maximalize(const Grid & grid, const Cover & c) -> Cover
{
    Cover result(c.dims());
    for (const auto & b : c)
        result.insert(maximal_superset(grid, b));
    return result;
}

auto apply(Symmetry s, GridDims dims) -> GridDims
{
    switch (s) {
    case Symmetry::rotate90:
    case Symmetry::rotate270:
    case Symmetry::transpose:
    case Symmetry::antitranspose: return dims.transposed();
    default: return dims;
    }
}

auto apply(Symmetry s, GridDims dims, Vertex v) -> Vertex
{
    const int p = dims.p, q = dims.q;
    switch (s) {
    case Symmetry::identity: return v;
    case Symmetry::rotate90: return {p + 1 - v.row, v.col};
    case Symmetry::rotate180: return {q + 1 - v.col, p + 1 - v.row};
    case Symmetry::rotate270: return {v.row, q + 1 - v.col};
    case Symmetry::mirror_lr: return {q + 1 - v.col, v.row};
    case Symmetry::mirror_tb: return {v.col, p + 1 - v.row};
    case Symmetry::transpose: return {v.row, v.col};
    case Symmetry::antitranspose: return {p + 1 - v.row, q + 1 - v.col};
    }
    throw std::logic_error("unknown symmetry");
}

auto apply(Symmetry s, GridDims dims, const Edge & e) -> Edge
{
    return Edge::make(apply(s, dims, e.a), apply(s, dims, e.b));
}

auto apply(Symmetry s, GridDims dims, const Biclique & b) -> Biclique
{
    if (b.is_cycle()) {
        auto corners = square_vertices(b.anchor());
        Vertex low{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
        for (auto v : corners) {
            auto w = apply(s, dims, v);
            low.col = std::min(low.col, w.col);
            low.row = std::min(low.row, w.row);
        }
        return Biclique::cycle(low);
    }
    vector<Vertex> leaves;
    for (auto leaf : b.leaves())
        leaves.push_back(apply(s, dims, leaf));
    return Biclique::star(apply(s, dims, b.center()), std::move(leaves));
}

auto apply(Symmetry s, const Cover & c) -> Cover
{
    vector<Biclique> mapped;
    mapped.reserve(c.size());
    for (const auto & b : c)
        mapped.push_back(apply(s, c.dims(), b));
    return Cover(apply(s, c.dims()), std::move(mapped));
}

auto apply(Symmetry s, GridDims dims, const EdgeSet & edges) -> EdgeSet
{
    Grid from(dims), to(apply(s, dims));
    auto result = to.empty_set();
    for (auto i = edges.find_first(); i != EdgeSet::npos; i = edges.find_next(i))
        result.set(to.edge_index(apply(s, dims, from.edge_at(i))));
    return result;
}

} // namespace gridbc
