#pragma once

// Grid graphs G_{p,q}, their edges and bicliques, and covers.
//
// Coordinates are 1-based (col, row): a p x q grid has rows 1..p and columns
// 1..q, with row 1 drawn at the bottom.  Edges carry a canonical numbering:
// horizontal edges row-major first, then vertical edges row-major.  That
// numbering is part of the JSON cover format and of every EdgeSet bitmap.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace gridbc {

/// p rows by q columns.  Stored as given; nothing here reorients to p <= q.
struct GridDims
{
    int p = 1;
    int q = 1;

    [[nodiscard]] auto transposed() const -> GridDims { return {q, p}; }

    auto operator<=>(const GridDims &) const = default;
};

struct Vertex
{
    int col = 1;
    int row = 1;

    auto operator<=>(const Vertex &) const = default;
};

/// Bipartition class: 0 or 1.
[[nodiscard]] inline auto color(Vertex v) -> int { return (v.col + v.row) % 2; }

/// Unordered pair of adjacent vertices, stored smaller endpoint first.
struct Edge
{
    Vertex a;
    Vertex b;

    /// Orders the endpoints.  Does not check adjacency.
    [[nodiscard]] static auto make(Vertex u, Vertex v) -> Edge;

    [[nodiscard]] auto horizontal() const -> bool { return a.row == b.row; }

    auto operator<=>(const Edge &) const = default;
};

/// One bit per edge, indexed by the canonical edge numbering of the owning grid.
using EdgeSet = boost::dynamic_bitset<std::uint64_t>;

class NoOuterCycle : public std::domain_error
{
public:
    NoOuterCycle() : std::domain_error("no outer cycle") {}
};

class Grid
{
public:
    /// Throws std::invalid_argument unless p >= 1 and q >= 1.
    explicit Grid(GridDims dims);

    [[nodiscard]] auto dims() const -> GridDims { return _dims; }
    [[nodiscard]] auto rows() const -> int { return _dims.p; }
    [[nodiscard]] auto cols() const -> int { return _dims.q; }

    [[nodiscard]] auto num_vertices() const -> std::size_t;
    [[nodiscard]] auto num_edges() const -> std::size_t { return _num_edges; }

    [[nodiscard]] auto contains(Vertex v) const -> bool;
    [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool;

    /// Canonical index of the edge uv, or nullopt when uv is not an edge.
    [[nodiscard]] auto find_edge(Vertex u, Vertex v) const -> std::optional<std::size_t>;
    /// Throws std::invalid_argument when e is not an edge of this grid.
    [[nodiscard]] auto edge_index(const Edge & e) const -> std::size_t;
    [[nodiscard]] auto edge_at(std::size_t index) const -> Edge;

    /// Neighbours in canonical (col, row) order.
    [[nodiscard]] auto neighbors(Vertex v) const -> std::vector<Vertex>;
    [[nodiscard]] auto degree(Vertex v) const -> int;

    [[nodiscard]] auto is_corner(Vertex v) const -> bool;
    [[nodiscard]] auto on_boundary(Vertex v) const -> bool;
    /// (1,1), (1,p), (q,1), (q,p); may repeat for degenerate grids.
    [[nodiscard]] auto corners() const -> std::array<Vertex, 4>;

    [[nodiscard]] auto has_outer_cycle() const -> bool { return _dims.p >= 2 && _dims.q >= 2; }
    /// Edges of the outer cycle as a bitmap; empty when there is no outer cycle.
    [[nodiscard]] auto outer_edges() const -> const EdgeSet & { return _outer; }

    [[nodiscard]] auto empty_set() const -> EdgeSet { return EdgeSet(_num_edges); }
    [[nodiscard]] auto full_set() const -> EdgeSet;

    [[nodiscard]] auto vertices() const -> std::vector<Vertex>;

private:
    GridDims _dims;
    std::size_t _num_horizontal = 0;
    std::size_t _num_edges = 0;
    EdgeSet _outer;
};

[[nodiscard]] auto make_grid(int p, int q) -> Grid;

/// The outer cycle as a closed edge walk starting at (1,1): along the bottom,
/// up the right side, back along the top and down the left side.  Throws
/// NoOuterCycle when p = 1 or q = 1.
[[nodiscard]] auto outer_cycle(const Grid & grid) -> std::vector<Edge>;

enum class BicliqueKind : std::uint8_t
{
    star,
    cycle
};

/// A complete bipartite subgraph of a grid: a star K_{1,k} or the unit
/// 4-cycle K_{2,2} whose lower-left vertex is the anchor.
class Biclique
{
public:
    /// Leaves are sorted.  Throws std::invalid_argument on an empty or repeated leaf list.
    [[nodiscard]] static auto star(Vertex center, std::vector<Vertex> leaves) -> Biclique;
    [[nodiscard]] static auto cycle(Vertex anchor) -> Biclique;

    [[nodiscard]] auto kind() const -> BicliqueKind { return _kind; }
    [[nodiscard]] auto is_star() const -> bool { return _kind == BicliqueKind::star; }
    [[nodiscard]] auto is_cycle() const -> bool { return _kind == BicliqueKind::cycle; }

    /// Star centre, or 4-cycle anchor.
    [[nodiscard]] auto origin() const -> Vertex { return _origin; }
    [[nodiscard]] auto center() const -> Vertex;
    [[nodiscard]] auto anchor() const -> Vertex;
    [[nodiscard]] auto leaves() const -> std::span<const Vertex> { return _leaves; }

    /// Stars sort before 4-cycles, then by origin, then by leaves.
    auto operator<=>(const Biclique &) const = default;

private:
    BicliqueKind _kind = BicliqueKind::star;
    Vertex _origin;
    std::vector<Vertex> _leaves;
};

/// The four corners of a unit square in (anchor, right, up, up-right) order.
[[nodiscard]] auto square_vertices(Vertex anchor) -> std::array<Vertex, 4>;

/// Edges of b, independent of any grid.  Stars: one per leaf.  4-cycles: 4.
[[nodiscard]] auto biclique_edges(const Biclique & b) -> std::vector<Edge>;

/// Reason b is not a biclique of the grid, or nullopt when it is.
[[nodiscard]] auto validate(const Grid & grid, const Biclique & b) -> std::optional<std::string>;

/// Edge bitmap of a valid biclique.  Throws std::invalid_argument otherwise.
[[nodiscard]] auto edge_mask(const Grid & grid, const Biclique & b) -> EdgeSet;

/// Star at v with every neighbour as a leaf.
[[nodiscard]] auto full_star(const Grid & grid, Vertex center) -> Biclique;

/// Edge-maximal among bicliques of the grid.
[[nodiscard]] auto is_maximal(const Grid & grid, const Biclique & b) -> bool;

/// Every edge-maximal biclique, once each, in canonical order.
[[nodiscard]] auto enumerate_maximal_bicliques(const Grid & grid) -> std::vector<Biclique>;

/// Maximal biclique containing b.  A 4-cycle is preferred over a star, and
/// among 4-cycles the smallest anchor wins.
[[nodiscard]] auto maximal_superset(const Grid & grid, const Biclique & b) -> Biclique;

/// Ordered set of bicliques claimed to cover a grid.
class Cover
{
public:
    Cover() = default;
    explicit Cover(GridDims dims) : _dims(dims) {}
    /// Sorts; throws std::invalid_argument on duplicates.
    Cover(GridDims dims, std::vector<Biclique> elements);

    [[nodiscard]] auto dims() const -> GridDims { return _dims; }
    [[nodiscard]] auto size() const -> std::size_t { return _elements.size(); }
    [[nodiscard]] auto empty() const -> bool { return _elements.empty(); }
    [[nodiscard]] auto elements() const -> std::span<const Biclique> { return _elements; }
    [[nodiscard]] auto begin() const { return _elements.begin(); }
    [[nodiscard]] auto end() const { return _elements.end(); }

    [[nodiscard]] auto contains(const Biclique & b) const -> bool;
    /// False when b was already present.
    auto insert(Biclique b) -> bool;
    auto erase(const Biclique & b) -> bool;

    auto operator==(const Cover &) const -> bool = default;

private:
    GridDims _dims;
    std::vector<Biclique> _elements;
};

/// Replaces every element by its maximal superset and merges duplicates.
/// Throws std::invalid_argument if an element is not a biclique of the grid.
[[nodiscard]] auto maximalize(const Grid & grid, const Cover & c) -> Cover;

/// The eight symmetries of the rectangle.  Quarter turns and the two
/// diagonal reflections swap p and q.
enum class Symmetry : std::uint8_t
{
    identity,
    rotate90,   ///< counter-clockwise
    rotate180,
    rotate270,
    mirror_lr,  ///< col -> q+1-col
    mirror_tb,  ///< row -> p+1-row
    transpose,  ///< (col,row) -> (row,col)
    antitranspose
};

inline constexpr std::array<Symmetry, 8> all_symmetries{
    Symmetry::identity, Symmetry::rotate90, Symmetry::rotate180, Symmetry::rotate270,
    Symmetry::mirror_lr, Symmetry::mirror_tb, Symmetry::transpose, Symmetry::antitranspose};

[[nodiscard]] auto apply(Symmetry s, GridDims dims) -> GridDims;
[[nodiscard]] auto apply(Symmetry s, GridDims dims, Vertex v) -> Vertex;
[[nodiscard]] auto apply(Symmetry s, GridDims dims, const Edge & e) -> Edge;
[[nodiscard]] auto apply(Symmetry s, GridDims dims, const Biclique & b) -> Biclique;
[[nodiscard]] auto apply(Symmetry s, const Cover & c) -> Cover;
/// Maps a bitmap on the grid of size dims to the transformed grid.
[[nodiscard]] auto apply(Symmetry s, GridDims dims, const EdgeSet & edges) -> EdgeSet;

} // namespace gridbc
