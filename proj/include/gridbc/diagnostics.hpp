#pragma once

// Boundary structure of covers: fences, links, staircases, pyramids and the
// waste identities that constrain minimum covers.

#include <gridbc/grid.hpp>
#include <gridbc/verify.hpp>

#include <map>
#include <vector>

namespace gridbc {

/// Edges covered by at least two elements.  Invalid elements are ignored.
[[nodiscard]] auto thick_edges(const Grid & grid, const Cover & cover) -> EdgeSet;

/// Connected boundary 4-cycles (squares sharing a vertex are connected).
struct Fence
{
    std::vector<Biclique> cycles;
    EdgeSet edges;
    /// Edges lying in two or more of this fence's squares.
    EdgeSet shared;

    [[nodiscard]] auto size() const -> int { return static_cast<int>(cycles.size()); }
};

enum class Side : std::uint8_t
{
    bottom,
    right,
    top,
    left
};

[[nodiscard]] auto side_name(Side s) -> const char *;

/// A corner-free run of outer edges outside every fence.
struct Link
{
    Side side = Side::top;
    /// Path order along the outer cycle walk.
    std::vector<Edge> edges;
    Vertex start;
    Vertex end;

    [[nodiscard]] auto length() const -> int { return static_cast<int>(edges.size()); }
};

struct BoundaryAnalysis
{
    GridDims dims;
    std::vector<Biclique> boundary_stars;
    std::vector<Biclique> boundary_cycles;
    EdgeSet H;
    std::vector<Fence> fences;
    std::vector<Link> links;
    /// Outer edges in no fence and no link: runs that touch a corner.
    std::vector<Edge> unlinked_out_edges;
    std::map<int, long long> b;
    long long beta = 0;
    int c = 0;
    int N = 0;

    [[nodiscard]] auto b_at(int i) const -> long long;
};

/// Requires p, q >= 2 and maximal, valid elements (std::invalid_argument).
/// Fences and links are ordered by their smallest outer-edge index.
[[nodiscard]] auto boundary_analysis(const Grid & grid, const Cover & cover) -> BoundaryAnalysis;

struct Staircase
{
    Link link;
    std::vector<Vertex> left_wall;
    std::vector<Vertex> right_wall;
    EdgeSet region;
    /// Number of lattice rows below the link that the region reaches.
    int depth = 0;
    /// The walls were cut off by the side opposite the link.
    bool truncated = false;

    [[nodiscard]] auto length() const -> int { return link.length(); }
};

/// The region under a link, built with the link's side turned to the top.
/// Walls go down twice and then alternate inward and down.
[[nodiscard]] auto staircase_of(const Grid & grid, const Link & link) -> Staircase;

struct Pyramid
{
    std::size_t staircase = 0;
    std::size_t tip = 0; ///< index into BoundaryAnalysis::fences
};

struct DoubleStaircase
{
    std::size_t first = 0;
    std::size_t second = 0;
    std::size_t thick_edge = 0;
    /// Half-lengths a, b satisfy a + b = p - 2 or a + b = p (p the short side).
    bool lengths_fit = false;
};

struct StaircaseClassification
{
    std::vector<Staircase> staircases;
    /// Thick edges inside each staircase, parallel to staircases.
    std::vector<EdgeSet> thick_in;
    std::vector<Pyramid> pyramids;
    std::vector<DoubleStaircase> doubles;
    std::vector<std::size_t> unclassified;
    int n = 0;
    int m = 0;

    [[nodiscard]] auto every_staircase_thick() const -> bool;
};

/// Greedy detector.  Pyramids first (length 2p - 4, single thick edge shared
/// by a size-2 fence, each tip used once), then pairs of staircases whose only
/// thick edge coincides.  Throws std::invalid_argument on an unnormalized cover.
[[nodiscard]] auto classify_staircases(const Grid & grid, const Cover & cover, const BoundaryAnalysis & analysis)
    -> StaircaseClassification;

/// Both sides of 2(beta + tau) = 2p + 2q - 4 - c - b_1 + sum_{3 <= i < N} (i - 2) b_i
/// and the bound w >= beta + tau.
struct WasteIdentity
{
    long long w = 0;
    long long tau = 0;
    long long beta = 0;
    long long lhs2 = 0;
    long long rhs2 = 0;
    long long b_N = 0;
    bool identity_holds = false;
    bool inequality_holds = false;
    /// beta = sum (i - 1) b_i.
    bool beta_matches_fences = false;
};

/// Requires a normalized cover of maximal elements covering every outer edge
/// (std::invalid_argument otherwise).
[[nodiscard]] auto waste_identity_check(const Grid & grid, const Cover & cover) -> WasteIdentity;

} // namespace gridbc
