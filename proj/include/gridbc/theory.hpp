#pragma once

// Closed-form biclique covering number of grids and its lower-bound certificate.

#include <gridbc/grid.hpp>

#include <optional>

namespace gridbc {

/// q - 1 = k (p - 1) + 2 ell with 0 <= ell < k: k square p x p blocks and ell
/// width-3 gadgets laid side by side.
struct Decomposition
{
    int k = 1;
    int ell = 0;

    auto operator<=>(const Decomposition &) const = default;
};

/// True when d satisfies q - 1 = k (p - 1) + 2 ell with 0 <= ell < k.
[[nodiscard]] auto is_valid_decomposition(int p, int q, Decomposition d) -> bool;

/// Decomposition with the largest k, or nullopt.  Requires p even and p <= q
/// (std::invalid_argument otherwise).
[[nodiscard]] auto representable(int p, int q) -> std::optional<Decomposition>;

/// bc(G_{p,q}).  Arguments are reoriented so that p <= q.
[[nodiscard]] auto bc_value(int p, int q) -> long long;

/// Which formula branch bc_value takes for (p, q) after reorientation.
[[nodiscard]] auto drops_below_half(int p, int q) -> bool;

struct SpecialEdgeSet
{
    GridDims dims;
    EdgeSet edges;

    [[nodiscard]] auto size() const -> std::size_t { return edges.count(); }
};

/// Ring-peeling edge set: the outer cycle plus the set of the inner grid,
/// bottoming out at one or two rows with all horizontal edges.  Every
/// biclique of the grid meets it in at most two edges.  When p > q the set is
/// built on the transposed grid and mapped back.
[[nodiscard]] auto special_edge_set(int p, int q) -> SpecialEdgeSet;

/// ceil(|special_edge_set(p, q)| / 2).
[[nodiscard]] auto lower_bound(int p, int q) -> long long;

} // namespace gridbc
