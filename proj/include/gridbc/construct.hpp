#pragma once

// Explicit covers whose sizes meet the closed form.

#include <gridbc/grid.hpp>
#include <gridbc/theory.hpp>

namespace gridbc {

/// Stars centred on one colour class, every neighbour a leaf.  The class is
/// the one of size floor(pq/2), or the one without (1,1) on a tie.  Corner
/// stars come out as K_{1,2}; use maximalize() for maximal elements.
/// Rejects the edgeless 1 x 1 grid.
[[nodiscard]] auto checkerboard_cover(int p, int q) -> Cover;

/// Which diagonal of G_{p,p} carries the 4-cycles.
enum class Diagonal : std::uint8_t
{
    main, ///< squares anchored at (i, i): from (1,1) up to (p,p)
    anti  ///< squares anchored at (p-i, i): the left-right mirror of main
};

/// Cover of G_{p,p}, p even, with p^2/2 - 1 elements: p - 1 squares along the
/// diagonal and full stars on the diagonal's colour class off the diagonal.
[[nodiscard]] auto square_diagonal_cover(int p, Diagonal orientation) -> Cover;

/// k square blocks laid left to right with alternating diagonals, the first
/// one `main`.  Neighbouring blocks share a column; the first d.ell junctions
/// instead get a width-3 gadget between the blocks.  Size pq/2 - 1.
[[nodiscard]] auto stitched_cover(int p, int q, Decomposition d) -> Cover;

/// A cover of size bc_value(p, q).  Rejects 1 x 1.
[[nodiscard]] auto optimal_cover(int p, int q) -> Cover;

/// True when optimal_cover(p, q) is a stitched cover rather than a checkerboard.
[[nodiscard]] auto optimal_uses_stitching(int p, int q) -> bool;

} // namespace gridbc
