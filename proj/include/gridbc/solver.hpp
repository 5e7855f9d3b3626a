#pragma once

// Exact minimum biclique cover by branch-and-bound over maximal bicliques.

#include <gridbc/grid.hpp>

#include <chrono>
#include <optional>

namespace gridbc {

/// max(ceil(|uncovered & S| / 2), ceil(|uncovered| / 4)), S the ring-peel set.
[[nodiscard]] auto lower_bound_hint(const Grid & grid, const EdgeSet & uncovered) -> long long;

struct SolveOptions
{
    /// Start from the constructed cover, so the search only has to close the bound.
    bool seed_incumbent = true;
    bool use_special_bound = true;
    std::optional<std::chrono::duration<double>> budget;
};

enum class SolveStatus : std::uint8_t
{
    optimal,
    incomplete
};

struct SolveResult
{
    SolveStatus status = SolveStatus::incomplete;
    /// Optimum when status is optimal; otherwise ub.
    long long size = 0;
    long long lb = 0;
    long long ub = 0;
    /// Best cover found, of size ub.  Maximal elements only.
    Cover witness;
    long long nodes = 0;
    double seconds = 0;

    [[nodiscard]] auto optimal() const -> bool { return status == SolveStatus::optimal; }
};

/// Rejects the edgeless 1 x 1 grid.  Deterministic: a fixed branching order
/// gives the same witness on every run.
[[nodiscard]] auto solve_exact(const Grid & grid, const SolveOptions & options = {}) -> SolveResult;

} // namespace gridbc
