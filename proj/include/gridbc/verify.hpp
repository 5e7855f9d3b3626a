#pragma once

// Cover validation, multiplicity accounting and boundary normalization.

#include <gridbc/grid.hpp>

#include <map>
#include <string>
#include <vector>

namespace gridbc {

struct InvalidElement
{
    std::size_t index = 0;
    Biclique element;
    std::string reason;
};

/// What verify_cover measured.  t_i is the number of edges covered exactly i
/// times; tau counts K_{1,3} elements; waste is 4|C| - |E|.
struct CoverReport
{
    bool valid = false;
    bool dims_match = true;
    std::size_t size = 0;
    std::size_t num_edges = 0;
    std::vector<Edge> uncovered;
    std::vector<InvalidElement> invalid_elements;
    std::map<int, long long> multiplicities;
    std::vector<int> edge_multiplicity;
    long long tau = 0;
    long long waste = 0;

    [[nodiscard]] auto t(int i) const -> long long;
    [[nodiscard]] auto max_multiplicity() const -> int;
    /// tau + sum_i (i - 1) t_i.  Equals waste for valid covers of maximal elements.
    [[nodiscard]] auto waste_by_multiplicity() const -> long long;
};

/// Never throws for a malformed cover: problems end up in the report.
[[nodiscard]] auto verify_cover(const Grid & grid, const Cover & cover) -> CoverReport;

/// Element contains at least one edge of the outer cycle.
[[nodiscard]] auto is_boundary_element(const Grid & grid, const Biclique & b) -> bool;

/// (i) boundary stars are pairwise edge-disjoint and (ii) no edge lies in both
/// a boundary 4-cycle and a boundary star.  Requires p, q >= 2 and maximal
/// elements; throws std::invalid_argument otherwise.
[[nodiscard]] auto is_normalized(const Grid & grid, const Cover & cover) -> bool;

struct NormalizeResult
{
    Cover cover;
    int steps = 0;
    int star_pair_rewrites = 0;  ///< two boundary stars sharing an edge
    int cycle_star_rewrites = 0; ///< boundary 4-cycle and boundary star sharing an edge
    int initial_stars = 0;
    /// Rewrites whose output was already in the cover, and how many of those
    /// slots were refilled with a harmless maximal biclique.
    int merged = 0;
    int padded = 0;
};

/// Rewrites boundary conflicts until is_normalized holds.  Each rewrite
/// removes at least one star and covers a superset of the edges.  Scans edges
/// in canonical order and applies the first applicable rule each time.
[[nodiscard]] auto normalize(const Grid & grid, const Cover & cover) -> NormalizeResult;

[[nodiscard]] auto normalize_cover(const Grid & grid, const Cover & cover) -> Cover;

} // namespace gridbc
