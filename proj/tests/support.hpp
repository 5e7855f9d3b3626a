#pragma once

// Helpers shared by the unit and acceptance suites: independent brute-force
// oracles and random cover generators.

#include <gridbc/construct.hpp>
#include <gridbc/grid.hpp>
#include <gridbc/verify.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace support {

using namespace gridbc;

/// Edge bitmap built from scratch: horizontal edges row-major, then vertical.
inline auto brute_edge_index(GridDims d, Vertex u, Vertex v) -> std::size_t
{
    if (v < u)
        std::swap(u, v);
    auto p = static_cast<std::size_t>(d.p), q = static_cast<std::size_t>(d.q);
    auto c = static_cast<std::size_t>(u.col - 1), r = static_cast<std::size_t>(u.row - 1);
    if (u.row == v.row)
        return r * (q - 1) + c;
    return p * (q - 1) + r * q + c;
}

/// Every complete bipartite subgraph (A x B with A, B inside the two colour
/// classes, all pairs adjacent), reduced to the edge-maximal ones.  Only
/// feasible for tiny grids.
inline auto brute_maximal_edge_sets(GridDims d) -> std::set<std::vector<std::size_t>>
{
    std::vector<Vertex> cls[2];
    for (int c = 1; c <= d.q; ++c)
        for (int r = 1; r <= d.p; ++r)
            cls[(c + r) % 2].push_back({c, r});
    auto adj = [](Vertex a, Vertex b) { return std::abs(a.col - b.col) + std::abs(a.row - b.row) == 1; };

    std::vector<std::vector<std::size_t>> found;
    const auto na = cls[0].size(), nb = cls[1].size();
    for (std::size_t ma = 1; ma < (std::size_t{1} << na); ++ma)
        for (std::size_t mb = 1; mb < (std::size_t{1} << nb); ++mb) {
            std::vector<std::size_t> edges;
            bool ok = true;
            for (std::size_t i = 0; i < na && ok; ++i)
                if (ma >> i & 1)
                    for (std::size_t j = 0; j < nb && ok; ++j)
                        if (mb >> j & 1) {
                            if (! adj(cls[0][i], cls[1][j]))
                                ok = false;
                            else
                                edges.push_back(brute_edge_index(d, cls[0][i], cls[1][j]));
                        }
            if (ok) {
                std::ranges::sort(edges);
                found.push_back(edges);
            }
        }

    std::set<std::vector<std::size_t>> maximal;
    for (const auto & e : found) {
        bool contained = std::ranges::any_of(found, [&](const std::vector<std::size_t> & f) {
            return f.size() > e.size() && std::ranges::includes(f, e);
        });
        if (! contained)
            maximal.insert(e);
    }
    return maximal;
}

/// Smallest number of maximal bicliques covering `target`, by plain
/// enumeration of k-subsets for k = 0, 1, 2, ...  No bounds, no pruning.
inline auto exhaustive_minimum(const Grid & grid, const EdgeSet & target) -> int
{
    std::vector<EdgeSet> masks;
    for (const auto & b : enumerate_maximal_bicliques(grid))
        masks.push_back(edge_mask(grid, b));
    const int n = static_cast<int>(masks.size());

    for (int k = 0; k <= n; ++k) {
        std::vector<int> pick(static_cast<std::size_t>(k));
        bool found = false;
        auto rec = [&](auto & self, int depth, int from, const EdgeSet & covered) -> void {
            if (found)
                return;
            if (depth == k) {
                found = target.is_subset_of(covered);
                return;
            }
            for (int i = from; i <= n - (k - depth); ++i)
                self(self, depth + 1, i + 1, covered | masks[static_cast<std::size_t>(i)]);
        };
        rec(rec, 0, 0, grid.empty_set());
        if (found)
            return k;
    }
    return -1;
}

/// A valid cover of maximal elements: maximal bicliques in random order,
/// each kept if it covers something new, plus up to `extra` random ones.
inline auto random_maximal_cover(const Grid & grid, std::mt19937_64 & rng, int extra = 3) -> Cover
{
    auto all = enumerate_maximal_bicliques(grid);
    std::ranges::shuffle(all, rng);
    Cover cover(grid.dims());
    auto covered = grid.empty_set();
    for (const auto & b : all) {
        auto mask = edge_mask(grid, b);
        if (! mask.is_subset_of(covered)) {
            cover.insert(b);
            covered |= mask;
        }
    }
    std::uniform_int_distribution<int> how_many(0, extra);
    for (int i = how_many(rng); i > 0; --i)
        cover.insert(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
    return cover;
}

inline auto covers_grid(const Grid & grid, const Cover & c) -> bool
{
    auto covered = grid.empty_set();
    for (const auto & b : c)
        covered |= edge_mask(grid, b);
    return covered.all();
}

/// Starts from a maximalized construction and applies `moves` random moves:
/// add a maximal biclique (usually a boundary star), then maybe drop another
/// element whose removal keeps the cover valid.  Always valid, often with
/// overlapping boundary elements.  When a side is 2 or 3 nearly every element
/// touches the boundary and a redundant cover may have no normalized form of
/// the same size, so there the start is the minimum construction and every
/// addition is paired with a removal.
inline auto perturbed_cover(const Grid & grid, std::mt19937_64 & rng, int moves) -> Cover
{
    const int p = grid.rows(), q = grid.cols();
    const bool narrow = std::min(p, q) <= 3;
    Cover cover = ! narrow && std::bernoulli_distribution(0.5)(rng) ? maximalize(grid, checkerboard_cover(p, q))
                                                                     : maximalize(grid, optimal_cover(p, q));
    auto all = enumerate_maximal_bicliques(grid);
    std::vector<Biclique> boundary_stars;
    for (const auto & b : all)
        if (b.is_star() && is_boundary_element(grid, b))
            boundary_stars.push_back(b);

    for (int m = 0; m < moves; ++m) {
        const auto & pool = ! boundary_stars.empty() && std::bernoulli_distribution(0.7)(rng) ? boundary_stars : all;
        auto x = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        if (! cover.insert(x))
            continue;
        if (! narrow && std::bernoulli_distribution(0.5)(rng))
            continue;
        std::vector<Biclique> removable;
        for (const auto & y : cover) {
            if (y == x)
                continue;
            Cover without = cover;
            without.erase(y);
            if (covers_grid(grid, without))
                removable.push_back(y);
        }
        if (removable.empty())
            cover.erase(x);
        else
            cover.erase(removable[std::uniform_int_distribution<std::size_t>(0, removable.size() - 1)(rng)]);
    }
    return cover;
}

} // namespace support
