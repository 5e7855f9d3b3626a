#include <gridbc/verify.hpp>

#include <algorithm>

using std::size_t;
using std::vector;

namespace gridbc {

auto CoverReport::t(int i) const -> long long
{
    auto it = multiplicities.find(i);
    return it == multiplicities.end() ? 0 : it->second;
}

auto CoverReport::max_multiplicity() const -> int
{
    return multiplicities.empty() ? 0 : multiplicities.rbegin()->first;
}

auto CoverReport::waste_by_multiplicity() const -> long long
{
    long long w = tau;
    for (auto [i, count] : multiplicities)
        w += (i - 1) * count;
    return w;
}

auto verify_cover(const Grid & grid, const Cover & cover) -> CoverReport
{
    CoverReport report;
    report.dims_match = cover.dims() == grid.dims();
    report.size = cover.size();
    report.num_edges = grid.num_edges();
    report.edge_multiplicity.assign(grid.num_edges(), 0);

    size_t index = 0;
    for (const auto & b : cover) {
        if (auto why = validate(grid, b))
            report.invalid_elements.push_back({index, b, *why});
        else {
            for (const auto & e : biclique_edges(b))
                ++report.edge_multiplicity[grid.edge_index(e)];
            if (b.is_star() && b.leaves().size() == 3)
                ++report.tau;
        }
        ++index;
    }

    for (size_t i = 0; i < grid.num_edges(); ++i) {
        int m = report.edge_multiplicity[i];
        if (m == 0)
            report.uncovered.push_back(grid.edge_at(i));
        else
            ++report.multiplicities[m];
    }

    report.waste = 4 * static_cast<long long>(cover.size()) - static_cast<long long>(grid.num_edges());
    report.valid = report.dims_match && report.uncovered.empty() && report.invalid_elements.empty();
    return report;
}

auto is_boundary_element(const Grid & grid, const Biclique & b) -> bool
{
    if (! grid.has_outer_cycle())
        return false;
    return edge_mask(grid, b).intersects(grid.outer_edges());
}

namespace {
    auto require_normalizable(const Grid & grid, const Cover & cover) -> void
    {
        if (! grid.has_outer_cycle())
            throw std::invalid_argument("normalization needs p, q >= 2");
        for (const auto & b : cover)
            if (! is_maximal(grid, b))
                throw std::invalid_argument("normalization needs maximal elements; run maximalize first");
    }

    /// Boundary stars and boundary 4-cycles containing each edge.
    struct BoundaryIncidence
    {
        vector<vector<size_t>> stars, cycles;
    };

    auto boundary_incidence(const Grid & grid, const vector<Biclique> & elements) -> BoundaryIncidence
    {
        BoundaryIncidence inc{vector<vector<size_t>>(grid.num_edges()), vector<vector<size_t>>(grid.num_edges())};
        for (size_t i = 0; i < elements.size(); ++i) {
            auto mask = edge_mask(grid, elements[i]);
            if (! mask.intersects(grid.outer_edges()))
                continue;
            auto & target = elements[i].is_star() ? inc.stars : inc.cycles;
            for (auto e = mask.find_first(); e != EdgeSet::npos; e = mask.find_next(e))
                target[e].push_back(i);
        }
        return inc;
    }

    auto inward(const Grid & grid, Vertex v) -> Vertex
    {
        if (v.row == 1)
            return {0, 1};
        if (v.row == grid.rows())
            return {0, -1};
        if (v.col == 1)
            return {1, 0};
        if (v.col == grid.cols())
            return {-1, 0};
        throw std::logic_error("inward() of an interior vertex");
    }

    auto square_through(Vertex a, Vertex b, Vertex c) -> Biclique
    {
        return Biclique::cycle({std::min({a.col, b.col, c.col}), std::min({a.row, b.row, c.row})});
    }

    auto squares_containing(const Grid & grid, const Edge & e) -> vector<Biclique>
    {
        vector<Biclique> result;
        vector<Vertex> anchors = e.horizontal() ? vector<Vertex>{{e.a.col, e.a.row - 1}, e.a}
                                                : vector<Vertex>{{e.a.col - 1, e.a.row}, e.a};
        for (auto a : anchors) {
            auto sq = Biclique::cycle(a);
            if (! validate(grid, sq))
                result.push_back(sq);
        }
        return result;
    }

    auto covered_edges(const Grid & grid, const Cover & cover) -> EdgeSet
    {
        auto covered = grid.empty_set();
        for (const auto & b : cover)
            covered |= edge_mask(grid, b);
        return covered;
    }

    auto count_stars(const Cover & cover) -> int
    {
        return static_cast<int>(std::ranges::count_if(cover, [](const Biclique & b) { return b.is_star(); }));
    }

    /// Adding b keeps properties (i) and (ii).
    auto harmless(const Grid & grid, const Cover & cover, const Biclique & b) -> bool
    {
        if (! is_boundary_element(grid, b))
            return true;
        auto mask = edge_mask(grid, b);
        for (const auto & other : cover) {
            if (! is_boundary_element(grid, other) || (b.is_cycle() && other.is_cycle()))
                continue;
            if (mask.intersects(edge_mask(grid, other)))
                return false;
        }
        return true;
    }

    /// Adds `missing` harmless elements, backtracking over the candidates.
    auto pad(const Grid & grid, Cover & cover, const vector<Biclique> & candidates, size_t from, int missing) -> bool
    {
        if (missing == 0)
            return true;
        for (size_t i = from; i < candidates.size(); ++i) {
            const auto & b = candidates[i];
            if (cover.contains(b) || ! harmless(grid, cover, b))
                continue;
            cover.insert(b);
            if (pad(grid, cover, candidates, i + 1, missing - 1))
                return true;
            cover.erase(b);
        }
        return false;
    }
}

auto is_normalized(const Grid & grid, const Cover & cover) -> bool
{
    require_normalizable(grid, cover);
    vector<Biclique> elements(cover.begin(), cover.end());
    auto inc = boundary_incidence(grid, elements);
    for (size_t e = 0; e < grid.num_edges(); ++e) {
        if (inc.stars[e].size() >= 2)
            return false;
        if (! inc.stars[e].empty() && ! inc.cycles[e].empty())
            return false;
    }
    return true;
}

auto normalize(const Grid & grid, const Cover & input) -> NormalizeResult
{
    require_normalizable(grid, input);

    NormalizeResult result;
    result.cover = input;
    result.initial_stars = count_stars(input);
    auto & cover = result.cover;

    auto replace = [&](const Biclique & old, const Biclique & fresh) {
        cover.erase(old);
        if (! cover.insert(fresh))
            ++result.merged;
    };

    while (true) {
        vector<Biclique> elements(cover.begin(), cover.end());
        auto inc = boundary_incidence(grid, elements);
        auto before = covered_edges(grid, cover);

        bool rewrote = false;
        for (size_t e = 0; e < grid.num_edges() && ! rewrote; ++e) {
            const auto & stars = inc.stars[e];
            const auto & cycles = inc.cycles[e];
            if (stars.size() >= 2) {
                // both centres are the endpoints of e; keep the smaller one
                const auto & keep = elements[stars[0]];
                const auto & drop = elements[stars[1]];
                Vertex u = keep.center(), v = drop.center();
                if (u > v) {
                    std::swap(u, v);
                }
                const auto & moved = elements[stars[0]].center() == v ? elements[stars[0]] : elements[stars[1]];
                if (grid.outer_edges().test(e)) {
                    Vertex along{v.col - u.col, v.row - u.row};
                    Vertex in = inward(grid, v);
                    replace(moved, square_through(v, {v.col + along.col, v.row + along.row},
                                                  {v.col + in.col, v.row + in.row}));
                }
                else {
                    // a rung of a width-2 grid: no square holds both free edges of either star
                    auto squares = squares_containing(grid, grid.edge_at(e));
                    cover.erase(elements[stars[0]]);
                    cover.erase(elements[stars[1]]);
                    for (const auto & sq : squares)
                        if (! cover.insert(sq))
                            ++result.merged;
                    if (squares.size() < 2)
                        ++result.merged;
                }
                ++result.star_pair_rewrites;
                rewrote = true;
            }
            else if (! stars.empty() && ! cycles.empty()) {
                const auto & star = elements[stars[0]];
                const auto & shared = elements[cycles[0]];
                Vertex v = star.center();
                Vertex in = inward(grid, v);
                Vertex along{in.row != 0 ? 1 : 0, in.col != 0 ? 1 : 0};
                Biclique other = square_through(v, {v.col + along.col, v.row + along.row}, {v.col + in.col, v.row + in.row});
                if (other == shared)
                    other = square_through(v, {v.col - along.col, v.row - along.row}, {v.col + in.col, v.row + in.row});
                replace(star, other);
                ++result.cycle_star_rewrites;
                rewrote = true;
            }
        }
        if (! rewrote)
            break;

        ++result.steps;
        if (! before.is_subset_of(covered_edges(grid, cover)))
            throw std::logic_error("normalization uncovered an edge");
        if (result.steps > result.initial_stars)
            throw std::logic_error("normalization exceeded its step bound");
    }

    // refill slots lost to merges so the element count is unchanged
    int missing = static_cast<int>(input.size()) - static_cast<int>(cover.size());
    if (missing > 0) {
        auto candidates = enumerate_maximal_bicliques(grid);
        std::ranges::stable_partition(candidates, [&](const Biclique & b) { return ! is_boundary_element(grid, b); });
        std::ranges::stable_partition(candidates, [](const Biclique & b) { return b.is_cycle(); });
        auto before = cover.size();
        pad(grid, cover, candidates, 0, missing);
        result.padded = static_cast<int>(cover.size() - before);
    }
    return result;
}

auto normalize_cover(const Grid & grid, const Cover & cover) -> Cover
{
    return normalize(grid, cover).cover;
}

} // namespace gridbc
