#include <gridbc/diagnostics.hpp>

#include <algorithm>
#include <numeric>

using std::size_t;
using std::vector;

namespace gridbc {

auto thick_edges(const Grid & grid, const Cover & cover) -> EdgeSet
{
    auto once = grid.empty_set(), twice = grid.empty_set();
    for (const auto & b : cover) {
        if (validate(grid, b))
            continue;
        auto mask = edge_mask(grid, b);
        twice |= once & mask;
        once |= mask;
    }
    return twice;
}

auto side_name(Side s) -> const char *
{
    switch (s) {
    case Side::bottom: return "bottom";
    case Side::right: return "right";
    case Side::top: return "top";
    case Side::left: return "left";
    }
    return "?";
}

auto BoundaryAnalysis::b_at(int i) const -> long long
{
    auto it = b.find(i);
    return it == b.end() ? 0 : it->second;
}

namespace {
    struct UnionFind
    {
        vector<size_t> parent;

        explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), size_t{0}); }

        auto find(size_t x) -> size_t
        {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        }

        auto unite(size_t a, size_t b) -> void { parent[find(a)] = find(b); }
    };

    auto shares_vertex(Vertex a, Vertex b) -> bool
    {
        return std::abs(a.col - b.col) <= 1 && std::abs(a.row - b.row) <= 1;
    }

    auto first_bit(const EdgeSet & s) -> size_t
    {
        auto i = s.find_first();
        return i == EdgeSet::npos ? s.size() : i;
    }

    auto side_of(const Edge & e) -> Side
    {
        if (e.horizontal())
            return e.a.row == 1 ? Side::bottom : Side::top;
        return e.a.col == 1 ? Side::left : Side::right;
    }

    auto require_analyzable(const Grid & grid, const Cover & cover) -> void
    {
        if (! grid.has_outer_cycle())
            throw std::invalid_argument("boundary analysis needs p, q >= 2");
        for (const auto & b : cover) {
            if (auto why = validate(grid, b))
                throw std::invalid_argument("invalid element: " + *why);
            if (! is_maximal(grid, b))
                throw std::invalid_argument("boundary analysis needs maximal elements");
        }
    }

    /// A side of the grid turned to the top: frame coordinates (x, y) with
    /// 1 <= x <= W, 1 <= y <= H, the link on row H.
    struct Frame
    {
        Side side;
        int p, q;

        [[nodiscard]] auto width() const -> int { return side == Side::top || side == Side::bottom ? q : p; }
        [[nodiscard]] auto height() const -> int { return side == Side::top || side == Side::bottom ? p : q; }

        [[nodiscard]] auto to_grid(int x, int y) const -> Vertex
        {
            switch (side) {
            case Side::top: return {x, y};
            case Side::bottom: return {q + 1 - x, p + 1 - y};
            case Side::left: return {q + 1 - y, x};
            case Side::right: return {y, p + 1 - x};
            }
            return {x, y};
        }

        [[nodiscard]] auto frame_x(Vertex v) const -> int
        {
            switch (side) {
            case Side::top: return v.col;
            case Side::bottom: return q + 1 - v.col;
            case Side::left: return v.row;
            case Side::right: return p + 1 - v.row;
            }
            return v.col;
        }
    };
}

auto boundary_analysis(const Grid & grid, const Cover & cover) -> BoundaryAnalysis
{
    require_analyzable(grid, cover);
    const int p = grid.rows(), q = grid.cols();

    BoundaryAnalysis a;
    a.dims = grid.dims();
    a.N = 2 * p + 2 * q - 8;
    a.H = grid.empty_set();

    auto once = grid.empty_set(), twice = grid.empty_set();
    for (const auto & b : cover) {
        if (! is_boundary_element(grid, b))
            continue;
        if (b.is_star()) {
            a.boundary_stars.push_back(b);
            continue;
        }
        a.boundary_cycles.push_back(b);
        auto mask = edge_mask(grid, b);
        twice |= once & mask;
        once |= mask;
    }
    a.H = once;
    a.beta = static_cast<long long>(twice.count());

    UnionFind uf(a.boundary_cycles.size());
    for (size_t i = 0; i < a.boundary_cycles.size(); ++i)
        for (size_t j = i + 1; j < a.boundary_cycles.size(); ++j)
            if (shares_vertex(a.boundary_cycles[i].anchor(), a.boundary_cycles[j].anchor()))
                uf.unite(i, j);

    std::map<size_t, Fence> by_root;
    for (size_t i = 0; i < a.boundary_cycles.size(); ++i) {
        auto & fence = by_root[uf.find(i)];
        if (fence.edges.empty()) {
            fence.edges = grid.empty_set();
            fence.shared = grid.empty_set();
        }
        auto mask = edge_mask(grid, a.boundary_cycles[i]);
        fence.shared |= fence.edges & mask;
        fence.edges |= mask;
        fence.cycles.push_back(a.boundary_cycles[i]);
    }
    for (auto & [root, fence] : by_root)
        a.fences.push_back(std::move(fence));
    std::ranges::sort(a.fences, {}, [&](const Fence & f) { return first_bit(f.edges & grid.outer_edges()); });
    for (const auto & f : a.fences)
        ++a.b[f.size()];

    for (auto v : grid.corners()) {
        bool in_h = std::ranges::any_of(grid.neighbors(v), [&](Vertex u) { return a.H.test(*grid.find_edge(u, v)); });
        if (in_h)
            ++a.c;
    }

    // links: runs of outer edges outside H, taken cyclically along the outer walk
    auto walk = outer_cycle(grid);
    const size_t len = walk.size();
    auto in_h = [&](size_t i) { return a.H.test(grid.edge_index(walk[i % len])); };
    size_t start = 0;
    while (start < len && ! in_h(start))
        ++start;
    if (start == len) {
        a.unlinked_out_edges = walk;
        std::ranges::sort(a.unlinked_out_edges, {}, [&](const Edge & e) { return grid.edge_index(e); });
        return a;
    }

    // vertex i of the walk is the start of walk[i]; walk[0] starts at (1,1)
    vector<Vertex> at(len + 1);
    at[0] = {1, 1};
    for (size_t i = 0; i < len; ++i)
        at[i + 1] = walk[i].a == at[i] ? walk[i].b : walk[i].a;

    size_t i = start;
    while (i < start + len) {
        if (in_h(i)) {
            ++i;
            continue;
        }
        Link link;
        link.start = at[i % len];
        bool corner = grid.is_corner(link.start);
        while (i < start + len && ! in_h(i)) {
            link.edges.push_back(walk[i % len]);
            Vertex next = at[i % len + 1];
            corner = corner || grid.is_corner(next);
            link.end = next;
            ++i;
        }
        if (corner)
            a.unlinked_out_edges.insert(a.unlinked_out_edges.end(), link.edges.begin(), link.edges.end());
        else {
            link.side = side_of(link.edges.front());
            a.links.push_back(std::move(link));
        }
    }
    auto min_index = [&](const Link & l) {
        size_t best = grid.num_edges();
        for (const auto & e : l.edges)
            best = std::min(best, grid.edge_index(e));
        return best;
    };
    std::ranges::sort(a.links, {}, min_index);
    std::ranges::sort(a.unlinked_out_edges, {}, [&](const Edge & e) { return grid.edge_index(e); });
    return a;
}

auto staircase_of(const Grid & grid, const Link & link) -> Staircase
{
    if (link.edges.empty())
        throw std::invalid_argument("empty link");
    for (const auto & e : link.edges)
        if (! grid.find_edge(e.a, e.b) || ! grid.outer_edges().test(grid.edge_index(e)) ||
            side_of(e) != link.side)
            throw std::invalid_argument("link edge not on the stated side of the outer cycle");

    Frame frame{link.side, grid.rows(), grid.cols()};
    const int H = frame.height();
    int a = frame.frame_x(link.start), b = frame.frame_x(link.end);
    if (a > b)
        std::swap(a, b);

    Staircase s;
    s.link = link;
    s.region = grid.empty_set();

    auto lo = [&](int d) { return a + std::max(0, d - 2); };
    auto hi = [&](int d) { return b - std::max(0, d - 2); };
    auto add = [&](int x1, int y1, int x2, int y2) {
        s.region.set(grid.edge_index(Edge::make(frame.to_grid(x1, y1), frame.to_grid(x2, y2))));
    };

    int deepest = 0;
    while (hi(deepest + 1) - lo(deepest + 1) >= 1) {
        if (deepest + 1 > H - 1) {
            s.truncated = true;
            break;
        }
        ++deepest;
    }
    s.depth = deepest;

    for (int d = 0; d <= deepest; ++d) {
        const int y = H - d;
        for (int x = lo(d); x < hi(d); ++x)
            add(x, y, x + 1, y);
        if (d < deepest)
            for (int x = lo(d + 1); x <= hi(d + 1); ++x)
                add(x, y, x, y - 1);
    }

    // walls: down twice, then alternately inward and down, stopping at the region's last row
    auto wall = [&](int from, int dir) {
        vector<Vertex> path{frame.to_grid(from, H)};
        for (int d = 1; d <= deepest; ++d) {
            const int y = H - d;
            const int x = from + dir * std::max(0, d - 2);
            path.push_back(frame.to_grid(x, y));
            const int inward = x + dir;
            if (d >= 2 && inward >= lo(d) && inward <= hi(d) && (d < deepest || ! s.truncated))
                path.push_back(frame.to_grid(inward, y));
        }
        return path;
    };
    s.left_wall = wall(a, +1);
    s.right_wall = wall(b, -1);
    return s;
}

auto StaircaseClassification::every_staircase_thick() const -> bool
{
    return std::ranges::all_of(thick_in, [](const EdgeSet & t) { return t.any(); });
}

auto classify_staircases(const Grid & grid, const Cover & cover, const BoundaryAnalysis & analysis)
    -> StaircaseClassification
{
    if (! is_normalized(grid, cover))
        throw std::invalid_argument("classify_staircases needs a normalized cover");

    const auto thick = thick_edges(grid, cover);
    const int p = std::min(grid.rows(), grid.cols());

    StaircaseClassification out;
    for (const auto & link : analysis.links) {
        out.staircases.push_back(staircase_of(grid, link));
        out.thick_in.push_back(out.staircases.back().region & thick);
    }

    const size_t count = out.staircases.size();
    vector<bool> used(count, false), tip_used(analysis.fences.size(), false);
    auto only_thick = [&](size_t i) -> size_t {
        return out.thick_in[i].count() == 1 ? out.thick_in[i].find_first() : EdgeSet::npos;
    };

    for (size_t i = 0; i < count; ++i) {
        auto e = only_thick(i);
        if (e == EdgeSet::npos || out.staircases[i].length() != 2 * p - 4)
            continue;
        for (size_t f = 0; f < analysis.fences.size(); ++f) {
            const auto & fence = analysis.fences[f];
            if (tip_used[f] || fence.size() != 2 || fence.shared.count() != 1 || ! fence.shared.test(e))
                continue;
            tip_used[f] = used[i] = true;
            out.pyramids.push_back({i, f});
            break;
        }
    }

    for (size_t i = 0; i < count; ++i) {
        auto e = only_thick(i);
        if (used[i] || e == EdgeSet::npos)
            continue;
        for (size_t j = i + 1; j < count; ++j) {
            if (used[j] || only_thick(j) != e)
                continue;
            used[i] = used[j] = true;
            const int half = (out.staircases[i].length() + out.staircases[j].length()) / 2;
            const bool even = out.staircases[i].length() % 2 == 0 && out.staircases[j].length() % 2 == 0;
            out.doubles.push_back({i, j, e, even && (half == p - 2 || half == p)});
            break;
        }
    }

    for (size_t i = 0; i < count; ++i)
        if (! used[i])
            out.unclassified.push_back(i);
    out.n = static_cast<int>(out.pyramids.size());
    out.m = static_cast<int>(out.doubles.size());
    return out;
}

auto waste_identity_check(const Grid & grid, const Cover & cover) -> WasteIdentity
{
    if (! is_normalized(grid, cover))
        throw std::invalid_argument("waste identity needs a normalized cover");
    auto covered = grid.empty_set();
    for (const auto & b : cover)
        covered |= edge_mask(grid, b);
    if (! grid.outer_edges().is_subset_of(covered))
        throw std::invalid_argument("waste identity needs every outer edge covered");

    const auto analysis = boundary_analysis(grid, cover);
    const auto report = verify_cover(grid, cover);
    const int p = grid.rows(), q = grid.cols();

    WasteIdentity w;
    w.w = report.waste;
    w.tau = report.tau;
    w.beta = analysis.beta;
    w.b_N = analysis.b_at(analysis.N);
    w.lhs2 = 2 * (w.beta + w.tau);
    w.rhs2 = 2LL * p + 2LL * q - 4 - analysis.c - analysis.b_at(1);
    long long beta_from_fences = 0;
    for (auto [i, count] : analysis.b) {
        if (i >= 3 && i <= analysis.N - 1)
            w.rhs2 += (i - 2) * count;
        beta_from_fences += (i - 1) * count;
    }
    w.identity_holds = w.lhs2 == w.rhs2;
    w.inequality_holds = w.w >= w.beta + w.tau;
    w.beta_matches_fences = w.beta == beta_from_fences;
    return w;
}

} // namespace gridbc
