#include <gridbc/solver.hpp>

#include <gridbc/construct.hpp>
#include <gridbc/theory.hpp>

#include <algorithm>

using std::size_t;
using std::vector;

namespace gridbc {

namespace {
    auto ceil_div(long long a, long long b) -> long long { return (a + b - 1) / b; }

    auto hint(const EdgeSet & uncovered, const EdgeSet * special) -> long long
    {
        long long quarter = ceil_div(static_cast<long long>(uncovered.count()), 4);
        if (! special)
            return quarter;
        return std::max(quarter, ceil_div(static_cast<long long>((uncovered & *special).count()), 2));
    }

    class Search
    {
    public:
        Search(const Grid & grid, const SolveOptions & options)
            : _grid(grid), _options(options), _special(special_edge_set(grid.rows(), grid.cols()).edges),
              _start(std::chrono::steady_clock::now())
        {
            _candidates = enumerate_maximal_bicliques(grid);
            _per_edge.resize(grid.num_edges());
            for (size_t i = 0; i < _candidates.size(); ++i) {
                _masks.push_back(edge_mask(grid, _candidates[i]));
                for (auto e = _masks[i].find_first(); e != EdgeSet::npos; e = _masks[i].find_next(e))
                    _per_edge[e].push_back(i);
            }
        }

        auto run() -> SolveResult
        {
            SolveResult result;
            auto all = _grid.full_set();
            result.lb = hint(all, special());
            _best = static_cast<long long>(_grid.num_edges()) + 1;

            if (_options.seed_incumbent) {
                auto seed = maximalize(_grid, optimal_cover(_grid.rows(), _grid.cols()));
                _best = static_cast<long long>(seed.size());
                _best_cover = seed;
            }

            if (result.lb < _best)
                dfs(all, 0);

            result.nodes = _nodes;
            result.seconds = elapsed();
            result.ub = std::min(_best, static_cast<long long>(_grid.num_edges()));
            result.size = result.ub;
            result.witness = _best_cover;
            if (_aborted)
                result.status = SolveStatus::incomplete;
            else {
                result.status = SolveStatus::optimal;
                result.lb = _best;
            }
            return result;
        }

    private:
        [[nodiscard]] auto special() const -> const EdgeSet * { return _options.use_special_bound ? &_special : nullptr; }

        [[nodiscard]] auto elapsed() const -> double
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count();
        }

        auto out_of_time() -> bool
        {
            if (! _aborted && _options.budget && (_nodes & 1023) == 1 && elapsed() > _options.budget->count())
                _aborted = true;
            return _aborted;
        }

        auto dfs(const EdgeSet & uncovered, long long depth) -> void
        {
            ++_nodes;
            if (out_of_time())
                return;
            if (uncovered.none()) {
                if (depth < _best) {
                    _best = depth;
                    vector<Biclique> chosen;
                    for (auto i : _chosen)
                        chosen.push_back(_candidates[i]);
                    _best_cover = Cover(_grid.dims(), std::move(chosen));
                }
                return;
            }
            if (depth + hint(uncovered, special()) >= _best)
                return;

            size_t pivot = uncovered.find_first();
            for (auto e = pivot; e != EdgeSet::npos; e = uncovered.find_next(e))
                if (_per_edge[e].size() < _per_edge[pivot].size())
                    pivot = e;

            const auto & options = _per_edge[pivot];
            vector<EdgeSet> gain;
            gain.reserve(options.size());
            for (auto i : options)
                gain.push_back(_masks[i] & uncovered);

            for (size_t a = 0; a < options.size(); ++a) {
                bool dominated = false;
                for (size_t b = 0; b < options.size() && ! dominated; ++b) {
                    if (a == b || ! gain[a].is_subset_of(gain[b]))
                        continue;
                    dominated = gain[a] != gain[b] || b < a;
                }
                if (dominated)
                    continue;
                _chosen.push_back(options[a]);
                dfs(uncovered - _masks[options[a]], depth + 1);
                _chosen.pop_back();
                if (_aborted)
                    return;
            }
        }

        const Grid & _grid;
        SolveOptions _options;
        EdgeSet _special;
        std::chrono::steady_clock::time_point _start;
        vector<Biclique> _candidates;
        vector<EdgeSet> _masks;
        vector<vector<size_t>> _per_edge;
        vector<size_t> _chosen;
        long long _best = 0;
        Cover _best_cover;
        long long _nodes = 0;
        bool _aborted = false;
    };
}

auto lower_bound_hint(const Grid & grid, const EdgeSet & uncovered) -> long long
{
    if (uncovered.size() != grid.num_edges())
        throw std::invalid_argument("edge set does not belong to this grid");
    auto special = special_edge_set(grid.rows(), grid.cols()).edges;
    return hint(uncovered, &special);
}

auto solve_exact(const Grid & grid, const SolveOptions & options) -> SolveResult
{
    if (grid.num_edges() == 0)
        throw std::invalid_argument("the 1x1 grid has no edges to cover");
    return Search(grid, options).run();
}

} // namespace gridbc
