#include "support.hpp"

#include <doctest.h>

#include <gridbc/solver.hpp>
#include <gridbc/theory.hpp>

using namespace gridbc;

namespace {
auto oracle_instances() -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= 16; ++p)
        for (int q = p; p * q <= 16; ++q)
            if (p * q >= 2)
                out.emplace_back(p, q);
    out.emplace_back(3, 5);
    out.emplace_back(2, 8);
    return out;
}

auto independent() -> SolveOptions
{
    SolveOptions o;
    o.seed_incumbent = false;
    o.use_special_bound = false;
    return o;
}
}

TEST_CASE("solver examples")
{
    CHECK(solve_exact(make_grid(2, 2)).size == 1);
    CHECK(solve_exact(make_grid(3, 3)).size == 4);
    auto r44 = solve_exact(make_grid(4, 4));
    CHECK(r44.size == 7);
    CHECK(r44.nodes == 0);
    CHECK(solve_exact(make_grid(2, 7)).size == 6);
    CHECK_THROWS_AS((void) solve_exact(make_grid(1, 1)), std::invalid_argument);
}

TEST_CASE("lower_bound_hint examples")
{
    Grid g66({6, 6});
    CHECK(lower_bound_hint(g66, g66.full_set()) == 17);
    CHECK(lower_bound_hint(g66, g66.empty_set()) == 0);
    Grid g33({3, 3});
    CHECK(lower_bound_hint(g33, g33.full_set()) == 4);
    CHECK_THROWS_AS((void) lower_bound_hint(g33, g66.full_set()), std::invalid_argument);
}

TEST_CASE("solver matches exhaustive search and the closed form")
{
    for (auto [p, q] : oracle_instances()) {
        Grid g({p, q});
        int brute = support::exhaustive_minimum(g, g.full_set());
        for (const auto & options : {SolveOptions{}, independent()}) {
            auto r = solve_exact(g, options);
            CAPTURE(p);
            CAPTURE(q);
            REQUIRE(r.optimal());
            REQUIRE(r.size == brute);
            REQUIRE(r.size == bc_value(p, q));
            REQUIRE(r.lb == r.ub);
            auto report = verify_cover(g, r.witness);
            REQUIRE(report.valid);
            REQUIRE(static_cast<long long>(r.witness.size()) == r.size);
            for (const auto & b : r.witness)
                REQUIRE(is_maximal(g, b));
        }
    }
}

TEST_CASE("lower_bound_hint is admissible on residual edge sets")
{
    std::mt19937_64 rng(11);
    for (auto [p, q] : oracle_instances()) {
        Grid g({p, q});
        REQUIRE(lower_bound_hint(g, g.full_set()) <= solve_exact(g).size);
        for (int trial = 0; trial < 6; ++trial) {
            auto residual = g.empty_set();
            for (std::size_t i = 0; i < g.num_edges(); ++i)
                if (std::bernoulli_distribution(0.5)(rng))
                    residual.set(i);
            REQUIRE(lower_bound_hint(g, residual) <= support::exhaustive_minimum(g, residual));
        }
    }
}

TEST_CASE("optimum does not decrease when a column is added")
{
    for (int p = 1; p <= 4; ++p) {
        long long previous = 0;
        for (int q = 1; p * q <= 20; ++q) {
            if (p * q < 2)
                continue;
            auto r = solve_exact(make_grid(p, q), independent());
            REQUIRE(r.optimal());
            REQUIRE(r.size >= previous);
            previous = r.size;
        }
    }
}

TEST_CASE("solver is deterministic")
{
    for (auto [p, q] : {std::pair{3, 5}, {4, 4}, {2, 8}}) {
        auto a = solve_exact(make_grid(p, q), independent());
        auto b = solve_exact(make_grid(p, q), independent());
        CHECK(a.witness == b.witness);
        CHECK(a.nodes == b.nodes);
    }
}

TEST_CASE("budget exhaustion reports bounds instead of an optimum")
{
    SolveOptions o = independent();
    o.budget = std::chrono::duration<double>(0);
    auto r = solve_exact(make_grid(6, 7), o);
    CHECK_FALSE(r.optimal());
    CHECK(r.lb <= r.ub);
    CHECK(r.lb >= 1);

    SolveOptions seeded;
    seeded.budget = std::chrono::duration<double>(600);
    auto r55 = solve_exact(make_grid(5, 5), seeded);
    CHECK(r55.optimal());
    CHECK(r55.size == 12);
}
