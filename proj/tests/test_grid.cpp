#include "support.hpp"

#include <doctest.h>

#include <gridbc/grid.hpp>

using namespace gridbc;

TEST_CASE("make_grid sizes")
{
    auto g11 = make_grid(1, 1);
    CHECK(g11.num_vertices() == 1);
    CHECK(g11.num_edges() == 0);

    auto g23 = make_grid(2, 3);
    CHECK(g23.num_vertices() == 6);
    CHECK(g23.num_edges() == 7);

    auto g66 = make_grid(6, 6);
    CHECK(g66.num_vertices() == 36);
    CHECK(g66.num_edges() == 60);

    CHECK_THROWS_AS((void) make_grid(0, 3), std::invalid_argument);
    CHECK_THROWS_AS((void) make_grid(3, 0), std::invalid_argument);
    CHECK_THROWS_AS((void) make_grid(-1, 2), std::invalid_argument);
}

TEST_CASE("edge count matches 2pq - p - q up to 100 x 100")
{
    for (int p = 1; p <= 100; ++p)
        for (int q = 1; q <= 100; ++q)
            REQUIRE(make_grid(p, q).num_edges() == static_cast<std::size_t>(2 * p * q - p - q));
}

TEST_CASE("edge count matches a direct adjacency count")
{
    for (int p = 1; p <= 12; ++p)
        for (int q = 1; q <= 12; ++q) {
            Grid g({p, q});
            std::size_t pairs = 0;
            auto vs = g.vertices();
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    if (std::abs(vs[i].col - vs[j].col) + std::abs(vs[i].row - vs[j].row) == 1)
                        ++pairs;
            REQUIRE(pairs == g.num_edges());
        }
}

TEST_CASE("canonical edge numbering")
{
    Grid g({3, 4});
    CHECK(g.edge_index(Edge::make({1, 1}, {2, 1})) == 0);
    CHECK(g.edge_index(Edge::make({3, 1}, {4, 1})) == 2);
    CHECK(g.edge_index(Edge::make({1, 2}, {2, 2})) == 3);
    CHECK(g.edge_index(Edge::make({1, 1}, {1, 2})) == 9);
    CHECK(g.edge_index(Edge::make({4, 2}, {4, 3})) == 16);
    CHECK_FALSE(g.find_edge({1, 1}, {2, 2}));
    CHECK_THROWS_AS((void) g.edge_index(Edge::make({1, 1}, {3, 1})), std::invalid_argument);

    for (int p = 1; p <= 7; ++p)
        for (int q = 1; q <= 7; ++q) {
            Grid h({p, q});
            for (std::size_t i = 0; i < h.num_edges(); ++i) {
                auto e = h.edge_at(i);
                REQUIRE(h.edge_index(e) == i);
                REQUIRE(support::brute_edge_index(h.dims(), e.a, e.b) == i);
            }
        }
}

TEST_CASE("neighbours, corners and boundary")
{
    Grid g({3, 4});
    CHECK(g.degree({1, 1}) == 2);
    CHECK(g.degree({2, 1}) == 3);
    CHECK(g.degree({2, 2}) == 4);
    CHECK(g.neighbors({2, 2}) == std::vector<Vertex>{{1, 2}, {2, 1}, {2, 3}, {3, 2}});
    CHECK(g.is_corner({4, 3}));
    CHECK_FALSE(g.is_corner({2, 3}));
    CHECK(g.on_boundary({2, 3}));
    CHECK_FALSE(g.on_boundary({2, 2}));
    auto corners = g.corners();
    CHECK(std::ranges::count(corners, Vertex{1, 3}) == 1);
    CHECK(std::ranges::count(corners, Vertex{4, 1}) == 1);
}

TEST_CASE("outer cycle")
{
    CHECK(outer_cycle(make_grid(2, 2)).size() == 4);
    CHECK(outer_cycle(make_grid(3, 4)).size() == 10);
    CHECK_THROWS_AS((void) outer_cycle(make_grid(1, 5)), NoOuterCycle);
    CHECK_THROWS_AS((void) outer_cycle(make_grid(4, 1)), NoOuterCycle);

    for (int p = 2; p <= 9; ++p)
        for (int q = 2; q <= 9; ++q) {
            Grid g({p, q});
            auto walk = outer_cycle(g);
            REQUIRE(walk.size() == static_cast<std::size_t>(2 * p + 2 * q - 4));
            REQUIRE(g.outer_edges().count() == walk.size());
            // consecutive edges share an endpoint, and the walk closes
            for (std::size_t i = 0; i < walk.size(); ++i) {
                const auto & e = walk[i];
                const auto & f = walk[(i + 1) % walk.size()];
                REQUIRE((e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b));
                REQUIRE(g.on_boundary(e.a));
                REQUIRE(g.on_boundary(e.b));
            }
            CHECK(walk.front().a == Vertex{1, 1});
        }
}

TEST_CASE("biclique edges")
{
    auto star = Biclique::star({2, 1}, {{1, 1}, {3, 1}, {2, 2}});
    CHECK(biclique_edges(star).size() == 3);
    CHECK(biclique_edges(Biclique::cycle({1, 1})).size() == 4);
    Grid g({3, 3});
    CHECK(biclique_edges(full_star(g, {2, 2})).size() == 4);

    CHECK_THROWS_AS((void) Biclique::star({1, 1}, {}), std::invalid_argument);
    CHECK_THROWS_AS((void) Biclique::star({1, 1}, {{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK(validate(g, Biclique::cycle({3, 1})).has_value());
    CHECK(validate(g, Biclique::star({1, 1}, {{2, 2}})).has_value());
    CHECK_FALSE(validate(g, Biclique::cycle({2, 2})).has_value());
}

TEST_CASE("maximal biclique enumeration examples")
{
    auto e22 = enumerate_maximal_bicliques(make_grid(2, 2));
    REQUIRE(e22.size() == 1);
    CHECK(e22[0] == Biclique::cycle({1, 1}));

    auto e33 = enumerate_maximal_bicliques(make_grid(3, 3));
    CHECK(e33.size() == 9);
    CHECK(std::ranges::count_if(e33, [](const Biclique & b) { return b.is_cycle(); }) == 4);
    CHECK(std::ranges::count_if(e33, [](const Biclique & b) { return b.leaves().size() == 3; }) == 4);
    CHECK(std::ranges::count_if(e33, [](const Biclique & b) { return b.leaves().size() == 4; }) == 1);

    auto e13 = enumerate_maximal_bicliques(make_grid(1, 3));
    REQUIRE(e13.size() == 1);
    CHECK(e13[0] == Biclique::star({2, 1}, {{1, 1}, {3, 1}}));

    CHECK(enumerate_maximal_bicliques(make_grid(1, 2)).size() == 1);
    CHECK(enumerate_maximal_bicliques(make_grid(2, 1)).size() == 1);
    CHECK(enumerate_maximal_bicliques(make_grid(1, 1)).empty());
}

TEST_CASE("maximal biclique count formula")
{
    for (int p = 2; p <= 20; ++p)
        for (int q = p; q <= 20; ++q) {
            auto all = enumerate_maximal_bicliques(make_grid(p, q));
            std::size_t expected = static_cast<std::size_t>((p - 1) * (q - 1) + 2 * (p - 2) + 2 * (q - 2) + (p - 2) * (q - 2));
            REQUIRE(all.size() == expected);
            REQUIRE(std::ranges::is_sorted(all));
            REQUIRE(std::ranges::adjacent_find(all) == all.end());
        }
    for (int q = 3; q <= 20; ++q)
        CHECK(enumerate_maximal_bicliques(make_grid(1, q)).size() == static_cast<std::size_t>(q - 2));
}

TEST_CASE("maximal bicliques agree with an exhaustive search")
{
    for (int p = 1; p <= 4; ++p)
        for (int q = 1; q <= 4; ++q) {
            if (p * q < 2)
                continue;
            Grid g({p, q});
            std::set<std::vector<std::size_t>> ours;
            for (const auto & b : enumerate_maximal_bicliques(g)) {
                std::vector<std::size_t> edges;
                for (const auto & e : biclique_edges(b))
                    edges.push_back(g.edge_index(e));
                std::ranges::sort(edges);
                ours.insert(edges);
                REQUIRE(is_maximal(g, b));
            }
            CAPTURE(p);
            CAPTURE(q);
            REQUIRE(ours == support::brute_maximal_edge_sets(g.dims()));
        }
}

TEST_CASE("maximality: no edge can be added")
{
    Grid g({5, 6});
    for (const auto & b : enumerate_maximal_bicliques(g)) {
        auto edges = biclique_edges(b);
        // adding any edge that touches the biclique breaks completeness
        std::set<Vertex> verts;
        for (const auto & e : edges) {
            verts.insert(e.a);
            verts.insert(e.b);
        }
        for (std::size_t i = 0; i < g.num_edges(); ++i) {
            auto e = g.edge_at(i);
            if (std::ranges::find(edges, e) != edges.end())
                continue;
            std::set<Vertex> side[2];
            for (auto v : verts)
                side[color(v)].insert(v);
            side[color(e.a)].insert(e.a);
            side[color(e.b)].insert(e.b);
            bool complete = true;
            for (auto u : side[0])
                for (auto v : side[1])
                    complete = complete && g.adjacent(u, v);
            REQUIRE_FALSE(complete);
        }
    }
}

TEST_CASE("maximalize")
{
    Grid g22({2, 2});
    Cover corners(g22.dims(), {Biclique::star({1, 1}, {{2, 1}, {1, 2}}), Biclique::star({2, 2}, {{1, 2}, {2, 1}})});
    auto m = maximalize(g22, corners);
    REQUIRE(m.size() == 1);
    CHECK(*m.begin() == Biclique::cycle({1, 1}));

    Grid g33({3, 3});
    Cover path(g33.dims(), {Biclique::star({2, 2}, {{1, 2}, {3, 2}})});
    auto m33 = maximalize(g33, path);
    REQUIRE(m33.size() == 1);
    CHECK(*m33.begin() == full_star(g33, {2, 2}));

    Grid g45({4, 5});
    Cover maximal(g45.dims(), enumerate_maximal_bicliques(g45));
    CHECK(maximalize(g45, maximal) == maximal);

    // a single edge prefers the square with the smaller anchor
    CHECK(maximal_superset(g33, Biclique::star({2, 2}, {{2, 3}})) == Biclique::cycle({1, 2}));
    CHECK_THROWS_AS((void) maximalize(g33, Cover(g33.dims(), {Biclique::cycle({3, 3})})), std::invalid_argument);
}

TEST_CASE("cover container")
{
    Cover c({3, 3});
    CHECK(c.insert(Biclique::cycle({1, 1})));
    CHECK_FALSE(c.insert(Biclique::cycle({1, 1})));
    CHECK(c.insert(Biclique::star({2, 2}, {{2, 3}})));
    CHECK(c.size() == 2);
    CHECK(c.begin()->is_star());
    CHECK(c.erase(Biclique::cycle({1, 1})));
    CHECK_FALSE(c.contains(Biclique::cycle({1, 1})));
    CHECK_THROWS_AS(Cover({3, 3}, {Biclique::cycle({1, 1}), Biclique::cycle({1, 1})}), std::invalid_argument);
}

TEST_CASE("symmetries act as the dihedral group")
{
    GridDims d{3, 5};
    Grid g(d);
    for (auto s : all_symmetries) {
        Grid h(apply(s, d));
        std::set<std::size_t> images;
        for (std::size_t i = 0; i < g.num_edges(); ++i) {
            auto e = apply(s, d, g.edge_at(i));
            REQUIRE(h.find_edge(e.a, e.b).has_value());
            images.insert(h.edge_index(e));
        }
        CHECK(images.size() == g.num_edges());
        for (const auto & b : enumerate_maximal_bicliques(g))
            REQUIRE(is_maximal(h, apply(s, d, b)));
    }
    CHECK(apply(Symmetry::rotate90, d, Vertex{1, 1}) == Vertex{3, 1});
    CHECK(apply(Symmetry::rotate90, apply(Symmetry::rotate90, d), apply(Symmetry::rotate90, d, Vertex{2, 1})) ==
          apply(Symmetry::rotate180, d, Vertex{2, 1}));
    CHECK(apply(Symmetry::transpose, d, Vertex{2, 3}) == Vertex{3, 2});
    CHECK(apply(Symmetry::mirror_lr, d, Biclique::cycle({1, 1})) == Biclique::cycle({4, 1}));

    auto cover = maximalize(g, optimal_cover(3, 5));
    for (auto s : all_symmetries) {
        auto image = apply(s, cover);
        Grid h(image.dims());
        CHECK(verify_cover(h, image).valid);
        CHECK(image.size() == cover.size());
        EdgeSet mapped = apply(s, d, g.full_set());
        CHECK(mapped.all());
    }
}
