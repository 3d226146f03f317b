#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kcover/generators.hpp"
#include "kcover/plane.hpp"

using namespace kcover;

namespace {

TightPseudoWalk make_closed(std::vector<std::vector<int>> edges)
{
    TightPseudoWalk w;
    for (auto& e : edges) w.edges.push_back(KEdge(e));
    w.closed = true;
    return w;
}

PlaneGraph single_triangle()
{
    PlaneGraph d;
    d.num_vertices = 3;
    d.faces = {{2, 1, 0}, {0, 1, 2}};
    d.outer = 0;
    REQUIRE(d.finalize());
    return d;
}

PlaneGraph wheel4()
{
    // Outer 4-cycle 0,1,2,3 around hub 4.
    PlaneGraph d;
    d.num_vertices = 5;
    d.faces = {{3, 2, 1, 0}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
    d.outer = 0;
    REQUIRE(d.finalize());
    return d;
}

}  // namespace

TEST_CASE("finalize accepts a triangle and rebuilds rotation")
{
    PlaneGraph d = single_triangle();
    CHECK(d.num_edges() == 3);
    CHECK(d.has_edge(0, 1));
    for (int v = 0; v < 3; ++v) CHECK(d.rotation[v].size() == 2);
}

TEST_CASE("finalize rejects broken face structures")
{
    std::string why;
    PlaneGraph d;
    d.num_vertices = 3;
    d.faces = {{0, 1, 2}, {0, 1, 2}};  // same orientation twice
    d.outer = 0;
    CHECK(!d.finalize(&why));
    CHECK(!why.empty());

    PlaneGraph e;
    e.num_vertices = 4;  // vertex 3 is isolated
    e.faces = {{2, 1, 0}, {0, 1, 2}};
    e.outer = 0;
    CHECK(!e.finalize());

    PlaneGraph f;
    f.num_vertices = 4;
    f.faces = {{3, 2, 1, 0}, {0, 1, 2, 3}, {0, 2}};  // Euler violation
    f.outer = 0;
    CHECK(!f.finalize());
}

TEST_CASE("grid triangulation of a short closed walk")
{
    auto g = ColouredKGraph::monochromatic(10, 3, Colour::red);
    auto q = make_closed({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 0}, {5, 0, 1}});
    auto t = triangulate(g, q);
    REQUIRE(t.has_value());
    const int m = 6, k = 3;
    CHECK(t->plane.num_vertices == m * k + 1);
    CHECK(t->plane.num_edges() == m * (3 * k - 1));
    CHECK(static_cast<int>(t->plane.faces.size()) == m * (2 * k - 1) + 1);
    CHECK(t->case_b_splits == 0);
    std::string why;
    CHECK_MESSAGE(validate_triangulation(*t, g, q, &why), why);
}

TEST_CASE("triangulation of the trivial walks")
{
    auto g = ColouredKGraph::monochromatic(6, 3, Colour::red);
    auto t1 = triangulate(g, make_closed({{0, 1, 2}}));
    REQUIRE(t1.has_value());
    CHECK(validate_triangulation(*t1, g, make_closed({{0, 1, 2}})));
    auto q2 = make_closed({{0, 1, 2}, {1, 2, 3}});
    auto t2 = triangulate(g, q2);
    REQUIRE(t2.has_value());
    CHECK(validate_triangulation(*t2, g, q2));
}

TEST_CASE("long walks split through a bridge and glue back")
{
    auto g = ColouredKGraph::monochromatic(12, 3, Colour::red);
    auto q = random_closed_walk(g, 20, 7);
    REQUIRE(q.length() >= 15);
    auto t = triangulate(g, q, 4);  // force the recursive case
    REQUIRE(t.has_value());
    CHECK(t->case_b_splits >= 1);
    std::string why;
    CHECK_MESSAGE(validate_triangulation(*t, g, q, &why), why);
}

TEST_CASE("random closed walks triangulate and validate across sizes")
{
    for (int k : {3, 4}) {
        auto g = ColouredKGraph::monochromatic(14, k, Colour::red);
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            auto q = random_closed_walk(g, 3 + static_cast<int>(seed), seed);
            auto t = triangulate(g, q);
            REQUIRE(t.has_value());
            std::string why;
            CHECK_MESSAGE(validate_triangulation(*t, g, q, &why), why);
        }
    }
}

TEST_CASE("validation catches a corrupted edge map")
{
    auto g = ColouredKGraph::monochromatic(10, 3, Colour::red);
    auto q = make_closed({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
    auto t = triangulate(g, q);
    REQUIRE(t.has_value());
    Triangulation bad = *t;
    bad.phi[t->plane.num_vertices - 1] = KEdge({7, 8, 9});  // far from its neighbours
    CHECK(!validate_triangulation(bad, g, q));
}

TEST_CASE("hex walk on a single bichromatic triangle")
{
    PlaneGraph d = single_triangle();
    std::vector<Colour> col = {Colour::red, Colour::blue, Colour::red};
    auto h = hex_walk(d, {0, 1, 2}, col);
    CHECK(h.i_star == 2);
    CHECK(h.red_walk == std::vector<int>{0, 2});
    CHECK(h.blue_walk == std::vector<int>{1});
}

TEST_CASE("hex walk threads the wheel")
{
    PlaneGraph d = wheel4();
    std::vector<Colour> col = {Colour::red, Colour::blue, Colour::blue, Colour::red,
                               Colour::red};
    auto h = hex_walk(d, {0, 1, 2, 3}, col);
    CHECK(h.i_star == 3);
    CHECK(h.red_walk == std::vector<int>{0, 4, 3});
    CHECK(h.blue_walk == std::vector<int>{1, 2});
}

TEST_CASE("hex walk precondition on the first two outer vertices")
{
    PlaneGraph d = single_triangle();
    std::vector<Colour> col = {Colour::blue, Colour::red, Colour::red};
    CHECK_THROWS_AS(hex_walk(d, {0, 1, 2}, col), precondition_violation);
}

TEST_CASE("hex endpoints match the crossing edge orientation")
{
    // On triangulations of coloured walks, the extracted walks end at the
    // two sides of the final crossing: x_{i*} blue, x_{i*+1} red.
    auto g = random_colouring(11, 3, 0.5, 3);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto q = random_closed_walk(g, 4 + static_cast<int>(seed % 8), seed);
        if (g.colour(q.edges[0]) != Colour::red) continue;
        if (g.colour(q.edges[1]) != Colour::blue) continue;
        auto t = triangulate(g, q);
        REQUIRE(t.has_value());
        std::vector<Colour> col;
        for (const KEdge& e : t->phi) col.push_back(g.colour(e));
        auto h = hex_walk(t->plane, t->outer_cycle, col);
        const int m = q.length();
        CHECK(col[t->outer_cycle[h.i_star - 1]] == Colour::blue);
        CHECK(col[t->outer_cycle[h.i_star % m]] == Colour::red);
        CHECK(h.red_walk.front() == t->outer_cycle[0]);
        CHECK(h.blue_walk.front() == t->outer_cycle[1]);
        CHECK(h.red_walk.back() == t->outer_cycle[h.i_star % m]);
        CHECK(h.blue_walk.back() == t->outer_cycle[h.i_star - 1]);
        // Consecutive vertices of each side really are plane edges, so the
        // extracted sides are monochromatic walks.
        for (std::size_t i = 0; i + 1 < h.red_walk.size(); ++i)
            CHECK(t->plane.has_edge(h.red_walk[i], h.red_walk[i + 1]));
        for (std::size_t i = 0; i + 1 < h.blue_walk.size(); ++i)
            CHECK(t->plane.has_edge(h.blue_walk[i], h.blue_walk[i + 1]));
    }
}
