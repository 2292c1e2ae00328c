#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "test_support.hpp"
#include "wsc/enumeration.hpp"
#include "wsc/graph.hpp"

using namespace wsc;
using namespace testsupport;

namespace {
std::set<int> as_set(const VertexSet& s) {
    auto v = s.to_vector();
    return std::set<int>(v.begin(), v.end());
}
}  // namespace

TEST_CASE("graph construction validates input") {
    CHECK_THROWS(Graph(3, {{0, 0}}));              // loop
    CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}}));      // duplicate edge
    CHECK_THROWS(Graph(3, {{0, 3}}));              // out of range
    CHECK_THROWS(Graph(4, {{0, 1}, {2, 3}}));      // disconnected
    CHECK_NOTHROW(Graph(4, {{0, 1}, {2, 3}}, false));
    Graph g(4, {{0, 1}, {2, 3}}, false);
    CHECK_FALSE(g.connected());
    CHECK(g.distance(0, 2) == -1);
    CHECK(Graph(1, {}).connected());
}

TEST_CASE("distance matrix against BFS oracle") {
    for (const Graph& g : {path3(), cycle(5), cycle(6), wheel(5), wheel(6), octahedron(), complete_bipartite(2, 3)}) {
        for (int u = 0; u < g.vertex_count(); ++u) {
            auto d = oracle::bfs_distances(g, u);
            for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.distance(u, v) == d[v]);
        }
        CHECK(g.distance(0, 1) >= 0);
    }
}

TEST_CASE("interval basics") {
    Graph p3 = path3();
    CHECK(as_set(interval(p3, 0, 2)) == std::set<int>{0, 1, 2});

    Graph c5 = cycle(5);
    CHECK(as_set(interval(c5, 0, 0)) == std::set<int>{0});
    CHECK(as_set(interval(c5, 0, 2)) == std::set<int>{0, 1, 2});

    CHECK_THROWS(interval(c5, 0, 9));
}

TEST_CASE("interval equals path-enumeration oracle on small graphs") {
    for (const Graph& g : {path3(), cycle(5), cycle(6), wheel(5), wheel(6), octahedron(), extended_five_wheel()}) {
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK(as_set(interval(g, u, v)) == oracle::interval_by_path_enumeration(g, u, v));
    }
}

TEST_CASE("interval symmetry and endpoints") {
    for (const Graph& g : {cycle(6), wheel(5), octahedron()}) {
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u; v < g.vertex_count(); ++v) {
                auto iv = interval(g, u, v);
                CHECK(iv == interval(g, v, u));
                CHECK(iv.test(u));
                CHECK(iv.test(v));
            }
    }
}

TEST_CASE("ball and sphere") {
    Graph c5 = cycle(5);
    CHECK(as_set(ball(c5, 2, 0)) == std::set<int>{2});
    CHECK(as_set(sphere(c5, 0, 2)) == oracle::sphere_by_scan(c5, {0}, 2));
    CHECK(as_set(sphere(c5, 0, 2)) == std::set<int>{2, 3});

    Graph w5 = wheel(5);
    CHECK(ball(w5, 5, 1).count() == 6);  // hub reaches everything

    CHECK_THROWS(ball(c5, VertexSet(5), 1));  // empty center
    CHECK_THROWS(ball(c5, 0, -1));

    // set-centered ball
    Graph c6 = cycle(6);
    auto b = ball(c6, VertexSet::of(6, {0, 3}), 1);
    CHECK(as_set(b) == oracle::ball_by_scan(c6, {0, 3}, 1));
    CHECK(as_set(b) == std::set<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("ball of radius diameter covers the graph") {
    for (const Graph& g : {path3(), cycle(5), cycle(6), wheel(6), octahedron()}) {
        int diam = g.diameter();
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(ball(g, v, diam).count() == g.vertex_count());
    }
}

TEST_CASE("convexity verdicts from the interval oracle") {
    Graph c5 = cycle(5);
    CHECK(is_convex(c5, VertexSet::of(5, {3})));
    auto b1 = ball(c5, 0, 1);
    CHECK(as_set(b1) == std::set<int>{4, 0, 1});
    CHECK(is_convex(c5, b1) == oracle::convex_by_definition(c5, as_set(b1)));
    CHECK(is_convex(c5, b1));

    // C6: the unit ball around 0 is convex (the only non-trivial pair 5,1 has
    // its unique geodesic through 0), while the radius-2 ball is not.
    Graph c6 = cycle(6);
    auto b = ball(c6, 0, 1);
    CHECK(as_set(b) == std::set<int>{5, 0, 1});
    CHECK(is_convex(c6, b) == oracle::convex_by_definition(c6, as_set(b)));
    CHECK(is_convex(c6, b));
    auto b2 = ball(c6, 0, 2);
    CHECK(is_convex(c6, b2) == oracle::convex_by_definition(c6, as_set(b2)));
    CHECK_FALSE(is_convex(c6, b2));
}

TEST_CASE("convex hull") {
    Graph c5 = cycle(5);
    auto h = convex_hull(c5, VertexSet::of(5, {0, 2}));
    CHECK(as_set(h) == oracle::hull_by_iteration(c5, {0, 2}));
    CHECK(as_set(h) == std::set<int>{0, 1, 2});

    // idempotent on convex sets; an edge is convex
    auto pair = VertexSet::of(5, {1, 2});
    CHECK(convex_hull(c5, pair) == pair);
    CHECK(convex_hull(c5, h) == h);
}

TEST_CASE("convex hull is extensive, monotone, idempotent, with convex output") {
    for (const Graph& g : {cycle(6), wheel(5), octahedron()}) {
        int n = g.vertex_count();
        for (int mask = 1; mask < (1 << n); ++mask) {
            if (__builtin_popcount(unsigned(mask)) > 3) continue;  // keep runtime modest
            VertexSet w(n);
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) w.set(v);
            auto h = convex_hull(g, w);
            CHECK(w.subset_of(h));
            CHECK(is_convex(g, h));
            CHECK(convex_hull(g, h) == h);
            VertexSet bigger = w;
            bigger.set((w.first() + 1) % n);
            CHECK(h.subset_of(convex_hull(g, bigger | w)));
        }
    }
}

TEST_CASE("hulls of every subset of every connected graph up to order 7 are convex") {
    for (const Graph& g : enumerate_connected_graphs_up_to(7)) {
        int n = g.vertex_count();
        for (int mask = 1; mask < (1 << n); ++mask) {
            VertexSet w(n);
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) w.set(v);
            auto h = convex_hull(g, w);
            CHECK(w.subset_of(h));
            CHECK(is_convex(g, h));
        }
    }
}

TEST_CASE("induced cycles") {
    CHECK(induced_cycles(complete(4), 4).empty());
    CHECK(induced_cycles(cycle(5), 5).size() == 1);

    Graph w5 = wheel(5);
    auto cs = induced_cycles(w5, 5);
    REQUIRE(cs.size() == oracle::induced_cycle_sets(w5, 5).size());
    REQUIRE(cs.size() == 1);
    CHECK(std::set<int>(cs[0].begin(), cs[0].end()) == std::set<int>{0, 1, 2, 3, 4});

    // oracle cross-check for several lengths
    for (const Graph& g : {cycle(6), wheel(6), octahedron(), extended_five_wheel()}) {
        for (int k = 3; k <= 6; ++k) {
            auto got = induced_cycles(g, k);
            std::set<std::set<int>> sets;
            for (auto& c : got) {
                CHECK(int(c.size()) == k);
                for (int i = 0; i < k; ++i) {
                    CHECK(g.adjacent(c[i], c[(i + 1) % k]));
                }
                sets.insert(std::set<int>(c.begin(), c.end()));
            }
            CHECK(sets.size() == got.size());  // no duplicates
            CHECK(sets == oracle::induced_cycle_sets(g, k));
        }
    }
    CHECK_THROWS(induced_cycles(cycle(5), 2));
}

TEST_CASE("isometric cycles") {
    Graph c5 = cycle(5);
    auto cyc = induced_cycles(c5, 5)[0];
    CHECK(is_isometric_cycle(c5, cyc));

    // W6's rim is induced but not isometric (shortcut through the hub)
    Graph w6 = wheel(6);
    auto rims = induced_cycles(w6, 6);
    REQUIRE(rims.size() == 1);
    CHECK_FALSE(is_isometric_cycle(w6, rims[0]));
    CHECK_FALSE(find_isometric_cycle_gt3(w6).has_value());

    CHECK(find_isometric_cycle_gt3(c5).has_value());
    CHECK(find_isometric_cycle_gt3(cycle(4)).has_value());
    CHECK_FALSE(find_isometric_cycle_gt3(complete(5)).has_value());
}

TEST_CASE("diameter and radius") {
    CHECK(complete(1).diameter() == 0);
    CHECK(complete(1).radius() == 0);
    CHECK(cycle(5).diameter() == 2);
    CHECK(cycle(5).radius() == 2);
    CHECK(wheel(5).diameter() == 2);
    CHECK(wheel(5).radius() == 1);
}

TEST_CASE("induced subgraph and isometry") {
    Graph w5 = wheel(5);
    auto sub = induced_subgraph(w5, std::vector<int>{0, 1, 5});
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 3);
    CHECK(is_isometric(w5, sub));

    // W5's rim stays isometric (all rim distances are <= 2 anyway) while
    // W6's rim does not: opposite rim vertices shortcut through the hub.
    auto rim5 = induced_subgraph(w5, std::vector<int>{0, 1, 2, 3, 4});
    CHECK(is_isometric(w5, rim5));
    Graph w6 = wheel(6);
    auto rim6 = induced_subgraph(w6, std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK_FALSE(is_isometric(w6, rim6));

    CHECK_THROWS(induced_subgraph(w5, std::vector<int>{0, 0}));
}

TEST_CASE("vertex set basics") {
    VertexSet s(70);
    s.set(0);
    s.set(69);
    CHECK(s.count() == 2);
    CHECK(s.test(69));
    s.reset(69);
    CHECK_FALSE(s.test(69));
    CHECK(s.first() == 0);
    CHECK(VertexSet(5).first() == -1);
    CHECK(VertexSet::of(6, {1, 3}).subset_of(VertexSet::of(6, {1, 2, 3})));
    CHECK_THROWS(s.set(70));
    CHECK((VertexSet::of(4, {0, 1}) | VertexSet::of(4, {1, 2})).to_vector() == std::vector<int>{0, 1, 2});
    CHECK((VertexSet::of(4, {0, 1}) & VertexSet::of(4, {1, 2})).to_vector() == std::vector<int>{1});
    CHECK((VertexSet::of(4, {0, 1}) - VertexSet::of(4, {1, 2})).to_vector() == std::vector<int>{0});
}
