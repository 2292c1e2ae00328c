#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "test_support.hpp"
#include "wsc/complex.hpp"
#include "wsc/orderings.hpp"
#include "wsc/recognition.hpp"

using namespace wsc;
using namespace testsupport;

namespace {

// Counts cliques by brute force over all vertex subsets.
int clique_count_oracle(const Graph& g, int size) {
    int n = g.vertex_count(), count = 0;
    for (long mask = 0; mask < (1L << n); ++mask) {
        if (__builtin_popcountl(mask) != size) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        if (is_clique(g, vs)) ++count;
    }
    return count;
}

// Descent-set check recomputed directly from BFS distances and subset scans.
bool sdn_oracle(const Graph& g, const std::vector<int>& base) {
    int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    for (int v = 0; v < n; ++v)
        for (int b : base) {
            auto d = oracle::bfs_distances(g, b);
            if (dist[v] < 0 || (d[v] >= 0 && d[v] < dist[v])) dist[v] = d[v];
        }
    for (long mask = 1; mask < (1L << n); ++mask) {
        std::vector<int> sigma;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) sigma.push_back(v);
        if (!is_clique(g, sigma)) continue;
        int d0 = dist[sigma[0]];
        if (d0 < 1) continue;
        bool in_sphere = true;
        for (int v : sigma) in_sphere = in_sphere && dist[v] == d0;
        if (!in_sphere) continue;
        std::vector<int> descent;
        for (int w = 0; w < n; ++w) {
            if (dist[w] > d0 - 1) continue;
            bool adj_all = true;
            for (int v : sigma) adj_all = adj_all && g.adjacent(w, v);
            if (adj_all) descent.push_back(w);
        }
        if (descent.empty() || !is_clique(g, descent)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("simplex type") {
    Simplex s(std::vector<int>{3, 1, 2});
    CHECK(s.verts == std::vector<int>{1, 2, 3});
    CHECK(s.dim() == 2);
    CHECK(s.contains(2));
    CHECK(Simplex(std::vector<int>{1, 2}).subset_of(s));
    CHECK_FALSE(s.subset_of(Simplex(std::vector<int>{1, 2})));
    CHECK_THROWS(Simplex(std::vector<int>{1, 1}));
}

TEST_CASE("flag complex enumeration") {
    FlagComplex w5(wheel(5));
    CHECK(w5.clique_number() == 3);
    CHECK(w5.dim_cap() == 2);
    CHECK(int(w5.simplices(0).size()) == 6);
    CHECK(int(w5.simplices(1).size()) == 10);
    CHECK(int(w5.simplices(2).size()) == 5);
    for (int d = 0; d <= 2; ++d)
        CHECK(int(w5.simplices(d).size()) == clique_count_oracle(wheel(5), d + 1));

    auto maximal = w5.maximal_simplices();
    CHECK(int(maximal.size()) == 5);  // one triangle per rim edge
    for (const auto& m : maximal) CHECK(m.size() == 3);

    // dim cap limits enumeration but not maximal-clique queries
    FlagComplex capped(complete(5), 1);
    CHECK(capped.simplices(2).empty());
    CHECK(int(capped.simplices(1).size()) == 10);
    CHECK(capped.maximal_simplices().size() == 1);
    CHECK(capped.clique_number() == 5);

    CHECK(w5.is_simplex(std::vector<int>{0, 1, 5}));
    CHECK_FALSE(w5.is_simplex(std::vector<int>{0, 2}));
    CHECK_FALSE(w5.is_simplex(std::vector<int>{}));
}

TEST_CASE("links") {
    FlagComplex w5(wheel(5));

    // link of the hub is the rim C5
    auto lk = link(w5, Simplex::single(5));
    CHECK(lk.vertex_count() == 5);
    CHECK(lk.carrier().edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(lk.carrier().degree(v) == 2);
    CHECK(lk.labels() == std::vector<int>{0, 1, 2, 3, 4});

    // link of a maximal simplex is empty
    auto empty = link(w5, Simplex(std::vector<int>{0, 1, 5}));
    CHECK(empty.vertex_count() == 0);
    CHECK_FALSE(is_cone(empty).cone);

    // octahedron: the link of any vertex is a 4-cycle
    FlagComplex oct(octahedron());
    for (int v = 0; v < 6; ++v) {
        auto l = link(oct, Simplex::single(v));
        CHECK(l.vertex_count() == 4);
        CHECK(l.carrier().edge_count() == 4);
        for (int u = 0; u < 4; ++u) CHECK(l.carrier().degree(u) == 2);
    }

    CHECK_THROWS(link(w5, Simplex(std::vector<int>{0, 2})));
}

TEST_CASE("cones") {
    CHECK(is_cone(FlagComplex(complete(4))).cone);
    CHECK_FALSE(is_cone(FlagComplex(cycle(5))).cone);
    auto w5 = is_cone(FlagComplex(wheel(5)));
    CHECK(w5.cone);
    CHECK(w5.apex == 5);
}

TEST_CASE("simple descent on balls around the 5-wheel") {
    FlagComplex x(wheel(5));

    // vertex bases pass in every mode
    for (int v = 0; v < 6; ++v) {
        CHECK(check_sdn(x, Simplex::single(v), SdnMode::all_simplices).ok);
        CHECK(sdn_oracle(x.carrier(), {v}));
    }
    // triangle bases pass
    for (const auto& t : x.simplices(2)) {
        CHECK(check_sdn(x, t, SdnMode::all_simplices).ok);
        CHECK(sdn_oracle(x.carrier(), t.verts));
    }
    // rim-edge bases fail; the first failure is pinned as a fixture:
    // base {0,1}, the opposite rim vertex 3 on the sphere of radius 2, and
    // descent set {2,4,5} which is not a clique
    auto bad = check_sdn(x, Simplex(std::vector<int>{0, 1}), SdnMode::all_simplices);
    REQUIRE_FALSE(bad.ok);
    CHECK(bad.witness.radius == 1);
    CHECK(bad.witness.sigma == Simplex::single(3));
    CHECK(bad.witness.descent == std::vector<int>{2, 4, 5});
    CHECK_FALSE(sdn_oracle(x.carrier(), {0, 1}));

    // the same failure surfaces already in vertex mode
    CHECK_FALSE(check_sdn(x, Simplex(std::vector<int>{0, 1}), SdnMode::vertex_condition).ok);

    // hub edges are fine
    for (int r = 0; r < 5; ++r) {
        CHECK(check_sdn(x, Simplex(std::vector<int>{r, 5}), SdnMode::all_simplices).ok);
        CHECK(sdn_oracle(x.carrier(), {r, 5}));
    }

    CHECK_THROWS(check_sdn(x, Simplex(std::vector<int>{0, 2}), SdnMode::all_simplices));
}

TEST_CASE("descent on complete graphs and the 6-wheel") {
    FlagComplex k5(complete(5));
    for (const auto& s : k5.all_simplices()) CHECK(check_sdn(k5, s, SdnMode::all_simplices).ok);

    // W6 is systolic: descent holds around every simplex
    FlagComplex w6(wheel(6));
    for (const auto& s : w6.all_simplices()) {
        CHECK(check_sdn(w6, s, SdnMode::all_simplices).ok);
        CHECK(sdn_oracle(w6.carrier(), s.verts));
    }
    CHECK(check_sdn_maximal(w6).ok);
    CHECK(check_sdn_maximal(FlagComplex(wheel(5))).ok);

    // the witness machinery also runs on graphs that fail much earlier
    FlagComplex c4(cycle(4));
    bool some_base_fails = false;
    for (const auto& s : c4.all_simplices())
        some_base_fails = some_base_fails || !check_sdn(c4, s, SdnMode::all_simplices).ok;
    CHECK(some_base_fails == !sdn_oracle(c4.carrier(), {0}));
}

TEST_CASE("edge descent") {
    FlagComplex k4(complete(4));
    for (const auto& s : k4.all_simplices()) CHECK(check_edge_descent(k4, s).ok);

    FlagComplex w6(wheel(6));
    for (const auto& s : w6.all_simplices()) CHECK(check_edge_descent(w6, s).ok);

    FlagComplex w5(wheel(5));
    for (const auto& s : w5.all_simplices()) CHECK(check_edge_descent(w5, s).ok);

    // the octahedron is not weakly systolic and the lemma breaks there:
    // around the edge {0,2}, the sphere edge (1,3) has its common neighbors
    // {4,5} all at distance 1, none at distance 0
    FlagComplex oct(octahedron());
    auto bad = check_edge_descent(oct, Simplex(std::vector<int>{0, 2}));
    CHECK_FALSE(bad.ok);
    CHECK(bad.radius == 1);
    CHECK(std::set<int>{bad.z, bad.zp} == std::set<int>{1, 3});
}

TEST_CASE("big balls around simplices are convex in weakly systolic carriers") {
    for (const Graph& g : {wheel(5), wheel(6), complete(5), star(5)}) {
        FlagComplex x(g);
        for (const auto& s : x.all_simplices()) CHECK(check_big_ball_convex(x, s).ok);
    }
    // radius 1 may genuinely fail around simplices: W5 rim edge {0,1} has
    // B_1 = {0,1,2,4,5} and interval(2,4) through 3 leaves it
    FlagComplex w5(wheel(5));
    auto b1 = ball(w5.carrier(), VertexSet::of(6, {0, 1}), 1);
    CHECK_FALSE(is_convex(w5.carrier(), b1));
}

TEST_CASE("K-sets") {
    FlagComplex w5(wheel(5));
    const Graph& g = w5.carrier();

    // rim edge at radius 1: both endpoints plus the hub
    auto k1 = k_set(w5, Simplex(std::vector<int>{0, 1}), 1);
    CHECK(k1.to_vector() == std::vector<int>{0, 1, 5});

    // radius >= diameter gives everything; radius 0 gives the simplex back
    CHECK(k_set(w5, Simplex(std::vector<int>{0, 1}), 2).count() == 6);
    CHECK(k_set(w5, Simplex(std::vector<int>{0, 1}), 0).to_vector() == std::vector<int>{0, 1});
    CHECK(k_set(w5, Simplex::single(2), 1) == ball(g, 2, 1));

    for (const Graph& h : {wheel(5), wheel(6), complete(4), star(4)}) {
        FlagComplex x(h);
        for (const auto& s : x.all_simplices()) CHECK(check_k_descent(x, s).ok);
    }
}

TEST_CASE("projection on convex sets") {
    FlagComplex w5(wheel(5));

    // projecting a rim edge onto the hub
    auto tau = project_on_convex(w5, Simplex(std::vector<int>{0, 1}), VertexSet::of(6, {5}));
    CHECK(tau.verts == std::vector<int>{5});

    // single target adjacent to everything in s
    auto tau2 = project_on_convex(w5, Simplex::single(2), VertexSet::of(6, {1, 5}));
    CHECK(tau2.verts == std::vector<int>{1, 5});

    // brute-force equality: tau is exactly the common-neighbor set inside y
    const Graph& g = w5.carrier();
    for (const auto& s : w5.all_simplices()) {
        for (long mask = 1; mask < (1 << 6); ++mask) {
            VertexSet y(6);
            for (int v = 0; v < 6; ++v)
                if (mask >> v & 1) y.set(v);
            VertexSet sset = s.to_set(6);
            if (sset.intersects(y) || !is_convex(g, y)) continue;
            if (!sset.subset_of(ball(g, y, 1))) continue;
            VertexSet expect = y;
            for (int v : s.verts) expect &= g.neighbor_set(v);
            auto got = project_on_convex(w5, s, y);
            CHECK(VertexSet::from(6, got.verts) == expect);
            CHECK(is_clique(g, got.verts));
        }
    }

    CHECK_THROWS(project_on_convex(w5, Simplex::single(0), VertexSet::of(6, {0, 5})));  // meets y
    CHECK_THROWS(project_on_convex(w5, Simplex(std::vector<int>{}), VertexSet::of(6, {5})));
}

TEST_CASE("expansion by projection") {
    FlagComplex w5(wheel(5));
    VertexSet y = VertexSet::of(6, {0, 1, 5});
    REQUIRE(is_convex(w5.carrier(), y));

    // inside y: unchanged
    CHECK(expand_by_projection(w5, Simplex(std::vector<int>{0, 1}), y) == Simplex(std::vector<int>{0, 1}));

    // a vertex one step out joins its projection
    auto e = expand_by_projection(w5, Simplex::single(2), y);
    CHECK(e.verts == std::vector<int>{1, 2, 5});

    // mixed simplex: {1,2} has boundary {2}, projection {1,5}
    auto m = expand_by_projection(w5, Simplex(std::vector<int>{1, 2}), y);
    CHECK(m.verts == std::vector<int>{1, 2, 5});

    // results always live in B_1(y) and contain the input
    for (const auto& s : w5.all_simplices()) {
        VertexSet sset = s.to_set(6);
        if (!sset.subset_of(ball(w5.carrier(), y, 1))) continue;
        auto ex = expand_by_projection(w5, s, y);
        CHECK(s.subset_of(ex));
        CHECK(ex.to_set(6).subset_of(ball(w5.carrier(), y, 1)));
    }
}

TEST_CASE("LC reduction") {
    // single simplex: reduces fully
    auto k4 = lc_reduce(FlagComplex(complete(4)));
    CHECK(k4.success);
    CHECK(k4.steps.size() == 3);

    // the 5-wheel reduces to a point
    auto w5 = lc_reduce(FlagComplex(wheel(5)));
    CHECK(w5.success);
    CHECK(w5.steps.size() == 5);

    // C5 is stuck immediately
    auto c5 = lc_reduce(FlagComplex(cycle(5)));
    CHECK_FALSE(c5.success);
    CHECK(c5.steps.empty());
    CHECK(c5.stuck.size() == 5);

    // LC-contractibility coincides with graph dismantlability
    for (const Graph& g : {path3(), complete(5), wheel(5), wheel(6), cycle(4), cycle(6), octahedron(),
                           complete_bipartite(2, 3), star(5), extended_five_wheel()})
        CHECK(lc_reduce(FlagComplex(g)).success == is_dismantlable(g));
}

TEST_CASE("the systolic/weakly-systolic split shows in all-simplex descent") {
    // bridged W6: descent holds around every base simplex
    FlagComplex w6(wheel(6));
    bool w6_all = true;
    for (const auto& s : w6.all_simplices()) w6_all = w6_all && check_sdn(w6, s, SdnMode::all_simplices).ok;
    CHECK(w6_all);

    // weakly bridged W5: some base fails (the rim edges), vertices all pass
    FlagComplex w5(wheel(5));
    bool w5_vertices = true, w5_all = true;
    for (int v = 0; v < 6; ++v) w5_vertices = w5_vertices && check_sdn(w5, Simplex::single(v), SdnMode::all_simplices).ok;
    for (const auto& s : w5.all_simplices()) w5_all = w5_all && check_sdn(w5, s, SdnMode::all_simplices).ok;
    CHECK(w5_vertices);
    CHECK_FALSE(w5_all);
}
