#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_support.hpp"
#include "wsc/orderings.hpp"
#include "wsc/recognition.hpp"

using namespace wsc;
using namespace testsupport;

namespace {

// Exhaustive dominated-vertex search, independent of the library's greedy
// routine: a dismantling order exists iff repeatedly deleting ANY dominated
// vertex succeeds (folding is confluent, checked here by full backtracking).
bool dismantlable_by_backtracking(const Graph& g, std::set<int> present) {
    if (present.size() == 1) return true;
    for (int v : present) {
        for (int u : present) {
            if (u == v) continue;
            bool dom = true;
            for (int x : present)
                if ((x == v || g.adjacent(v, x)) && !(x == u || g.adjacent(u, x))) dom = false;
            if (dom) {
                std::set<int> rest = present;
                rest.erase(v);
                return dismantlable_by_backtracking(g, rest);
            }
        }
    }
    return false;
}

bool dismantlable_oracle(const Graph& g) {
    std::set<int> all;
    for (int v = 0; v < g.vertex_count(); ++v) all.insert(v);
    return dismantlable_by_backtracking(g, all);
}

void check_record_shape(const Graph& g, const TraversalRecord& rec) {
    int n = g.vertex_count();
    REQUIRE(int(rec.order.size()) == n);
    std::set<int> seen(rec.order.begin(), rec.order.end());
    CHECK(int(seen.size()) == n);
    CHECK(rec.order[0] == rec.root);
    for (int i = 0; i < n; ++i) CHECK(rec.alpha[rec.order[i]] == n - i);
    for (int v = 0; v < n; ++v) {
        if (v == rec.root) {
            CHECK(rec.father[v] == -1);
            continue;
        }
        int f = rec.father[v];
        CHECK(g.adjacent(v, f));
        CHECK(rec.alpha[f] > rec.alpha[v]);
        CHECK(g.distance(rec.root, v) == g.distance(rec.root, f) + 1);
        // label history: earlier-numbered neighbors, decreasing numbers
        std::vector<int> expect;
        for (int i = 0; i < n - rec.alpha[v] + 1 - 1; ++i)
            if (g.adjacent(v, rec.order[i])) expect.push_back(rec.order[i]);
        CHECK(rec.label_history[v] == expect);
        CHECK(rec.label_history[v].front() == f);
    }
}

}  // namespace

TEST_CASE("lexbfs on forced orders") {
    Graph k3 = complete(3);
    auto rec = lexbfs(k3, 0);
    CHECK(rec.order == std::vector<int>{0, 1, 2});
    CHECK(rec.father[1] == 0);
    CHECK(rec.father[2] == 0);

    Graph p3 = path3();
    auto rp = lexbfs(p3, 0);
    CHECK(rp.order == std::vector<int>{0, 1, 2});
    CHECK(rp.father[1] == 0);
    CHECK(rp.father[2] == 1);
    check_record_shape(p3, rp);
}

TEST_CASE("lexbfs on the 5-wheel labels the hub third") {
    // rim 0..4 (x1..x5), hub 5 (c); starting at x1 and breaking the first
    // tie toward x2 forces c next, and c becomes the father of x4
    Graph w5 = wheel(5);
    auto rec = lexbfs(w5, 0);
    CHECK(rec.order == std::vector<int>{0, 1, 5, 4, 2, 3});
    CHECK(rec.father[3] == 5);
    check_record_shape(w5, rec);
}

TEST_CASE("lexbfs record shape on assorted graphs and roots") {
    for (const Graph& g : {cycle(6), wheel(6), octahedron(), star(5), extended_five_wheel()})
        for (int root = 0; root < g.vertex_count(); ++root) {
            check_record_shape(g, lexbfs(g, root));
            check_record_shape(g, lexbfs(g, root, TieBreak::seeded_random, 42));
            check_record_shape(g, bfs_seeded(g, root, 7));
        }
}

TEST_CASE("seeded tie-breaking is deterministic") {
    Graph w6 = wheel(6);
    auto a = lexbfs(w6, 2, TieBreak::seeded_random, 999);
    auto b = lexbfs(w6, 2, TieBreak::seeded_random, 999);
    CHECK(a.order == b.order);
}

TEST_CASE("bfs reproduces the 5-wheel counterexample run") {
    Graph w5 = wheel(5);
    auto rec = bfs(w5, 0);  // identity priority queues x2,x5,c then x3,x4
    CHECK(rec.order == std::vector<int>{0, 1, 4, 5, 2, 3});
    CHECK(rec.father[3] == 4);  // father of x4 is x5

    // x5 does not dominate x4 in the whole graph
    CHECK_FALSE(dominates_within(w5, 4, 3, VertexSet::full(6)));
    // the father-domination audit flags exactly that vertex
    auto dom = verify_father_domination(w5, rec);
    CHECK_FALSE(dom.ok);
    CHECK(dom.vertex == 3);

    // fellow traveler fails on the rim edge whose fathers are apart
    auto ftp = verify_fellow_traveler(w5, rec);
    CHECK_FALSE(ftp.ok);
    CHECK(ftp.reason == FtpFailure::fathers_apart);
    CHECK(std::set<int>{ftp.v, ftp.w} == std::set<int>{2, 3});

    // and yet the order is still a dismantling order
    CHECK(verify_dismantling(w5, rec.elimination_order()).ok);

    // while LexBFS from the same root dominates through fathers everywhere
    auto lex = lexbfs(w5, 0);
    CHECK(verify_father_domination(w5, lex).ok);
    CHECK(verify_fellow_traveler(w5, lex).ok);
}

TEST_CASE("verify_dismantling") {
    Graph k4 = complete(4);
    CHECK(verify_dismantling(k4, {2, 0, 3, 1}).ok);

    Graph c5 = cycle(5);
    std::vector<int> order{0, 1, 2, 3, 4};
    do {
        CHECK_FALSE(verify_dismantling(c5, order).ok);
    } while (std::next_permutation(order.begin(), order.end()));

    Graph w5 = wheel(5);
    for (int root = 0; root < 6; ++root) CHECK(verify_dismantling(w5, lexbfs(w5, root).elimination_order()).ok);

    CHECK_THROWS(verify_dismantling(k4, {0, 1, 2}));
    CHECK_THROWS(verify_dismantling(k4, {0, 1, 2, 2}));
}

TEST_CASE("greedy dismantling agrees with backtracking search") {
    for (const Graph& g : {path3(), complete(5), wheel(5), wheel(6), star(4), extended_five_wheel()}) {
        CHECK(is_dismantlable(g) == dismantlable_oracle(g));
        CHECK(is_dismantlable(g));
        auto order = greedy_dismantling(g);
        REQUIRE(order.has_value());
        CHECK(verify_dismantling(g, *order).ok);
    }
    for (const Graph& g : {cycle(4), cycle(5), cycle(6), octahedron(), complete_bipartite(2, 3)}) {
        CHECK(is_dismantlable(g) == dismantlable_oracle(g));
        CHECK_FALSE(is_dismantlable(g));
    }
}

TEST_CASE("fellow traveler property holds on LexBFS runs of weakly bridged graphs") {
    for (const Graph& g : {complete(4), wheel(5), wheel(6), star(6), path3()})
        for (int root = 0; root < g.vertex_count(); ++root) {
            CHECK(verify_fellow_traveler(g, lexbfs(g, root)).ok);
            CHECK(verify_father_domination(g, lexbfs(g, root)).ok);
        }
}

TEST_CASE("combing") {
    Graph s = star(6);
    auto comb = build_combing(s, lexbfs(s, 0));
    CHECK(verify_combing(s, comb).ok);

    Graph w5 = wheel(5);
    for (int root = 0; root < 6; ++root) CHECK(verify_combing(w5, build_combing(w5, lexbfs(w5, root))).ok);

    // C6 BFS tree: paths to the two antipodal-edge endpoints drift apart
    Graph c6 = cycle(6);
    auto rec = bfs(c6, 0);
    auto c = build_combing(c6, rec);
    CHECK(c.paths[3] == std::vector<int>{0, 1, 2, 3});
    auto chk = verify_combing(c6, c);
    CHECK_FALSE(chk.ok);
    CHECK(std::set<int>{chk.v, chk.w} == std::set<int>{3, 4});
}

TEST_CASE("prefix subgraphs") {
    Graph w5 = wheel(5);
    auto rec = lexbfs(w5, 0);
    auto full = prefix_subgraph(w5, rec, 6);
    CHECK(full.graph == w5);

    auto single = prefix_subgraph(w5, rec, 1);
    CHECK(single.graph.vertex_count() == 1);

    auto four = prefix_subgraph(w5, rec, 4);
    CHECK(four.vertices == std::vector<int>{0, 1, 4, 5});  // x1, x2, x5, c
    CHECK(is_isometric(w5, four));
    CHECK(classify(four.graph).weakly_bridged());

    for (int k = 1; k <= 6; ++k) {
        auto pre = prefix_subgraph(w5, rec, k);
        CHECK(is_isometric(w5, pre));
        CHECK(classify(pre.graph).weakly_bridged());
    }
    CHECK_THROWS(prefix_subgraph(w5, rec, 0));
    CHECK_THROWS(prefix_subgraph(w5, rec, 7));
}

TEST_CASE("graph power") {
    Graph c5 = cycle(5);
    CHECK(graph_power(c5, 1) == c5);
    Graph sq = graph_power(c5, 2);
    CHECK(sq == complete(5));
    CHECK(graph_power(cycle(6), 3) == complete(6));

    // a dismantling order of G dismantles G^k as well
    Graph w5 = wheel(5);
    auto order = lexbfs(w5, 0).elimination_order();
    CHECK(verify_dismantling(graph_power(w5, 2), order).ok);
}

TEST_CASE("label split views") {
    Graph w5 = wheel(5);
    auto rec = lexbfs(w5, 0);
    // x4 = 3 sits on sphere 2; its label splits into L' = {c, x5} (both on
    // sphere 1, since x5 touches the root) and L'' = {x3}
    auto closer = rec.label_closer(w5, 3);
    auto same = rec.label_same(w5, 3);
    CHECK(closer == std::vector<int>{5, 4});
    CHECK(same == std::vector<int>{2});
    for (int v = 0; v < 6; ++v) {
        if (v == rec.root) continue;
        auto l1 = rec.label_closer(w5, v);
        auto l2 = rec.label_same(w5, v);
        CHECK(l1.size() + l2.size() == rec.label_history[v].size());
        CHECK(std::find(l1.begin(), l1.end(), rec.father[v]) != l1.end());
    }
}
