#include "wsc/suites.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "wsc/complex.hpp"
#include "wsc/enumeration.hpp"
#include "wsc/games.hpp"
#include "wsc/generators.hpp"
#include "wsc/graph.hpp"
#include "wsc/orderings.hpp"
#include "wsc/recognition.hpp"
#include "wsc/symmetry.hpp"

namespace wsc {

namespace {

// pinned budgets
constexpr int kExhaustiveOrder = 7;         // all connected graphs up to here
constexpr int kRandomEquivSamples = 10000;  // extra random graphs on 8..12 vertices
constexpr int kDismantlePool = 1000;        // weakly bridged samples, n <= 30
constexpr int kPowerSamples = 200;
constexpr int kPrefixSamples = 200;
constexpr int kComplexPool = 100;           // samples small enough for full face enumeration
constexpr int kFixpointSamples = 20;
constexpr int kChainComplexCap = 12;        // vertex bound for the chain-intersection sweep
constexpr int kRoundnessOrder = 8;

void parallel_for(int jobs, int count, const std::function<void(int)>& body) {
    if (jobs <= 0) jobs = int(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> cursor{0};
    std::mutex error_mutex;
    std::string first_error;
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t)
        workers.emplace_back([&] {
            for (;;) {
                int i = cursor.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (first_error.empty()) first_error = e.what();
                }
            }
        });
    for (auto& w : workers) w.join();
    if (!first_error.empty()) throw std::runtime_error(first_error);
}

// failure sink: ordered, keeps the first message
struct Failures {
    std::mutex mutex;
    int count = 0;
    std::string first;
    void add(const std::string& msg) {
        std::lock_guard<std::mutex> lock(mutex);
        ++count;
        if (first.empty()) first = msg;
    }
    std::string summary(const std::string& ok_detail) const {
        if (count == 0) return ok_detail;
        return std::to_string(count) + " failures; first: " + first;
    }
};

const std::vector<Graph>& dismantle_pool(std::uint64_t seed) {
    static std::mutex mutex;
    static std::map<std::uint64_t, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(seed);
    if (it == cache.end()) it = cache.emplace(seed, weakly_bridged_pool(kDismantlePool, 6, 30, seed)).first;
    return it->second;
}

const std::vector<Graph>& complex_pool(std::uint64_t seed) {
    static std::mutex mutex;
    static std::map<std::uint64_t, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(seed);
    if (it == cache.end()) it = cache.emplace(seed, weakly_bridged_pool(kComplexPool, 6, 14, mix_seed(seed, 0xC011EC7))).first;
    return it->second;
}

std::vector<Graph> exhaustive_graphs(int max_n) { return enumerate_connected_graphs_up_to(max_n); }

// ---------------------------------------------------------------------------
// criterion 1

SuiteResult suite_equivalences(const SuiteOptions& opts) {
    Failures fail;
    auto small = exhaustive_graphs(kExhaustiveOrder);

    auto check_graph = [&](const Graph& g, const std::string& tag, bool with_descent) {
        try {
            auto rep = classify(g);
            const auto& v = rep.verdicts;
            bool wm = v.at(Condition::triangle).holds && v.at(Condition::quadrangle).holds;
            bool iii = wm && v.at(Condition::thin).holds;
            bool iv = wm && v.at(Condition::no_c4).holds;
            bool vv = wm && v.at(Condition::convex_balls).holds;
            if (iii != iv || iv != vv) {
                fail.add(tag + ": characterizations disagree");
                return;
            }
            if (iv != rep.weakly_bridged()) fail.add(tag + ": classification contradicts (iv)");
            if (with_descent) {
                // the defining property itself: descent on balls at every vertex
                FlagComplex x(g);
                bool descent = true;
                for (int w = 0; w < g.vertex_count() && descent; ++w)
                    descent = check_sdn(x, Simplex::single(w), SdnMode::all_simplices).ok;
                if (descent != rep.weakly_bridged()) fail.add(tag + ": vertex descent contradicts the classification");
            }
            if (rep.weakly_bridged()) {
                if (!v.at(Condition::c5_in_w5).holds) fail.add(tag + ": weakly bridged but some C5 has no hub");
                if (!v.at(Condition::w5hat).holds) fail.add(tag + ": weakly bridged but an extended 5-wheel sticks out");
                if (!v.at(Condition::no_c4).holds) fail.add(tag + ": weakly bridged with an induced C4");
            }
            for (const auto& [cond, res] : v)
                if (!res.holds && !replay_witness(g, cond, res.witness)) fail.add(tag + ": witness does not replay");
        } catch (const std::exception& e) {
            fail.add(tag + ": " + e.what());
        }
    };

    parallel_for(opts.jobs, int(small.size()),
                 [&](int i) { check_graph(small[i], "exhaustive #" + std::to_string(i), true); });
    parallel_for(opts.jobs, kRandomEquivSamples, [&](int i) {
        std::uint64_t s = mix_seed(opts.seed, 0xE0 + i);
        int n = 8 + int(s % 5);
        double p = 0.2 + 0.6 * double(mix_seed(s, 1) % 1000) / 1000.0;
        check_graph(random_connected_graph(n, p, mix_seed(s, 2)), "random #" + std::to_string(i), false);
    });

    return {"equivalences", fail.count == 0,
            fail.summary(std::to_string(small.size()) + " exhaustive + " + std::to_string(kRandomEquivSamples) +
                         " random graphs, all characterizations agree"),
            0.0};
}

// ---------------------------------------------------------------------------
// criterion 2

SuiteResult suite_lexbfs_dismantle(const SuiteOptions& opts) {
    Failures fail;
    const auto& pool = dismantle_pool(opts.seed);
    parallel_for(opts.jobs, int(pool.size()), [&](int i) {
        const Graph& g = pool[i];
        for (int root = 0; root < g.vertex_count(); ++root) {
            for (int rule = 0; rule < 2; ++rule) {
                auto rec = rule == 0 ? lexbfs(g, root)
                                     : lexbfs(g, root, TieBreak::seeded_random, mix_seed(opts.seed, i * 977 + root));
                std::string tag = "sample " + std::to_string(i) + " root " + std::to_string(root) + " rule " + std::to_string(rule);
                if (!verify_dismantling(g, rec.elimination_order()).ok) fail.add(tag + ": not a dismantling order");
                if (!verify_father_domination(g, rec).ok) fail.add(tag + ": father fails to dominate");
                if (!verify_fellow_traveler(g, rec).ok) fail.add(tag + ": fellow traveler violated");
            }
        }
    });
    return {"lexbfs_dismantle", fail.count == 0,
            fail.summary(std::to_string(pool.size()) + " weakly bridged samples, every root, both tie-break rules"),
            0.0};
}

// ---------------------------------------------------------------------------
// criterion 3

SuiteResult suite_bfs_counterexample(const SuiteOptions&) {
    Failures fail;
    Graph w5 = wheel_graph(5);  // rim 0..4 = x1..x5, hub 5 = c
    auto rec = bfs(w5, 0);      // identity priority enqueues x2, x5, c, then x3, x4
    if (rec.order != std::vector<int>{0, 1, 4, 5, 2, 3}) fail.add("queue order drifted");
    if (rec.father[3] != 4) fail.add("father of x4 is not x5");
    if (dominates_within(w5, 4, 3, VertexSet::full(6))) fail.add("x5 unexpectedly dominates x4");
    auto dom = verify_father_domination(w5, rec);
    if (dom.ok || dom.vertex != 3) fail.add("domination audit missed x4");
    if (!verify_dismantling(w5, rec.elimination_order()).ok) fail.add("BFS order is not a dismantling order");
    return {"bfs_counterexample", fail.count == 0,
            fail.summary("the 5-wheel BFS run reproduces father(x4)=x5, non-domination, and a valid dismantling order"),
            0.0};
}

// ---------------------------------------------------------------------------
// criterion 4

SuiteResult suite_copwin_crosscheck(const SuiteOptions& opts) {
    Failures fail;
    auto small = exhaustive_graphs(kExhaustiveOrder);
    parallel_for(opts.jobs, int(small.size()), [&](int i) {
        if (!crosscheck_dismantlable_copwin(small[i]))
            fail.add("exhaustive #" + std::to_string(i) + ": dismantlable and cop-win disagree");
    });

    const auto& pool = dismantle_pool(opts.seed);
    parallel_for(opts.jobs, int(pool.size()), [&](int i) {
        const Graph& g = pool[i];
        auto res = solve_copwin(g);
        std::string tag = "sample " + std::to_string(i);
        if (!res.copwin) {
            fail.add(tag + ": weakly bridged graph is not cop-win");
            return;
        }
        int n = g.vertex_count();
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) {
                if (c == r) continue;
                int steps = replay_capture(g, res, c, r);
                if (steps < 0 || steps > res.strategy.capture_bound) {
                    fail.add(tag + ": replay exceeded the capture bound");
                    return;
                }
            }
    });
    return {"copwin_crosscheck", fail.count == 0,
            fail.summary(std::to_string(small.size()) + " exhaustive graphs agree; " + std::to_string(pool.size()) +
                         " weakly bridged samples cop-win with verified strategies"),
            0.0};
}

// ---------------------------------------------------------------------------
// criterion 5

SuiteResult suite_rips_power(const SuiteOptions& opts) {
    Failures fail;
    const auto& pool = dismantle_pool(opts.seed);
    int count = std::min<int>(kPowerSamples, int(pool.size()));
    parallel_for(opts.jobs, count, [&](int i) {
        const Graph& g = pool[i];
        auto order = lexbfs(g, 0).elimination_order();
        for (int k = 2; k <= 3; ++k) {
            Graph power = graph_power(g, k);
            if (!verify_dismantling(power, order).ok)
                fail.add("sample " + std::to_string(i) + ": order fails on the power k=" + std::to_string(k));
        }
    });
    return {"rips_power", fail.count == 0,
            fail.summary(std::to_string(count) + " samples: LexBFS orders dismantle G^2 and G^3"), 0.0};
}

// ---------------------------------------------------------------------------
// criterion 6

SuiteResult suite_isometric_prefixes(const SuiteOptions& opts) {
    Failures fail;
    const auto& pool = dismantle_pool(opts.seed);
    int count = std::min<int>(kPrefixSamples, int(pool.size()));
    parallel_for(opts.jobs, count, [&](int i) {
        const Graph& g = pool[i];
        auto rec = lexbfs(g, 0);
        for (int k = 1; k <= g.vertex_count(); ++k) {
            auto prefix = prefix_subgraph(g, rec, k);
            std::string tag = "sample " + std::to_string(i) + " k=" + std::to_string(k);
            if (!is_isometric(g, prefix)) {
                fail.add(tag + ": prefix is not isometric");
                return;
            }
            if (!classify(prefix.graph).weakly_bridged()) {
                fail.add(tag + ": prefix is not weakly bridged");
                return;
            }
        }
    });
    return {"isometric_prefixes", fail.count == 0,
            fail.summary(std::to_string(count) + " samples: every LexBFS prefix isometric and weakly bridged"), 0.0};
}

// ---------------------------------------------------------------------------
// criterion 7

SuiteResult suite_combing(const SuiteOptions& opts) {
    Failures fail;
    const auto& pool = dismantle_pool(opts.seed);
    parallel_for(opts.jobs, int(pool.size()), [&](int i) {
        const Graph& g = pool[i];
        for (int root = 0; root < g.vertex_count(); ++root)
            for (int rule = 0; rule < 2; ++rule) {
                auto rec = rule == 0 ? lexbfs(g, root)
                                     : lexbfs(g, root, TieBreak::seeded_random, mix_seed(opts.seed, i * 331 + root));
                auto check = verify_combing(g, build_combing(g, rec));
                if (!check.ok) {
                    fail.add("sample " + std::to_string(i) + " root " + std::to_string(root) + ": combing drifts");
                    return;
                }
            }
    });
    return {"combing", fail.count == 0,
            fail.summary(std::to_string(pool.size()) + " samples: every LexBFS tree combs with gap 1"), 0.0};
}

// ---------------------------------------------------------------------------
// criterion 8

SuiteResult suite_sdn(const SuiteOptions& opts) {
    Failures fail;

    // the 5-wheel: descent holds around vertices and triangles, fails around
    // a rim edge with the pinned witness
    FlagComplex w5(wheel_graph(5));
    for (int v = 0; v < 6; ++v)
        if (!check_sdn(w5, Simplex::single(v), SdnMode::all_simplices).ok) fail.add("W5 vertex base failed");
    for (const auto& t : w5.simplices(2))
        if (!check_sdn(w5, t, SdnMode::all_simplices).ok) fail.add("W5 triangle base failed");
    auto pinned = check_sdn(w5, Simplex(std::vector<int>{0, 1}), SdnMode::all_simplices);
    if (pinned.ok) fail.add("W5 rim edge base unexpectedly passed");
    else if (pinned.witness.radius != 1 || pinned.witness.sigma != Simplex::single(3) ||
             pinned.witness.descent != std::vector<int>{2, 4, 5})
        fail.add("W5 rim edge witness drifted from the pinned fixture");

    // systolic inputs: descent around every simplex
    std::vector<Graph> systolic{wheel_graph(6), systolic_disk(1), systolic_disk(2), systolic_disk(3)};
    for (const Graph& g : systolic) {
        FlagComplex x(g);
        for (const auto& base : x.all_simplices())
            if (!check_sdn(x, base, SdnMode::all_simplices).ok) {
                fail.add("systolic input failed descent around a simplex");
                break;
            }
    }

    // weakly systolic samples: maximal bases, edge descent, big-ball convexity
    const auto& pool = complex_pool(opts.seed);
    parallel_for(opts.jobs, int(pool.size()), [&](int i) {
        FlagComplex x(pool[i]);
        std::string tag = "sample " + std::to_string(i);
        for (int v = 0; v < pool[i].vertex_count(); ++v)
            if (!check_sdn(x, Simplex::single(v), SdnMode::all_simplices).ok) {
                fail.add(tag + ": vertex descent failed");
                break;
            }
        if (!check_sdn_maximal(x).ok) fail.add(tag + ": maximal-simplex descent failed");
        for (const auto& s : x.all_simplices()) {
            if (!check_edge_descent(x, s).ok) {
                fail.add(tag + ": edge descent failed");
                break;
            }
            if (!check_big_ball_convex(x, s).ok) {
                fail.add(tag + ": a big ball is not convex");
                break;
            }
        }
    });

    return {"sdn", fail.count == 0,
            fail.summary("5-wheel fixture pinned; " + std::to_string(systolic.size()) + " systolic inputs and " +
                         std::to_string(pool.size()) + " samples pass all descent checks"),
            0.0};
}

// ---------------------------------------------------------------------------
// criterion 9

SuiteResult suite_ksets(const SuiteOptions& opts) {
    Failures fail;
    const auto& pool = complex_pool(opts.seed);

    parallel_for(opts.jobs, int(pool.size()), [&](int i) {
        const Graph& g = pool[i];
        FlagComplex x(g);
        std::string tag = "sample " + std::to_string(i);
        for (const auto& s : x.all_simplices()) {
            if (!check_k_descent(x, s).ok) {
                fail.add(tag + ": K-set ladder failed");
                return;
            }
        }
        // projections against the raw common-neighbor scan
        int n = g.vertex_count();
        int checked = 0;
        for (long mask = 1; mask < (1L << n) && checked < 2000; ++mask) {
            VertexSet y(n);
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) y.set(v);
            if (!is_convex(g, y)) continue;
            for (const auto& s : x.all_simplices()) {
                VertexSet sset = s.to_set(n);
                if (sset.intersects(y) || !sset.subset_of(ball(g, y, 1))) continue;
                VertexSet expect = y;
                for (int v : s.verts) expect &= g.neighbor_set(v);
                ++checked;
                try {
                    auto got = project_on_convex(x, s, y);
                    if (VertexSet::from(n, got.verts) != expect || !is_clique(g, got.verts)) {
                        fail.add(tag + ": projection disagrees with the common-neighbor scan");
                        return;
                    }
                } catch (const std::exception& e) {
                    fail.add(tag + ": projection threw: " + std::string(e.what()));
                    return;
                }
            }
        }
    });

    // chain intersection on small complexes
    std::vector<Graph> chain_graphs{wheel_graph(5), wheel_graph(6), systolic_disk(1)};
    for (const Graph& g : pool)
        if (g.vertex_count() <= kChainComplexCap && int(chain_graphs.size()) < 10) chain_graphs.push_back(g);

    std::atomic<long> chains_checked{0};
    parallel_for(opts.jobs, int(chain_graphs.size()), [&](int gi) {
        const Graph& g = chain_graphs[gi];
        int n = g.vertex_count();
        FlagComplex x(g);
        auto faces = x.all_simplices();
        std::string tag = "chain graph " + std::to_string(gi);
        for (long mask = 1; mask < (1L << n); ++mask) {
            VertexSet y(n);
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) y.set(v);
            if (!is_convex(g, y)) continue;
            VertexSet b1 = ball(g, y, 1);
            std::vector<const Simplex*> inside;
            for (const auto& s : faces)
                if (s.to_set(n).subset_of(b1)) inside.push_back(&s);
            // strictly increasing chains of length <= 4
            std::vector<const Simplex*> chain;
            std::function<void(std::size_t)> extend = [&](std::size_t from) {
                for (std::size_t j = from; j < inside.size(); ++j) {
                    if (!chain.empty() && !chain.back()->subset_of(*inside[j])) continue;
                    if (!chain.empty() && chain.back()->size() >= inside[j]->size()) continue;
                    chain.push_back(inside[j]);
                    VertexSet inter = VertexSet::full(n);
                    for (const Simplex* s : chain) inter &= expand_by_projection(x, *s, y).to_set(n);
                    inter &= y;
                    ++chains_checked;
                    if (inter.empty()) {
                        fail.add(tag + ": chain expansion misses the convex set");
                        chain.pop_back();
                        return;
                    }
                    if (chain.size() < 4) extend(j + 1);
                    chain.pop_back();
                }
            };
            extend(0);
        }
    });

    return {"ksets", fail.count == 0,
            fail.summary(std::to_string(pool.size()) + " samples: K-set ladder, projections, and " +
                         std::to_string(chains_checked.load()) + " expansion chains verified"),
            0.0};
}

// ---------------------------------------------------------------------------
// criterion 10

SuiteResult suite_fixpoint(const SuiteOptions& opts) {
    Failures fail;

    // (a) rotating 5-wheel pins the hub
    {
        Graph g = wheel_graph(5);
        FlagComplex x(g);
        auto rot = PermGroup::from_generators(g, {{1, 2, 3, 4, 0, 5}});
        auto cert = invariant_simplex(x, rot, 0);
        if (cert.simplex != Simplex::single(5)) fail.add("5-wheel rotation: simplex is not the hub");
        if (!verify_invariant_certificate(x, rot, cert)) fail.add("5-wheel rotation: certificate replay failed");
    }

    // (b) hexagonal disk with its full (dihedral) symmetry pins the center
    {
        Graph g = systolic_disk(2);
        FlagComplex x(g);
        auto grp = automorphisms(g);
        if (grp.order() != 12) fail.add("disk symmetry group is not dihedral of order 12");
        auto cert = invariant_simplex(x, grp, g.vertex_count() - 1);
        if (cert.simplex != Simplex::single(0)) fail.add("disk: invariant simplex is not the center");
        if (!verify_invariant_certificate(x, grp, cert)) fail.add("disk: certificate replay failed");
    }

    // (c) random weakly bridged graphs with their full automorphism groups
    std::atomic<int> done{0};
    parallel_for(opts.jobs, kFixpointSamples, [&](int i) {
        std::string tag = "fixpoint sample " + std::to_string(i);
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 50) {
                fail.add(tag + ": no sample with a materializable group");
                return;
            }
            std::uint64_t s = mix_seed(opts.seed, 0xF1C + i * 131 + attempt);
            int n = 6 + int(s % 7);
            Graph g = random_weakly_bridged(n, 0.3 + 0.4 * double(mix_seed(s, 3) % 1000) / 1000.0, mix_seed(s, 4));
            PermGroup grp = PermGroup::trivial(0);
            try {
                grp = automorphisms(g, 64, 50000);
            } catch (const std::invalid_argument&) {
                continue;  // group too large; resample
            }
            FlagComplex x(g);
            for (int seed_vertex : {0, g.vertex_count() / 2}) {
                auto cert = invariant_simplex(x, grp, seed_vertex);
                if (!verify_invariant_certificate(x, grp, cert)) {
                    fail.add(tag + ": certificate replay failed");
                    return;
                }
            }
            ++done;
            return;
        }
    });

    return {"fixpoint", fail.count == 0,
            fail.summary("5-wheel and disk pinned; " + std::to_string(done.load()) +
                         " random groups produced verified invariant simplices"),
            0.0};
}

// ---------------------------------------------------------------------------
// criterion 11

SuiteResult suite_roundness(const SuiteOptions& opts) {
    Failures fail;
    auto graphs = exhaustive_graphs(kRoundnessOrder);
    std::atomic<int> bridged_count{0}, round_count{0};
    parallel_for(opts.jobs, int(graphs.size()), [&](int i) {
        const Graph& g = graphs[i];
        if (!classify(g).bridged()) return;
        ++bridged_count;
        auto rep = roundness_audit(FlagComplex(g));
        if (!rep.farber_holds) fail.add("graph #" + std::to_string(i) + ": Farber inequality violated");
        if (rep.round) {
            ++round_count;
            if (rep.diameter > 2) fail.add("graph #" + std::to_string(i) + ": round with diameter > 2");
        }
    });
    return {"roundness", fail.count == 0,
            fail.summary(std::to_string(bridged_count.load()) + " bridged graphs within order " +
                         std::to_string(kRoundnessOrder) + ": Farber holds, all " +
                         std::to_string(round_count.load()) + " round ones have diameter <= 2"),
            0.0};
}

// ---------------------------------------------------------------------------
// experimental probe (no assertion): are BFS orders of weakly bridged graphs
// always domination orders?

SuiteResult suite_bfs_domination(const SuiteOptions& opts) {
    const auto& pool = dismantle_pool(opts.seed);
    int count = std::min<int>(200, int(pool.size()));
    std::atomic<long> orders{0}, domination{0};
    parallel_for(opts.jobs, count, [&](int i) {
        const Graph& g = pool[i];
        for (int trial = 0; trial < 5; ++trial) {
            auto rec = bfs_seeded(g, int(mix_seed(opts.seed, i) % g.vertex_count()),
                                  mix_seed(opts.seed, 0xB0 + i * 7 + trial));
            ++orders;
            if (verify_dismantling(g, rec.elimination_order()).ok) ++domination;
        }
    });
    std::ostringstream detail;
    detail << domination.load() << "/" << orders.load()
           << " random BFS orders were domination orders (observation only, nothing asserted)";
    return {"bfs_domination", true, detail.str(), 0.0};
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"equivalences", suite_equivalences},
        {"lexbfs_dismantle", suite_lexbfs_dismantle},
        {"bfs_counterexample", suite_bfs_counterexample},
        {"copwin_crosscheck", suite_copwin_crosscheck},
        {"rips_power", suite_rips_power},
        {"isometric_prefixes", suite_isometric_prefixes},
        {"combing", suite_combing},
        {"sdn", suite_sdn},
        {"ksets", suite_ksets},
        {"fixpoint", suite_fixpoint},
        {"roundness", suite_roundness},
        {"bfs_domination", suite_bfs_domination},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    for (const auto& [key, fn] : registry()) {
        if (key != name) continue;
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult result;
        try {
            result = fn(opts);
        } catch (const std::exception& e) {
            result = {name, false, std::string("aborted: ") + e.what(), 0.0};
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return result;
    }
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts) {
    std::vector<SuiteResult> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, opts));
    return out;
}

std::string suites_report_json(const std::vector<SuiteResult>& results, const SuiteOptions& opts) {
    nlohmann::json doc;
    doc["seed"] = opts.seed;
    doc["jobs"] = opts.jobs;
    doc["suites"] = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        doc["suites"].push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
        all = all && r.passed;
    }
    doc["passed"] = all;
    return doc.dump(2);
}

}  // namespace wsc
