#include "wsc/orderings.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace wsc {

std::vector<int> TraversalRecord::label_closer(const Graph& g, int v) const {
    std::vector<int> out;
    int d = g.distance(root, v);
    for (int u : label_history[v])
        if (g.distance(root, u) == d - 1) out.push_back(u);
    return out;
}

std::vector<int> TraversalRecord::label_same(const Graph& g, int v) const {
    std::vector<int> out;
    int d = g.distance(root, v);
    for (int u : label_history[v])
        if (g.distance(root, u) == d) out.push_back(u);
    return out;
}

std::vector<int> TraversalRecord::elimination_order() const {
    return std::vector<int>(order.rbegin(), order.rend());
}

namespace {

TraversalRecord make_record(const Graph& g, int root) {
    int n = g.vertex_count();
    TraversalRecord rec;
    rec.root = root;
    rec.alpha.assign(n, 0);
    rec.father.assign(n, -1);
    rec.label_history.assign(n, {});
    rec.order.reserve(n);
    return rec;
}

}  // namespace

TraversalRecord lexbfs(const Graph& g, int root, TieBreak tie, std::uint64_t seed) {
    g.check(root);
    if (!g.connected()) throw std::invalid_argument("lexbfs: graph must be connected");
    int n = g.vertex_count();
    TraversalRecord rec = make_record(g, root);
    std::mt19937_64 rng(seed);

    // labels[v]: numbers of already-numbered neighbors, kept decreasing
    std::vector<std::vector<int>> labels(n);
    std::vector<bool> numbered(n, false);

    for (int step = 0; step < n; ++step) {
        int next = -1;
        if (step == 0) {
            next = root;
        } else {
            std::vector<int> best;
            for (int v = 0; v < n; ++v) {
                if (numbered[v]) continue;
                if (best.empty() || labels[best.front()] < labels[v]) {
                    best.assign(1, v);
                } else if (labels[best.front()] == labels[v]) {
                    best.push_back(v);
                }
            }
            if (tie == TieBreak::lowest_id) {
                next = best.front();
            } else {
                next = best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(rng)];
            }
        }
        int number = n - step;
        numbered[next] = true;
        rec.alpha[next] = number;
        rec.order.push_back(next);
        for (int u : labels[next]) rec.label_history[next].push_back(rec.order[n - u]);
        if (!rec.label_history[next].empty()) rec.father[next] = rec.label_history[next].front();
        for (int w : g.neighbors(next))
            if (!numbered[w]) labels[w].push_back(number);
    }
    return rec;
}

TraversalRecord bfs(const Graph& g, int root, const std::vector<int>& priority) {
    g.check(root);
    if (!g.connected()) throw std::invalid_argument("bfs: graph must be connected");
    int n = g.vertex_count();
    std::vector<int> rank(n);
    if (priority.empty()) {
        for (int v = 0; v < n; ++v) rank[v] = v;
    } else {
        if (int(priority.size()) != n) throw std::invalid_argument("bfs: priority must permute the vertices");
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < priority.size(); ++i) {
            int v = priority[i];
            g.check(v);
            if (seen[v]) throw std::invalid_argument("bfs: priority must permute the vertices");
            seen[v] = true;
            rank[v] = int(i);
        }
    }

    TraversalRecord rec = make_record(g, root);
    std::vector<bool> queued(n, false);
    std::deque<int> queue{root};
    queued[root] = true;
    int number = n;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        rec.alpha[v] = number--;
        rec.order.push_back(v);
        std::vector<int> nbrs = g.neighbors(v);
        std::sort(nbrs.begin(), nbrs.end(), [&](int a, int b) { return rank[a] < rank[b]; });
        for (int w : nbrs) {
            if (!queued[w]) {
                queued[w] = true;
                rec.father[w] = v;
                queue.push_back(w);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        int v = rec.order[i];
        for (int j = 0; j < i; ++j)
            if (g.adjacent(v, rec.order[j])) rec.label_history[v].push_back(rec.order[j]);
    }
    return rec;
}

TraversalRecord bfs_seeded(const Graph& g, int root, std::uint64_t seed) {
    std::vector<int> priority(g.vertex_count());
    for (std::size_t i = 0; i < priority.size(); ++i) priority[i] = int(i);
    std::mt19937_64 rng(seed);
    std::shuffle(priority.begin(), priority.end(), rng);
    return bfs(g, root, priority);
}

DismantlingCheck verify_dismantling(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (int(order.size()) != n) throw std::invalid_argument("verify_dismantling: order must permute the vertices");
    VertexSet present = VertexSet::full(n);
    {
        std::vector<bool> seen(n, false);
        for (int v : order) {
            g.check(v);
            if (seen[v]) throw std::invalid_argument("verify_dismantling: order must permute the vertices");
            seen[v] = true;
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        int v = order[i];
        bool dominated = false;
        for (int j = i + 1; j < n && !dominated; ++j)
            dominated = dominates_within(g, order[j], v, present);
        if (!dominated) return {false, i};
        present.reset(v);
    }
    return {};
}

bool dominates_within(const Graph& g, int u, int v, const VertexSet& present) {
    VertexSet nv = g.closed_neighborhood(v) & present;
    VertexSet nu = g.closed_neighborhood(u);
    return nv.subset_of(nu);
}

std::optional<std::vector<int>> greedy_dismantling(const Graph& g) {
    int n = g.vertex_count();
    VertexSet present = VertexSet::full(n);
    std::vector<int> order;
    for (int remaining = n; remaining > 1; --remaining) {
        int victim = -1;
        for (int v = 0; v < n && victim < 0; ++v) {
            if (!present.test(v)) continue;
            for (int u : present.to_vector()) {
                if (u == v) continue;
                if (dominates_within(g, u, v, present)) {
                    victim = v;
                    break;
                }
            }
        }
        if (victim < 0) return std::nullopt;
        order.push_back(victim);
        present.reset(victim);
    }
    order.push_back(present.first());
    return order;
}

bool is_dismantlable(const Graph& g) { return greedy_dismantling(g).has_value(); }

FatherDominationCheck verify_father_domination(const Graph& g, const TraversalRecord& rec) {
    int n = g.vertex_count();
    for (int i = n - 1; i > 0; --i) {
        int v = rec.order[i];
        VertexSet suffix(n);
        for (int j = 0; j <= i; ++j) suffix.set(rec.order[j]);
        if (!dominates_within(g, rec.father[v], v, suffix)) return {false, v};
    }
    return {};
}

FellowTravelerCheck verify_fellow_traveler(const Graph& g, const TraversalRecord& rec) {
    for (auto [v, w] : g.edges()) {
        if (v == rec.root || w == rec.root) continue;
        if (rec.alpha[v] < rec.alpha[w]) std::swap(v, w);  // now alpha(w) < alpha(v)
        int fv = rec.father[v], fw = rec.father[w];
        if (fv == fw) continue;
        if (!g.adjacent(fv, fw)) return {false, v, w, FtpFailure::fathers_apart};
        if (fw != v && !g.adjacent(fw, v)) return {false, v, w, FtpFailure::later_father_detached};
        if (fv != w && g.adjacent(fv, w)) return {false, v, w, FtpFailure::earlier_father_attached};
    }
    return {};
}

Combing build_combing(const Graph& g, const TraversalRecord& rec) {
    int n = g.vertex_count();
    Combing c;
    c.root = rec.root;
    c.paths.assign(n, {});
    for (int i = 0; i < n; ++i) {
        int v = rec.order[i];  // fathers are numbered before their children
        if (v == rec.root) {
            c.paths[v] = {v};
        } else {
            c.paths[v] = c.paths[rec.father[v]];
            c.paths[v].push_back(v);
        }
        if (int(c.paths[v].size()) != g.distance(rec.root, v) + 1)
            throw std::logic_error("build_combing: traversal tree path is not a geodesic");
    }
    return c;
}

CombingCheck verify_combing(const Graph& g, const Combing& c) {
    for (auto [v, w] : g.edges()) {
        const auto& p = c.paths[v];
        const auto& q = c.paths[w];
        std::size_t steps = std::max(p.size(), q.size());
        for (std::size_t t = 0; t < steps; ++t) {
            int pv = p[std::min(t, p.size() - 1)];
            int qv = q[std::min(t, q.size() - 1)];
            if (g.distance(pv, qv) > 1) return {false, v, w, int(t)};
        }
    }
    return {};
}

InducedGraph prefix_subgraph(const Graph& g, const TraversalRecord& rec, int k) {
    if (k < 1 || k > g.vertex_count()) throw std::invalid_argument("prefix_subgraph: k out of range");
    std::vector<int> verts(rec.order.begin(), rec.order.begin() + k);
    return induced_subgraph(g, verts, true);
}

Graph graph_power(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("graph_power: k must be >= 1");
    int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.distance(u, v) >= 1 && g.distance(u, v) <= k) edges.emplace_back(u, v);
    return Graph(n, edges, g.connected());
}

}  // namespace wsc
