#include "wsc/games.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "wsc/orderings.hpp"

namespace wsc {

namespace {
constexpr int kInf = std::numeric_limits<int>::max() / 4;
}

CopwinResult solve_copwin(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("solve_copwin: graph must be connected");
    int n = g.vertex_count();
    CopwinResult res;
    res.cop_value.assign(std::size_t(n) * n, kInf);
    res.robber_value.assign(std::size_t(n) * n, kInf);
    auto vc = [&](int c, int r) -> int& { return res.cop_value[c * n + r]; };
    auto vr = [&](int c, int r) -> int& { return res.robber_value[c * n + r]; };

    // Gauss-Seidel sweeps of the Bellman updates until nothing changes.
    // vc: cop to move, counts the cop's own moves; vr: robber to move.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) {
                if (c == r) continue;
                int best = kInf;
                if (g.adjacent(c, r)) best = 1;
                for (int c2 : g.neighbors(c))
                    if (c2 != r && vr(c2, r) < kInf) best = std::min(best, vr(c2, r) + 1);
                if (vr(c, r) < kInf) best = std::min(best, vr(c, r) + 1);  // cop stays
                if (best < vc(c, r)) {
                    vc(c, r) = best;
                    changed = true;
                }
                int worst = 0;
                for (int r2 : g.neighbors(r)) {
                    if (r2 == c) continue;  // suicide move, robber avoids it
                    worst = std::max(worst, vc(c, r2));
                    if (worst >= kInf) break;
                }
                worst = std::max(worst, vc(c, r));  // robber stays
                if (worst < vr(c, r)) {
                    vr(c, r) = worst;
                    changed = true;
                }
            }
    }

    // cop chooses the start minimizing the worst robber reply
    res.best_start = -1;
    int best_bound = kInf;
    int global_bound = 0;
    for (int c = 0; c < n; ++c) {
        int bound = 0;
        for (int r = 0; r < n; ++r)
            if (r != c) bound = std::max(bound, vc(c, r));
        if (bound < best_bound) {
            best_bound = bound;
            res.best_start = c;
        }
        global_bound = std::max(global_bound, bound);
    }
    res.copwin = best_bound < kInf;

    if (res.copwin) {
        res.strategy.n = n;
        // capture must succeed from every initial pair, not just the best start
        res.strategy.capture_bound = global_bound;
        res.strategy.move.assign(std::size_t(n) * n, -1);
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) {
                if (c == r || vc(c, r) >= kInf) continue;
                if (g.adjacent(c, r)) {
                    res.strategy.move[c * n + r] = r;
                    continue;
                }
                int pick = -1, val = kInf;
                auto consider = [&](int c2) {
                    if (c2 != r && vr(c2, r) < val) {
                        val = vr(c2, r);
                        pick = c2;
                    }
                };
                consider(c);
                for (int c2 : g.neighbors(c)) consider(c2);
                res.strategy.move[c * n + r] = pick;
            }
    } else {
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r)
                if (c != r && vc(c, r) >= kInf) res.safe_states.emplace_back(c, r);
    }
    for (auto& v : res.cop_value)
        if (v >= kInf) v = -1;
    for (auto& v : res.robber_value)
        if (v >= kInf) v = -1;
    return res;
}

int replay_capture(const Graph& g, const CopwinResult& res, int cop_start, int robber_start) {
    if (!res.copwin) throw std::invalid_argument("replay_capture: no strategy to replay");
    int n = g.vertex_count();
    int c = cop_start, r = robber_start;
    if (c == r) return 0;
    int moves = 0;
    while (moves <= res.strategy.capture_bound) {
        int c2 = res.strategy.next(c, r);
        if (c2 < 0) return -1;
        ++moves;
        c = c2;
        if (c == r) return moves;
        // robber maximizes the solver's value; staying put is allowed
        int pick = r;
        long best = res.cop_value[c * n + r] < 0 ? kInf : res.cop_value[c * n + r];
        for (int r2 : g.neighbors(r)) {
            if (r2 == c) continue;
            long v = res.cop_value[c * n + r2] < 0 ? kInf : res.cop_value[c * n + r2];
            if (v > best) {
                best = v;
                pick = r2;
            }
        }
        r = pick;
        if (c == r) return moves;
    }
    return -1;
}

bool crosscheck_dismantlable_copwin(const Graph& g) {
    return is_dismantlable(g) == solve_copwin(g).copwin;
}

bool is_graph_homomorphism(const Graph& g, const std::vector<int>& h) {
    if (int(h.size()) != g.vertex_count()) return false;
    for (int v : h)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (h[u] != h[v] && !g.adjacent(h[u], h[v])) return false;
    return true;
}

std::vector<int> fixed_clique_of_homomorphism(const Graph& g, const std::vector<int>& h) {
    if (!is_graph_homomorphism(g, h)) throw std::invalid_argument("fixed_clique_of_homomorphism: h is not a homomorphism");
    if (!is_dismantlable(g)) throw std::invalid_argument("fixed_clique_of_homomorphism: graph is not dismantlable");
    int n = g.vertex_count();

    // stabilize the image: h permutes S = Im(h^k) for large k, and any
    // h-fixed clique lives inside S
    std::vector<int> power(n);
    for (int v = 0; v < n; ++v) power[v] = v;
    VertexSet image = VertexSet::full(n);
    for (;;) {
        VertexSet next(n);
        for (int v = 0; v < n; ++v) {
            power[v] = h[power[v]];
            next.set(power[v]);
        }
        if (next == image) break;
        image = next;
    }

    // orbits of h restricted to the stabilized image; the first one spanning
    // a clique is h-invariant
    VertexSet seen(n);
    for (int v = 0; v < n; ++v) {
        if (!image.test(v) || seen.test(v)) continue;
        std::vector<int> orbit;
        int x = v;
        do {
            orbit.push_back(x);
            seen.set(x);
            x = h[x];
        } while (x != v);
        if (!is_clique(g, orbit)) continue;
        std::sort(orbit.begin(), orbit.end());
        // verify h(C) = C before handing it out
        VertexSet c = VertexSet::from(n, orbit);
        VertexSet mapped(n);
        for (int y : orbit) mapped.set(h[y]);
        if (mapped == c) return orbit;
    }
    throw std::logic_error("fixed_clique_of_homomorphism: no fixed clique found on a dismantlable graph");
}

}  // namespace wsc
