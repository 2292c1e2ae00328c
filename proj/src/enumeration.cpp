#include "wsc/enumeration.hpp"

#include <algorithm>
#include <map>

namespace wsc {

namespace {

// per-vertex invariant: degree, sorted neighbor degrees, sorted distance row
std::vector<std::vector<int>> vertex_profiles(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> prof(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int>& p = prof[v];
        p.push_back(g.degree(v));
        std::vector<int> nd;
        for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        p.insert(p.end(), nd.begin(), nd.end());
        std::vector<int> dr;
        for (int u = 0; u < n; ++u) dr.push_back(g.distance(v, u));
        std::sort(dr.begin(), dr.end());
        p.insert(p.end(), dr.begin(), dr.end());
    }
    return prof;
}

std::vector<int> graph_invariant(const Graph& g) {
    auto prof = vertex_profiles(g);
    std::sort(prof.begin(), prof.end());
    std::vector<int> flat{g.vertex_count(), g.edge_count()};
    for (const auto& p : prof) {
        flat.insert(flat.end(), p.begin(), p.end());
        flat.push_back(-1);
    }
    return flat;
}

bool extend_isomorphism(const Graph& a, const Graph& b, const std::vector<std::vector<int>>& pa,
                        const std::vector<std::vector<int>>& pb, std::vector<int>& image,
                        std::vector<bool>& used, int depth) {
    int n = a.vertex_count();
    if (depth == n) return true;
    for (int t = 0; t < n; ++t) {
        if (used[t] || pa[depth] != pb[t]) continue;
        bool ok = true;
        for (int prev = 0; prev < depth && ok; ++prev)
            ok = a.distance(depth, prev) == b.distance(t, image[prev]);
        if (!ok) continue;
        image[depth] = t;
        used[t] = true;
        if (extend_isomorphism(a, b, pa, pb, image, used, depth + 1)) return true;
        used[t] = false;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto pa = vertex_profiles(a);
    auto pb = vertex_profiles(b);
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> image(a.vertex_count(), -1);
    std::vector<bool> used(a.vertex_count(), false);
    return extend_isomorphism(a, b, pa, pb, image, used, 0);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_connected_graphs: need n >= 1");
    std::vector<Graph> level{Graph(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::vector<Graph> next;
        std::map<std::vector<int>, std::vector<std::size_t>> buckets;
        for (const Graph& parent : level) {
            for (long mask = 1; mask < (1L << (size - 1)); ++mask) {
                std::vector<Edge> edges = parent.edges();
                for (int v = 0; v < size - 1; ++v)
                    if (mask >> v & 1) edges.emplace_back(v, size - 1);
                Graph candidate(size, edges);
                auto inv = graph_invariant(candidate);
                auto& bucket = buckets[inv];
                bool known = false;
                for (std::size_t idx : bucket)
                    if (are_isomorphic(candidate, next[idx])) {
                        known = true;
                        break;
                    }
                if (!known) {
                    bucket.push_back(next.size());
                    next.push_back(std::move(candidate));
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> enumerate_connected_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto level = enumerate_connected_graphs(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace wsc
