#include "wsc/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace wsc {

Graph wheel_graph(int k) {
    if (k < 3) throw std::invalid_argument("wheel_graph: need k >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, (i + 1) % k);
        e.emplace_back(i, k);
    }
    return Graph(k + 1, e);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph systolic_disk(int layers) {
    if (layers < 0) throw std::invalid_argument("systolic_disk: negative layer count");
    // cube coordinates (x,y,z), x+y+z = 0, ring = max(|x|,|y|,|z|)
    struct Hex {
        int x, y;
        int ring() const { return std::max({std::abs(x), std::abs(y), std::abs(x + y)}); }
    };
    std::vector<Hex> cells;
    for (int x = -layers; x <= layers; ++x)
        for (int y = -layers; y <= layers; ++y)
            if (Hex{x, y}.ring() <= layers) cells.push_back({x, y});
    std::sort(cells.begin(), cells.end(), [](const Hex& a, const Hex& b) {
        if (a.ring() != b.ring()) return a.ring() < b.ring();
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    auto index_of = [&](int x, int y) -> int {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].x == x && cells[i].y == y) return int(i);
        return -1;
    };
    static constexpr int offsets[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
    std::vector<Edge> e;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (auto [dx, dy] : offsets) {
            int j = index_of(cells[i].x + dx, cells[i].y + dy);
            if (j > int(i)) e.emplace_back(int(i), j);
        }
    return Graph(int(cells.size()), e);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    // splitmix64 step
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: need n >= 1");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) e.emplace_back(u, v);
        Graph g(n, e, false);
        if (g.connected()) return Graph(n, e);
    }
    throw std::runtime_error("random_connected_graph: rejection budget exhausted");
}

namespace {

bool matches(const RecognitionReport& rep, GraphClass cls) { return rep.classification == cls; }

// Dominated growth: each new vertex lands inside the closed neighborhood of
// an existing vertex, so old distances never change. `keep` filters every
// intermediate graph; a pendant attachment always satisfies it for the
// classes used here, which makes the loop total.
template <typename Keep>
Graph grow_filtered(const Graph& start, int n, double p, std::uint64_t seed, Keep keep) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges = start.edges();
    int cur = start.vertex_count();
    Graph g = start;
    while (cur < n) {
        bool attached = false;
        for (int attempt = 0; attempt < 50 && !attached; ++attempt) {
            int u = std::uniform_int_distribution<int>(0, cur - 1)(rng);
            std::vector<Edge> trial = edges;
            trial.emplace_back(u, cur);
            for (int w : g.neighbors(u))
                if (coin(rng)) trial.emplace_back(w, cur);
            Graph candidate(cur + 1, trial);
            if (keep(candidate)) {
                g = std::move(candidate);
                edges = std::move(trial);
                attached = true;
            }
        }
        if (!attached) {
            // pendant fallback: preserves both classes used below
            int u = std::uniform_int_distribution<int>(0, cur - 1)(rng);
            edges.emplace_back(u, cur);
            g = Graph(cur + 1, edges);
            if (!keep(g)) throw std::logic_error("grow_filtered: pendant attachment left the class");
        }
        ++cur;
    }
    return g;
}

}  // namespace

Graph random_weakly_bridged(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_weakly_bridged: need n >= 1");
    return grow_filtered(complete_graph(1), n, p, seed,
                         [](const Graph& g) { return classify(g).weakly_bridged(); });
}

Graph random_bridged(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_bridged: need n >= 1");
    return grow_filtered(complete_graph(1), n, p, seed,
                         [](const Graph& g) { return classify(g).bridged(); });
}

Graph random_filtered(int n, double p, GraphClass cls, std::uint64_t seed) {
    switch (cls) {
        case GraphClass::bridged:
            return random_bridged(n, p, seed);
        case GraphClass::weakly_bridged_not_bridged: {
            if (n < 6) throw std::invalid_argument("random_filtered: the class needs at least 6 vertices");
            // the 5-wheel's isometric 5-cycle survives dominated growth
            Graph g = grow_filtered(wheel_graph(5), n, p, seed,
                                    [](const Graph& h) { return classify(h).weakly_bridged(); });
            if (!matches(classify(g), cls)) throw std::logic_error("random_filtered: grown graph left its class");
            return g;
        }
        case GraphClass::not_weakly_bridged: {
            if (n < 4) throw std::invalid_argument("random_filtered: every connected graph on < 4 vertices is bridged");
            for (int attempt = 0; attempt < 100000; ++attempt) {
                Graph g = random_connected_graph(n, p, mix_seed(seed, attempt));
                if (matches(classify(g), cls)) return g;
            }
            throw std::runtime_error("random_filtered: rejection budget exhausted");
        }
    }
    throw std::invalid_argument("random_filtered: unknown class");
}

std::vector<Graph> weakly_bridged_pool(int count, int min_n, int max_n, std::uint64_t seed) {
    if (count < 1 || min_n < 1 || max_n < min_n) throw std::invalid_argument("weakly_bridged_pool: bad budget");
    std::vector<Graph> pool;
    for (int k = 5; k <= 10 && int(pool.size()) < count; ++k)
        if (k + 1 <= max_n) pool.push_back(wheel_graph(k));
    for (int l = 1; l <= 2 && int(pool.size()) < count; ++l)
        if (1 + 3 * l * (l + 1) <= max_n) pool.push_back(systolic_disk(l));
    int idx = 0;
    while (int(pool.size()) < count) {
        std::uint64_t s = mix_seed(seed, idx);
        int n = min_n + int(s % std::uint64_t(max_n - min_n + 1));
        double p = 0.25 + 0.5 * double(mix_seed(s, 1) % 1000) / 1000.0;
        pool.push_back(random_weakly_bridged(n, p, mix_seed(s, 2)));
        ++idx;
    }
    return pool;
}

}  // namespace wsc
