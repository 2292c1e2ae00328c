#include "wsc/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace wsc {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.set(v);
    return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
}

VertexSet VertexSet::from(int universe, const std::vector<int>& vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
}

void VertexSet::check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
}

bool VertexSet::test(int v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1u;
}

void VertexSet::set(int v) {
    check(v);
    words_[v >> 6] |= std::uint64_t(1) << (v & 63);
}

void VertexSet::reset(int v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

int VertexSet::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
    return -1;
}

bool VertexSet::subset_of(const VertexSet& other) const {
    if (n_ != other.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    if (n_ != other.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    if (n_ != other.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    if (n_ != other.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    if (n_ != other.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::operator==(const VertexSet& other) const {
    return n_ == other.n_ && words_ == other.words_;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(int(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool sep = false;
    for (int v : to_vector()) {
        if (sep) os << ',';
        os << v;
        sep = true;
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n, const std::vector<Edge>& edges, bool require_connected) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (n == 0 && require_connected) throw std::invalid_argument("Graph: empty graph is not connected");
    adj_.assign(n, VertexSet(n));
    nbrs_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
        if (adj_[u].test(v)) throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }
    for (int v = 0; v < n; ++v) nbrs_[v] = adj_[v].to_vector();

    dist_.assign(std::size_t(n) * n, -1);
    for (int s = 0; s < n; ++s) {
        int* d = dist_.data() + std::size_t(s) * n;
        d[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : nbrs_[u]) {
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    connected_ = n > 0;
    for (int v = 0; v < n && connected_; ++v)
        if (dist_[v] < 0) connected_ = false;
    if (require_connected && !connected_) throw std::invalid_argument("Graph: input graph is disconnected");
}

void Graph::check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: invalid vertex id " + std::to_string(v));
}

bool Graph::adjacent(int u, int v) const {
    check(u);
    return adj_[u].test(v);
}

int Graph::degree(int v) const {
    check(v);
    return int(nbrs_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check(v);
    return nbrs_[v];
}

const VertexSet& Graph::neighbor_set(int v) const {
    check(v);
    return adj_[v];
}

VertexSet Graph::closed_neighborhood(int v) const {
    check(v);
    VertexSet s = adj_[v];
    s.set(v);
    return s;
}

int Graph::eccentricity(int v) const {
    check(v);
    int e = 0;
    for (int u = 0; u < n_; ++u) {
        int d = dist_[std::size_t(v) * n_ + u];
        if (d < 0) throw std::logic_error("Graph: eccentricity on a disconnected graph");
        e = std::max(e, d);
    }
    return e;
}

int Graph::diameter() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, eccentricity(v));
    return d;
}

int Graph::radius() const {
    if (n_ == 0) throw std::logic_error("Graph: radius of empty graph");
    int r = eccentricity(0);
    for (int v = 1; v < n_; ++v) r = std::min(r, eccentricity(v));
    return r;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : nbrs_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

// ---------------------------------------------------------------------------
// Metric operations

VertexSet interval(const Graph& g, int u, int v) {
    g.check(u);
    g.check(v);
    int n = g.vertex_count();
    int duv = g.distance(u, v);
    if (duv < 0) throw std::logic_error("interval: vertices in different components");
    VertexSet out(n);
    for (int x = 0; x < n; ++x)
        if (g.distance(u, x) + g.distance(x, v) == duv) out.set(x);
    return out;
}

VertexSet ball(const Graph& g, const VertexSet& center, int r) {
    if (center.universe() != g.vertex_count()) throw std::invalid_argument("ball: universe mismatch");
    if (center.empty()) throw std::invalid_argument("ball: empty center set");
    if (r < 0) throw std::invalid_argument("ball: negative radius");
    int n = g.vertex_count();
    VertexSet out(n);
    for (int x = 0; x < n; ++x)
        if (distance_to_set(g, center, x) <= r) out.set(x);
    return out;
}

VertexSet ball(const Graph& g, int center, int r) {
    VertexSet c(g.vertex_count());
    c.set(center);
    return ball(g, c, r);
}

VertexSet sphere(const Graph& g, const VertexSet& center, int r) {
    if (center.universe() != g.vertex_count()) throw std::invalid_argument("sphere: universe mismatch");
    if (center.empty()) throw std::invalid_argument("sphere: empty center set");
    if (r < 0) throw std::invalid_argument("sphere: negative radius");
    int n = g.vertex_count();
    VertexSet out(n);
    for (int x = 0; x < n; ++x)
        if (distance_to_set(g, center, x) == r) out.set(x);
    return out;
}

VertexSet sphere(const Graph& g, int center, int r) {
    VertexSet c(g.vertex_count());
    c.set(center);
    return sphere(g, c, r);
}

int distance_to_set(const Graph& g, const VertexSet& s, int v) {
    g.check(v);
    int best = -1;
    for (int c : s.to_vector()) {
        int d = g.distance(c, v);
        if (d >= 0 && (best < 0 || d < best)) best = d;
    }
    if (best < 0) throw std::logic_error("distance_to_set: unreachable set");
    return best;
}

bool is_convex(const Graph& g, const VertexSet& s) {
    std::vector<int> members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!interval(g, members[i], members[j]).subset_of(s)) return false;
    return true;
}

VertexSet convex_hull(const Graph& g, const VertexSet& w) {
    if (w.empty()) throw std::invalid_argument("convex_hull: empty set");
    VertexSet cur = w;
    for (;;) {
        VertexSet next = cur;
        std::vector<int> members = cur.to_vector();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                next |= interval(g, members[i], members[j]);
        if (next == cur) return cur;
        cur = next;
    }
}

// ---------------------------------------------------------------------------
// Induced cycles

namespace {

// Depth-first extension of a chordless path anchored at its minimum vertex.
// path[0] is the smallest vertex of the cycle; the orientation with
// path[1] < path.back() is the canonical representative.
void extend_cycle(const Graph& g, int len, std::vector<int>& path, VertexSet& used,
                  std::vector<std::vector<int>>& out) {
    int s = path[0];
    int last = path.back();
    if (int(path.size()) == len) {
        if (g.adjacent(last, s) && path[1] < last) out.push_back(path);
        return;
    }
    bool closing = int(path.size()) == len - 1;
    for (int x : g.neighbors(last)) {
        if (x <= s || used.test(x)) continue;
        if (closing && !g.adjacent(x, s)) continue;
        bool chord = false;
        // no chord to any earlier path vertex; the anchor is allowed (and
        // required) only for the final vertex
        for (std::size_t i = closing ? 1 : 0; i + 1 < path.size(); ++i) {
            if (g.adjacent(x, path[i])) {
                chord = true;
                break;
            }
        }
        if (chord) continue;
        path.push_back(x);
        used.set(x);
        extend_cycle(g, len, path, used, out);
        used.reset(x);
        path.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> induced_cycles(const Graph& g, int len) {
    if (len < 3) throw std::invalid_argument("induced_cycles: length must be >= 3");
    std::vector<std::vector<int>> out;
    int n = g.vertex_count();
    std::vector<int> path;
    VertexSet used(n);
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        used.set(s);
        extend_cycle(g, len, path, used, out);
        used.reset(s);
    }
    return out;
}

bool is_isometric_cycle(const Graph& g, const std::vector<int>& cycle) {
    int k = int(cycle.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int along = std::min(j - i, k - (j - i));
            if (g.distance(cycle[i], cycle[j]) != along) return false;
        }
    return true;
}

std::optional<std::vector<int>> find_isometric_cycle_gt3(const Graph& g, int cap) {
    int bound = std::min(cap, 2 * g.diameter() + 1);
    for (int len = 4; len <= bound; ++len)
        for (const auto& c : induced_cycles(g, len))
            if (is_isometric_cycle(g, c)) return c;
    return std::nullopt;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    std::vector<int> vs = s.to_vector();
    return is_clique(g, vs);
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Induced subgraphs

InducedGraph induced_subgraph(const Graph& g, const std::vector<int>& verts, bool require_connected) {
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != verts.size()) throw std::invalid_argument("induced_subgraph: duplicate vertices");
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        g.check(sorted[i]);
        local[sorted[i]] = int(i);
    }
    std::vector<Edge> edges;
    for (int u : sorted)
        for (int v : g.neighbors(u))
            if (u < v && local[v] >= 0) edges.emplace_back(local[u], local[v]);
    return InducedGraph{Graph(int(sorted.size()), edges, require_connected), sorted};
}

InducedGraph induced_subgraph(const Graph& g, const VertexSet& verts, bool require_connected) {
    return induced_subgraph(g, verts.to_vector(), require_connected);
}

bool is_isometric(const Graph& g, const InducedGraph& sub) {
    int k = sub.graph.vertex_count();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (sub.graph.distance(i, j) != g.distance(sub.vertices[i], sub.vertices[j])) return false;
    return true;
}

}  // namespace wsc
