#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wsc {

using Edge = std::pair<int, int>;

/// Set of vertex ids over a fixed universe 0..n-1, stored as a bitset.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);

    static VertexSet full(int universe);
    static VertexSet of(int universe, std::initializer_list<int> vs);
    static VertexSet from(int universe, const std::vector<int>& vs);

    int universe() const { return n_; }
    bool test(int v) const;
    void set(int v);
    void reset(int v);
    int count() const;
    bool any() const;
    bool empty() const { return !any(); }
    int first() const;  // lowest member, -1 when empty

    bool subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    bool operator==(const VertexSet& other) const;
    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    std::vector<int> to_vector() const;
    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
    void check(int v) const;
};

/// Finite simple undirected graph with the all-pairs distance matrix
/// precomputed at construction (repeated BFS).
///
/// Loops and duplicate edges are rejected. By default construction also
/// rejects disconnected input, since all metric operations assume a
/// connected graph; pass require_connected = false for structures that
/// only need adjacency (links, induced pieces).
class Graph {
public:
    Graph(int n, const std::vector<Edge>& edges, bool require_connected = true);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool connected() const { return connected_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    const VertexSet& neighbor_set(int v) const;
    VertexSet closed_neighborhood(int v) const;

    /// Hop distance; -1 between components of a disconnected graph.
    int distance(int u, int v) const { check(u); check(v); return dist_[u * n_ + v]; }
    int eccentricity(int v) const;
    int diameter() const;
    int radius() const;

    std::vector<Edge> edges() const;
    VertexSet all_vertices() const { return VertexSet::full(n_); }

    bool operator==(const Graph& other) const;

    void check(int v) const;

private:
    int n_ = 0;
    int m_ = 0;
    bool connected_ = false;
    std::vector<VertexSet> adj_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<int> dist_;
};

/// Interval I(u,v): vertices on shortest (u,v)-paths.
VertexSet interval(const Graph& g, int u, int v);

/// Ball of radius r around a set: vertices within distance r of some center.
VertexSet ball(const Graph& g, const VertexSet& center, int r);
VertexSet ball(const Graph& g, int center, int r);

/// Sphere: vertices at distance exactly r from the set.
VertexSet sphere(const Graph& g, const VertexSet& center, int r);
VertexSet sphere(const Graph& g, int center, int r);

int distance_to_set(const Graph& g, const VertexSet& s, int v);

/// True iff s contains the interval between each pair of its members.
bool is_convex(const Graph& g, const VertexSet& s);

/// Least convex superset: fixed point of closing under intervals.
VertexSet convex_hull(const Graph& g, const VertexSet& w);

/// All induced (chordless) cycles of length len, one representative per
/// rotation/reflection class, in cycle order starting at the minimum vertex.
std::vector<std::vector<int>> induced_cycles(const Graph& g, int len);

/// True iff the cycle's internal hop distances match the graph metric.
bool is_isometric_cycle(const Graph& g, const std::vector<int>& cycle);

/// Smallest isometric cycle of length > 3, scanning induced cycles of
/// length 4..cap (isometric cycles are always induced). nullopt when none.
std::optional<std::vector<int>> find_isometric_cycle_gt3(const Graph& g, int cap = 8);

/// Pairwise adjacency check (a clique in g). Empty and singleton sets pass.
bool is_clique(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const std::vector<int>& vs);

struct InducedGraph {
    Graph graph;               // vertices relabeled 0..k-1
    std::vector<int> vertices; // local id -> original id
};

InducedGraph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                              bool require_connected = false);
InducedGraph induced_subgraph(const Graph& g, const VertexSet& verts,
                              bool require_connected = false);

/// True iff distances inside sub.graph equal distances in g between the
/// corresponding original vertices.
bool is_isometric(const Graph& g, const InducedGraph& sub);

}  // namespace wsc
