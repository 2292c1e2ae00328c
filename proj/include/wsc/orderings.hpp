#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wsc/graph.hpp"

namespace wsc {

enum class TieBreak { lowest_id, seeded_random };

/// Certificate of a BFS or LexBFS traversal. Vertices are numbered n..1 in
/// visit order: order[0] is the root and carries number n, so
/// alpha(order[i]) = n - i. label_history[v] records L(v), the neighbors of
/// v already numbered when v was numbered, in decreasing number order; the
/// father is its head.
struct TraversalRecord {
    int root = 0;
    std::vector<int> order;
    std::vector<int> alpha;
    std::vector<int> father;  // -1 for the root
    std::vector<std::vector<int>> label_history;

    int alpha_of(int v) const { return alpha[v]; }

    /// L'(v): the part of the label one sphere closer to the root.
    std::vector<int> label_closer(const Graph& g, int v) const;
    /// L''(v): the part of the label on v's own sphere.
    std::vector<int> label_same(const Graph& g, int v) const;

    /// Elimination order consuming the numbering: lowest numbers first, root
    /// last.
    std::vector<int> elimination_order() const;
};

/// Lexicographic breadth-first search from root. Labels are the lists of
/// already-assigned numbers in decreasing order, compared lexicographically;
/// ties go to the lowest vertex id or to a seeded uniform draw.
TraversalRecord lexbfs(const Graph& g, int root, TieBreak tie = TieBreak::lowest_id,
                       std::uint64_t seed = 0);

/// Plain BFS from root. When a vertex is dequeued its unvisited neighbors
/// are enqueued in `priority` order (a permutation of 0..n-1; identity when
/// empty), which pins down the queue discipline exactly.
TraversalRecord bfs(const Graph& g, int root, const std::vector<int>& priority = {});

/// BFS with a seeded random enqueue preference.
TraversalRecord bfs_seeded(const Graph& g, int root, std::uint64_t seed);

struct DismantlingCheck {
    bool ok = true;
    int failing_index = -1;  // position in the order with no dominating vertex left
};

/// Verifies a vertex elimination order: order[i] must be dominated, within
/// the suffix order[i..], by some later vertex.
DismantlingCheck verify_dismantling(const Graph& g, const std::vector<int>& order);

/// True iff u dominates v within the subgraph induced by `present`:
/// N1(v) /\ present is contained in N1(u).
bool dominates_within(const Graph& g, int u, int v, const VertexSet& present);

/// Greedy dismantling: repeatedly removes the lowest-id dominated vertex.
/// Returns the full elimination order, or nullopt when stuck before a single
/// vertex remains.
std::optional<std::vector<int>> greedy_dismantling(const Graph& g);

bool is_dismantlable(const Graph& g);

struct FatherDominationCheck {
    bool ok = true;
    int vertex = -1;  // first (in elimination order) vertex not dominated by its father
};

/// Checks that every non-root vertex is dominated by its father within the
/// suffix of vertices numbered no later than it.
FatherDominationCheck verify_father_domination(const Graph& g, const TraversalRecord& rec);

enum class FtpFailure {
    none,
    fathers_apart,          // fathers neither coincide nor adjacent
    later_father_detached,  // f(w) not adjacent to v although alpha(w) < alpha(v)
    earlier_father_attached // f(v) adjacent to w although alpha(w) < alpha(v)
};

struct FellowTravelerCheck {
    bool ok = true;
    int v = -1, w = -1;
    FtpFailure reason = FtpFailure::none;
};

/// Fellow traveler property over all edges vw (root excluded): fathers
/// coincide or are adjacent, and when distinct-but-adjacent with
/// alpha(w) < alpha(v), f(w) is adjacent to v while f(v) is not adjacent
/// to w.
FellowTravelerCheck verify_fellow_traveler(const Graph& g, const TraversalRecord& rec);

/// Root geodesics read off the traversal tree: paths[v] runs root..v and
/// extends paths[father(v)].
struct Combing {
    int root = 0;
    std::vector<std::vector<int>> paths;
};

Combing build_combing(const Graph& g, const TraversalRecord& rec);

struct CombingCheck {
    bool ok = true;
    int v = -1, w = -1, step = -1;
};

/// 1-fellow-traveling of combing paths: for every edge vw and every step t,
/// d(P(t),Q(t)) <= 1, the shorter path frozen at its endpoint.
CombingCheck verify_combing(const Graph& g, const Combing& c);

/// Subgraph induced by the k first-numbered vertices.
InducedGraph prefix_subgraph(const Graph& g, const TraversalRecord& rec, int k);

/// Graph power G^k: same vertices, adjacency at distance <= k.
Graph graph_power(const Graph& g, int k);

}  // namespace wsc
