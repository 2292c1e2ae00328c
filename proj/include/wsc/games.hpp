#pragma once

#include <utility>
#include <vector>

#include "wsc/graph.hpp"

namespace wsc {

/// Positional strategy for the cop, indexed by (cop, robber) with the cop to
/// move; capture_bound is the worst-case number of cop moves from the best
/// starting vertex.
struct CopStrategy {
    int n = 0;
    std::vector<int> move;  // move[c*n + r]; -1 on states the cop cannot win
    int capture_bound = 0;
    int next(int c, int r) const { return move[c * n + r]; }
};

struct CopwinResult {
    bool copwin = false;
    int best_start = -1;
    CopStrategy strategy;
    /// (cop,robber) states with the cop to move from which the robber
    /// escapes forever; nonempty exactly when the graph is not cop-win.
    std::vector<std::pair<int, int>> safe_states;
    /// Value tables: cop moves to capture under optimal play, -1 = never.
    /// cop_value has the cop to move, robber_value the robber.
    std::vector<int> cop_value;
    std::vector<int> robber_value;
};

/// Backward-induction solution of the one-cop pursuit game. The cop picks a
/// start, then the robber; the cop moves first; moving onto the other player
/// at any moment is capture.
CopwinResult solve_copwin(const Graph& g);

/// Replays the strategy against the exactly escaping robber (the one that
/// maximizes the solver's value). Returns cop moves used, or -1 if the
/// robber survives capture_bound moves.
int replay_capture(const Graph& g, const CopwinResult& res, int cop_start, int robber_start);

/// Dismantlability (greedy fold order) against the game verdict.
bool crosscheck_dismantlable_copwin(const Graph& g);

bool is_graph_homomorphism(const Graph& g, const std::vector<int>& h);

/// A clique C with h(C) = C, for a homomorphism h of a dismantlable graph.
/// Iterating h stabilizes on a subgraph it permutes; any h-fixed clique is a
/// union of orbits of that permutation, so the first orbit spanning a clique
/// is returned. The result is re-verified before returning.
std::vector<int> fixed_clique_of_homomorphism(const Graph& g, const std::vector<int>& h);

}  // namespace wsc
