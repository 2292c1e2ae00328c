#pragma once

#include <vector>

#include "wsc/graph.hpp"

namespace wsc {

bool are_isomorphic(const Graph& a, const Graph& b);

/// All connected graphs on exactly n vertices, one per isomorphism class,
/// generated by vertex addition from the (n-1)-vertex classes. Feasible up
/// to n = 8 (11117 classes).
std::vector<Graph> enumerate_connected_graphs(int n);

/// Classes for every order 1..max_n, concatenated.
std::vector<Graph> enumerate_connected_graphs_up_to(int max_n);

}  // namespace wsc
