#pragma once

#include <cstdint>
#include <vector>

#include "wsc/graph.hpp"
#include "wsc/recognition.hpp"

namespace wsc {

/// k-wheel: rim 0..k-1 in cycle order, hub k. Requires k >= 3.
Graph wheel_graph(int k);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

/// Triangulated hexagonal disk with the given number of rings around the
/// center vertex 0: the piece of the triangular lattice within lattice
/// distance `layers` of the origin. All interior vertices have degree 6;
/// layers = 1 gives the 6-wheel.
Graph systolic_disk(int layers);

/// Seed scrambler for deriving independent per-sample seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Erdos-Renyi G(n,p) conditioned on connectivity (rejection).
Graph random_connected_graph(int n, double p, std::uint64_t seed);

/// Random weakly bridged graph on exactly n vertices, grown by repeatedly
/// attaching a vertex dominated by an existing one (neighborhood sampled
/// inside a closed neighborhood with density p) and rejecting any step that
/// breaks the classification. Dominated growth never changes distances
/// between existing vertices, and pendant attachment always preserves the
/// class, so the growth cannot get stuck.
Graph random_weakly_bridged(int n, double p, std::uint64_t seed);

/// Like random_weakly_bridged but every step stays bridged.
Graph random_bridged(int n, double p, std::uint64_t seed);

/// Random connected graph of the exact requested classification.
/// bridged and weakly_bridged_not_bridged use filtered dominated growth
/// (the latter grows from a 5-wheel, whose isometric 5-cycle persists);
/// not_weakly_bridged uses plain G(n,p) rejection.
Graph random_filtered(int n, double p, GraphClass cls, std::uint64_t seed);

/// Deterministic pool of weakly bridged samples: curated wheels and disks
/// first, then filtered random growth with sizes in [min_n, max_n].
std::vector<Graph> weakly_bridged_pool(int count, int min_n, int max_n, std::uint64_t seed);

}  // namespace wsc
