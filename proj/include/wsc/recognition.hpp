#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsc/graph.hpp"

namespace wsc {

enum class GraphClass { bridged, weakly_bridged_not_bridged, not_weakly_bridged };

enum class Condition { triangle, quadrangle, thin, no_c4, convex_balls, c5_in_w5, w5hat };

const char* to_string(GraphClass c);
const char* to_string(Condition c);

/// Outcome of a single metric condition scan. When the condition fails,
/// `witness` holds the lexicographically first violating vertex tuple; its
/// layout depends on the condition:
///   triangle      (u,v,w)        quadrangle (u,v,w,z)
///   thin          (u,v,x,y)      no_c4      cycle (a,b,c,d)
///   convex_balls  (v,r,a,b,z)    z in I(a,b) \ B_r(v)
///   c5_in_w5      the 5-cycle    w5hat      (x1..x5,c,a)
struct ConditionResult {
    bool holds = true;
    std::vector<int> witness;
};

struct RecognitionReport {
    GraphClass classification;
    std::map<Condition, ConditionResult> verdicts;
    // isometric cycle of length > 3 proving non-bridgedness, when one exists
    std::vector<int> long_isometric_cycle;

    bool weakly_bridged() const { return classification != GraphClass::not_weakly_bridged; }
    bool bridged() const { return classification == GraphClass::bridged; }
};

/// Raised when two characterizations that must agree disagree. This is a
/// correctness oracle for the scans themselves; it never fires on valid
/// builds.
struct CrosscheckError : std::logic_error {
    using std::logic_error::logic_error;
};

// Triangle condition (T): adjacent v,w equidistant from u admit a common
// neighbor one step closer to u.
ConditionResult check_triangle_condition(const Graph& g);

// Quadrangle condition (Q): v,w at distance 2 with a common neighbor z one
// step beyond them from u admit a common neighbor one step closer to u.
ConditionResult check_quadrangle_condition(const Graph& g);

// Thin: for nonadjacent u,v the neighbors of v inside I(u,v) are pairwise
// adjacent.
ConditionResult check_thin(const Graph& g);

ConditionResult check_no_induced_c4(const Graph& g);

// Every ball B_r(v), 1 <= r <= diameter, is convex.
ConditionResult check_convex_balls(const Graph& g);

// Every induced 5-cycle has a vertex adjacent to all five of its vertices.
ConditionResult check_c5_in_w5(const Graph& g);

// Every induced extended 5-wheel has a vertex adjacent to all seven of its
// vertices.
ConditionResult check_w5hat_condition(const Graph& g);

/// All induced extended 5-wheels, each as (x1..x5, hub, pendant); the
/// pendant is adjacent to x1, x2 and to nothing else in the wheel.
std::vector<std::vector<int>> extended_five_wheels(const Graph& g);

/// Classify and cross-validate: a graph is weakly bridged iff it is weakly
/// modular with no induced C4, and bridged iff additionally no isometric
/// cycle of length > 3 exists. The equivalent characterizations are all
/// computed and compared; disagreement throws CrosscheckError.
RecognitionReport classify(const Graph& g);

/// Re-evaluate a witness from scratch: true iff it still violates the
/// condition. Used to audit reported witnesses.
bool replay_witness(const Graph& g, Condition c, const std::vector<int>& witness);

}  // namespace wsc
