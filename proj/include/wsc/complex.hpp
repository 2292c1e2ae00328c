#pragma once

#include <optional>
#include <vector>

#include "wsc/graph.hpp"

namespace wsc {

/// Sorted vertex set; a face of a flag complex once validated against the
/// carrier (pairwise adjacency).
struct Simplex {
    std::vector<int> verts;

    Simplex() = default;
    explicit Simplex(std::vector<int> vs);
    static Simplex single(int v) { return Simplex(std::vector<int>{v}); }

    int size() const { return int(verts.size()); }
    int dim() const { return int(verts.size()) - 1; }
    bool empty() const { return verts.empty(); }
    bool contains(int v) const;
    bool subset_of(const Simplex& other) const;
    VertexSet to_set(int universe) const { return VertexSet::from(universe, verts); }

    bool operator==(const Simplex& other) const { return verts == other.verts; }
    bool operator!=(const Simplex& other) const { return verts != other.verts; }
    bool operator<(const Simplex& other) const { return verts < other.verts; }
};

/// Clique complex of a graph, with faces enumerated up to dim_cap
/// (defaulting to the clique number, i.e. everything). The carrier graph is
/// stored by value; `labels` carries original vertex ids when the complex
/// was cut out of a larger one.
class FlagComplex {
public:
    explicit FlagComplex(Graph carrier, int dim_cap = -1);
    FlagComplex(Graph carrier, std::vector<int> labels, int dim_cap);

    const Graph& carrier() const { return carrier_; }
    int vertex_count() const { return carrier_.vertex_count(); }
    int dim_cap() const { return dim_cap_; }
    const std::vector<int>& labels() const { return labels_; }

    bool is_simplex(const std::vector<int>& vs) const;
    bool is_simplex(const Simplex& s) const { return is_simplex(s.verts); }

    /// All faces of the given dimension (cliques on dim+1 vertices).
    const std::vector<Simplex>& simplices(int dim) const;
    /// Faces of every enumerated dimension, vertices first.
    std::vector<Simplex> all_simplices() const;
    /// Inclusion-maximal cliques of the carrier, regardless of dim_cap.
    std::vector<Simplex> maximal_simplices() const;
    int clique_number() const { return clique_number_; }

private:
    Graph carrier_;
    std::vector<int> labels_;
    int dim_cap_ = -1;
    int clique_number_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
};

/// Link of a simplex: the flag complex on the common neighbors of its
/// vertices. Labels of the result point back into x's vertex ids.
FlagComplex link(const FlagComplex& x, const Simplex& s);

struct ConeCheck {
    bool cone = false;
    int apex = -1;  // in the complex's local ids
};

/// A flag complex is a cone iff it has a universal vertex.
ConeCheck is_cone(const FlagComplex& x);

enum class SdnMode { vertex_condition, edge_condition, all_simplices };

struct SdnWitness {
    int radius = -1;        // i: sigma sits in the sphere of radius i+1
    Simplex sigma;          // the simplex whose descent set degenerates
    std::vector<int> descent;  // the offending descent set
};

struct SdnCheck {
    bool ok = true;
    SdnWitness witness;
};

/// Simple descent on balls around `base`: for every i and every simplex
/// sigma inside the sphere S_{i+1}(base) of the kind selected by mode, the
/// vertices of B_i(base) extending sigma span a nonempty clique.
SdnCheck check_sdn(const FlagComplex& x, const Simplex& base, SdnMode mode);

struct SdnMaximalCheck {
    bool ok = true;
    Simplex base;
    SdnWitness witness;
};

/// check_sdn over every inclusion-maximal simplex as base.
SdnMaximalCheck check_sdn_maximal(const FlagComplex& x, SdnMode mode = SdnMode::all_simplices);

struct EdgeDescentCheck {
    bool ok = true;
    int radius = -1;
    int z = -1, zp = -1;  // offending edge in the sphere
};

/// Edges of each sphere S_i(s) descend: some common neighbor of the edge
/// lies at distance i-1 from s.
EdgeDescentCheck check_edge_descent(const FlagComplex& x, const Simplex& s);

struct BallConvexityCheck {
    bool ok = true;
    int radius = -1;
};

/// B_i(s) is convex for every i >= 2 (radius 1 is allowed to fail).
BallConvexityCheck check_big_ball_convex(const FlagComplex& x, const Simplex& s);

/// K_i(s): intersection of the radius-i balls around the vertices of s;
/// K_0 = s.
VertexSet k_set(const FlagComplex& x, const Simplex& s, int i);

struct KDescentCheck {
    bool ok = true;
    int radius = -1;
    bool convexity_failed = false;  // else the one-step descent failed
};

/// K_i(s) convex and K_{i+1}(s) within one step of K_i(s), for all i up to
/// the carrier diameter.
KDescentCheck check_k_descent(const FlagComplex& x, const Simplex& s);

/// Projection of s onto a convex set y disjoint from s with s in B_1(y):
/// the y-vertices adjacent to all of s. Always a nonempty simplex when the
/// preconditions hold; violations throw.
Simplex project_on_convex(const FlagComplex& x, const Simplex& s, const VertexSet& y);

/// Expansion by projection e_y(s): s itself when s lies in y, otherwise the
/// join of s \ y with its projection on y.
Simplex expand_by_projection(const FlagComplex& x, const Simplex& s, const VertexSet& y);

struct LcReduction {
    bool success = false;
    std::vector<std::pair<int, int>> steps;  // (removed vertex, cone apex)
    std::vector<int> stuck;                  // remaining vertices on failure
};

/// Elementary LC-reductions until one vertex remains: repeatedly remove the
/// lowest vertex whose link in the current complex is a cone.
LcReduction lc_reduce(const FlagComplex& x);

}  // namespace wsc
