#pragma once

#include <cstddef>
#include <vector>

#include "wsc/complex.hpp"
#include "wsc/graph.hpp"

namespace wsc {

using Permutation = std::vector<int>;

bool is_automorphism(const Graph& g, const Permutation& p);

/// Finite group of vertex permutations, closed under composition and stored
/// in full. Every element must be an automorphism of the carrier graph.
class PermGroup {
public:
    static PermGroup trivial(int n);
    static PermGroup from_generators(const Graph& g, std::vector<Permutation> generators,
                                     std::size_t element_cap = 1'000'000);

    int degree() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    std::vector<int> orbit(int v) const;
    std::vector<std::vector<int>> orbits() const;
    /// Setwise stabilization: g(S) = S for every group element.
    bool stabilizes(const VertexSet& s) const;

private:
    int n_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

/// Full automorphism group by distance-profile-pruned backtracking. Guarded
/// against large inputs and against groups too big to materialize.
PermGroup automorphisms(const Graph& g, int vertex_guard = 64, std::size_t element_cap = 1'000'000);

/// All ordered pairs (v,w) with B_1(v) strictly contained in B_1(w).
std::vector<std::pair<int, int>> strictly_dominated(const Graph& g);

/// Proof object for an invariant simplex: the removal rounds replay from the
/// hull of the seed orbit down to the simplex.
struct InvariantCertificate {
    int seed = -1;
    std::vector<int> hull;                  // convex hull of the seed's orbit
    std::vector<std::vector<int>> rounds;   // vertices removed per round
    Simplex simplex;
};

/// Group-invariant simplex of a weakly bridged carrier: restrict to the
/// convex hull of the seed's orbit, then repeatedly strip the minimal
/// strictly dominated vertices (a group-invariant set) until a clique
/// remains. Every intermediate carrier is re-verified weakly bridged.
InvariantCertificate invariant_simplex(const FlagComplex& x, const PermGroup& grp, int seed);

/// Replays a certificate: hull and rounds recompute, the simplex is fixed
/// setwise by the whole group, and each round is a union of orbits.
bool verify_invariant_certificate(const FlagComplex& x, const PermGroup& grp,
                                  const InvariantCertificate& cert);

struct RoundnessReport {
    int diameter = 0;
    int radius = 0;
    bool round = false;          // the radius-(diam-1) balls have empty common intersection
    std::vector<int> core;       // that intersection, when nonempty
    bool farber_holds = false;   // 3 rad <= 2 diam + 2
};

/// Diameter/radius audit of a systolic complex (bridged carrier required).
RoundnessReport roundness_audit(const FlagComplex& x);

}  // namespace wsc
