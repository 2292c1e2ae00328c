#include "wsc/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "wsc/recognition.hpp"

namespace wsc {

bool is_automorphism(const Graph& g, const Permutation& p) {
    int n = g.vertex_count();
    if (int(p.size()) != n) return false;
    std::vector<bool> hit(n, false);
    for (int v : p) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = true;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) return false;
    return true;
}

PermGroup PermGroup::trivial(int n) {
    PermGroup grp;
    grp.n_ = n;
    Permutation id(n);
    for (int v = 0; v < n; ++v) id[v] = v;
    grp.elements_.push_back(std::move(id));
    return grp;
}

PermGroup PermGroup::from_generators(const Graph& g, std::vector<Permutation> generators,
                                     std::size_t element_cap) {
    int n = g.vertex_count();
    for (const auto& p : generators)
        if (!is_automorphism(g, p))
            throw std::invalid_argument("PermGroup: generator is not a graph automorphism");

    PermGroup grp;
    grp.n_ = n;
    grp.generators_ = generators;

    Permutation id(n);
    for (int v = 0; v < n; ++v) id[v] = v;
    std::set<Permutation> closure{id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& e : frontier)
            for (const auto& gen : generators) {
                Permutation comp(n);
                for (int v = 0; v < n; ++v) comp[v] = gen[e[v]];
                if (closure.insert(comp).second) {
                    if (closure.size() > element_cap)
                        throw std::invalid_argument("PermGroup: group too large to materialize");
                    next.push_back(std::move(comp));
                }
            }
        frontier = std::move(next);
    }
    grp.elements_.assign(closure.begin(), closure.end());
    return grp;
}

std::vector<int> PermGroup::orbit(int v) const {
    VertexSet seen(n_);
    seen.set(v);
    for (const auto& e : elements_) seen.set(e[v]);
    return seen.to_vector();
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<std::vector<int>> out;
    VertexSet seen(n_);
    for (int v = 0; v < n_; ++v) {
        if (seen.test(v)) continue;
        auto o = orbit(v);
        for (int u : o) seen.set(u);
        out.push_back(std::move(o));
    }
    return out;
}

bool PermGroup::stabilizes(const VertexSet& s) const {
    for (const auto& e : elements_) {
        VertexSet mapped(n_);
        for (int v : s.to_vector()) mapped.set(e[v]);
        if (mapped != s) return false;
    }
    return true;
}

namespace {

// invariant used to prune the automorphism search: degree plus the sorted
// multiset of distances to every other vertex
std::vector<std::vector<int>> distance_profiles(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> prof(n);
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) prof[v].push_back(g.distance(v, u));
        std::sort(prof[v].begin(), prof[v].end());
        prof[v].push_back(g.degree(v));
    }
    return prof;
}

void search_automorphisms(const Graph& g, const std::vector<std::vector<int>>& prof,
                          std::vector<int>& image, std::vector<bool>& used, int depth,
                          std::size_t cap, std::vector<Permutation>& out) {
    int n = g.vertex_count();
    if (depth == n) {
        out.push_back(image);
        if (out.size() > cap) throw std::invalid_argument("automorphisms: group too large to materialize");
        return;
    }
    for (int target = 0; target < n; ++target) {
        if (used[target] || prof[depth] != prof[target]) continue;
        bool ok = true;
        for (int prev = 0; prev < depth && ok; ++prev)
            ok = g.distance(depth, prev) == g.distance(target, image[prev]);
        if (!ok) continue;
        image[depth] = target;
        used[target] = true;
        search_automorphisms(g, prof, image, used, depth + 1, cap, out);
        used[target] = false;
    }
}

}  // namespace

PermGroup automorphisms(const Graph& g, int vertex_guard, std::size_t element_cap) {
    int n = g.vertex_count();
    if (n > vertex_guard) throw std::invalid_argument("automorphisms: graph exceeds the size guard");
    std::vector<Permutation> found;
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    search_automorphisms(g, distance_profiles(g), image, used, 0, element_cap, found);

    PermGroup grp = PermGroup::from_generators(g, found, element_cap + 1);
    if (grp.order() != found.size())
        throw std::logic_error("automorphisms: search did not return a closed set");
    return grp;
}

std::vector<std::pair<int, int>> strictly_dominated(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        VertexSet nv = g.closed_neighborhood(v);
        for (int w = 0; w < n; ++w) {
            if (v == w) continue;
            VertexSet nw = g.closed_neighborhood(w);
            if (nv.subset_of(nw) && nv != nw) out.emplace_back(v, w);
        }
    }
    return out;
}

namespace {

// minimal strictly dominated vertices of the induced subgraph on `present`,
// in original vertex ids
std::vector<int> minimal_strictly_dominated(const Graph& g, const VertexSet& present) {
    auto verts = present.to_vector();
    auto closed = [&](int v) { return g.closed_neighborhood(v) & present; };
    std::vector<int> out;
    for (int v : verts) {
        bool dominated = false, has_smaller = false;
        VertexSet nv = closed(v);
        for (int w : verts) {
            if (w == v) continue;
            VertexSet nw = closed(w);
            if (nv.subset_of(nw) && nv != nw) dominated = true;
            if (nw.subset_of(nv) && nw != nv) has_smaller = true;
        }
        if (dominated && !has_smaller) out.push_back(v);
    }
    return out;
}

bool weakly_bridged_subset(const Graph& g, const VertexSet& vs) {
    auto sub = induced_subgraph(g, vs, false);
    if (!sub.graph.connected()) return false;
    return classify(sub.graph).weakly_bridged();
}

}  // namespace

InvariantCertificate invariant_simplex(const FlagComplex& x, const PermGroup& grp, int seed) {
    const Graph& g = x.carrier();
    g.check(seed);
    if (grp.degree() != g.vertex_count()) throw std::invalid_argument("invariant_simplex: group degree mismatch");
    if (!classify(g).weakly_bridged()) throw std::invalid_argument("invariant_simplex: carrier is not weakly bridged");

    InvariantCertificate cert;
    cert.seed = seed;

    VertexSet orbit = VertexSet::from(g.vertex_count(), grp.orbit(seed));
    VertexSet current = convex_hull(g, orbit);
    cert.hull = current.to_vector();
    if (!grp.stabilizes(current)) throw std::logic_error("invariant_simplex: hull of an orbit is not invariant");
    if (!weakly_bridged_subset(g, current)) throw std::logic_error("invariant_simplex: hull subcomplex is not weakly bridged");

    while (!is_clique(g, current)) {
        std::vector<int> removal = minimal_strictly_dominated(g, current);
        if (removal.empty())
            throw std::logic_error("invariant_simplex: no strictly dominated vertex in a non-simplex complex");
        VertexSet next = current;
        for (int v : removal) next.reset(v);
        if (!grp.stabilizes(next)) throw std::logic_error("invariant_simplex: removal round is not invariant");
        if (!weakly_bridged_subset(g, next))
            throw std::logic_error("invariant_simplex: removal broke weak systolicity");
        cert.rounds.push_back(std::move(removal));
        current = next;
    }
    cert.simplex = Simplex(current.to_vector());
    if (!grp.stabilizes(current)) throw std::logic_error("invariant_simplex: final simplex is not invariant");
    return cert;
}

bool verify_invariant_certificate(const FlagComplex& x, const PermGroup& grp,
                                  const InvariantCertificate& cert) {
    const Graph& g = x.carrier();
    int n = g.vertex_count();

    VertexSet orbit = VertexSet::from(n, grp.orbit(cert.seed));
    if (convex_hull(g, orbit).to_vector() != cert.hull) return false;

    VertexSet current = VertexSet::from(n, cert.hull);
    for (const auto& round : cert.rounds) {
        if (is_clique(g, current)) return false;
        if (minimal_strictly_dominated(g, current) != round) return false;
        // every round splits into whole orbits
        VertexSet removed = VertexSet::from(n, round);
        if (!grp.stabilizes(removed)) return false;
        current -= removed;
    }
    if (!is_clique(g, current)) return false;
    if (Simplex(current.to_vector()) != cert.simplex) return false;
    return grp.stabilizes(current);
}

RoundnessReport roundness_audit(const FlagComplex& x) {
    const Graph& g = x.carrier();
    if (!classify(g).bridged()) throw std::invalid_argument("roundness_audit: carrier is not bridged");
    RoundnessReport rep;
    rep.diameter = g.diameter();
    rep.radius = g.radius();
    rep.farber_holds = 3 * rep.radius <= 2 * rep.diameter + 2;

    int n = g.vertex_count();
    VertexSet core = VertexSet::full(n);
    if (rep.diameter == 0) {
        core = VertexSet(n);  // balls of negative radius are empty
    } else {
        for (int v = 0; v < n; ++v) core &= ball(g, v, rep.diameter - 1);
    }
    rep.round = core.empty();
    rep.core = core.to_vector();
    return rep;
}

}  // namespace wsc
