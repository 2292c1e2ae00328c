#include "wsc/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace wsc {

Simplex::Simplex(std::vector<int> vs) : verts(std::move(vs)) {
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw std::invalid_argument("Simplex: repeated vertex");
}

bool Simplex::contains(int v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
}

bool Simplex::subset_of(const Simplex& other) const {
    return std::includes(other.verts.begin(), other.verts.end(), verts.begin(), verts.end());
}

namespace {

void extend_cliques(const Graph& g, std::vector<int>& cur, const VertexSet& cands, int max_size,
                    std::vector<std::vector<Simplex>>& by_dim) {
    if (int(cur.size()) == max_size) return;
    for (int v : cands.to_vector()) {
        cur.push_back(v);
        by_dim[cur.size() - 1].push_back(Simplex(cur));
        VertexSet next = cands & g.neighbor_set(v);
        for (int w : cur) next.reset(w);
        // only extend upward to avoid duplicates
        VertexSet upward = next;
        for (int w = 0; w <= v && w < g.vertex_count(); ++w) upward.reset(w);
        extend_cliques(g, cur, upward, max_size, by_dim);
        cur.pop_back();
    }
}

}  // namespace

FlagComplex::FlagComplex(Graph carrier, int dim_cap) : FlagComplex(std::move(carrier), {}, dim_cap) {}

FlagComplex::FlagComplex(Graph carrier, std::vector<int> labels, int dim_cap)
    : carrier_(std::move(carrier)), labels_(std::move(labels)), dim_cap_(dim_cap) {
    int n = carrier_.vertex_count();
    if (labels_.empty()) {
        labels_.resize(n);
        for (int v = 0; v < n; ++v) labels_[v] = v;
    }
    if (int(labels_.size()) != n) throw std::invalid_argument("FlagComplex: label count mismatch");

    for (const auto& m : maximal_simplices()) clique_number_ = std::max(clique_number_, m.size());
    if (dim_cap_ < 0) dim_cap_ = std::max(clique_number_ - 1, 0);

    by_dim_.assign(dim_cap_ + 1, {});
    std::vector<int> cur;
    extend_cliques(carrier_, cur, VertexSet::full(n), dim_cap_ + 1, by_dim_);
    for (auto& level : by_dim_) std::sort(level.begin(), level.end());
}

bool FlagComplex::is_simplex(const std::vector<int>& vs) const {
    if (vs.empty()) return false;
    return is_clique(carrier_, vs);
}

const std::vector<Simplex>& FlagComplex::simplices(int dim) const {
    if (dim < 0 || dim > dim_cap_) {
        static const std::vector<Simplex> none;
        return none;
    }
    return by_dim_[dim];
}

std::vector<Simplex> FlagComplex::all_simplices() const {
    std::vector<Simplex> out;
    for (const auto& level : by_dim_) out.insert(out.end(), level.begin(), level.end());
    return out;
}

std::vector<Simplex> FlagComplex::maximal_simplices() const {
    // Bron-Kerbosch without pivoting; desk scale
    std::vector<Simplex> out;
    int n = carrier_.vertex_count();
    struct Rec {
        const Graph& g;
        std::vector<Simplex>& out;
        void run(std::vector<int>& r, VertexSet p, VertexSet x) {
            if (p.empty() && x.empty()) {
                if (!r.empty()) out.push_back(Simplex(r));
                return;
            }
            for (int v : p.to_vector()) {
                r.push_back(v);
                run(r, p & g.neighbor_set(v), x & g.neighbor_set(v));
                r.pop_back();
                p.reset(v);
                x.set(v);
            }
        }
    } rec{carrier_, out};
    std::vector<int> r;
    rec.run(r, VertexSet::full(n), VertexSet(n));
    std::sort(out.begin(), out.end());
    return out;
}

FlagComplex link(const FlagComplex& x, const Simplex& s) {
    if (!x.is_simplex(s)) throw std::invalid_argument("link: not a simplex of the complex");
    const Graph& g = x.carrier();
    VertexSet common = VertexSet::full(g.vertex_count());
    for (int v : s.verts) common &= g.neighbor_set(v);
    auto sub = induced_subgraph(g, common, false);
    std::vector<int> labels(sub.vertices.size());
    for (std::size_t i = 0; i < sub.vertices.size(); ++i) labels[i] = x.labels()[sub.vertices[i]];
    return FlagComplex(sub.graph, labels, -1);
}

ConeCheck is_cone(const FlagComplex& x) {
    int n = x.vertex_count();
    if (n == 0) return {false, -1};
    for (int v = 0; v < n; ++v)
        if (x.carrier().degree(v) == n - 1) return {true, v};
    return {false, -1};
}

namespace {

// distances to the base simplex, -1 when unreachable
std::vector<int> simplex_distances(const Graph& g, const Simplex& s) {
    std::vector<int> d(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int w : s.verts) {
            int dv = g.distance(w, v);
            if (dv >= 0 && (d[v] < 0 || dv < d[v])) d[v] = dv;
        }
    }
    return d;
}

// all cliques inside the given candidate set (sizes 1..max_size), ascending ids
void cliques_within(const Graph& g, const std::vector<int>& cands, int max_size,
                    std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    for (std::size_t idx = 0; idx < cands.size(); ++idx) {
        int v = cands[idx];
        if (!cur.empty() && v <= cur.back()) continue;
        bool ok = true;
        for (int w : cur)
            if (!g.adjacent(v, w)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.push_back(v);
        out.push_back(cur);
        if (int(cur.size()) < max_size) cliques_within(g, cands, max_size, cur, out);
        cur.pop_back();
    }
}

}  // namespace

SdnCheck check_sdn(const FlagComplex& x, const Simplex& base, SdnMode mode) {
    if (!x.is_simplex(base)) throw std::invalid_argument("check_sdn: base is not a simplex");
    const Graph& g = x.carrier();
    int n = g.vertex_count();
    auto dist = simplex_distances(g, base);
    int ecc = *std::max_element(dist.begin(), dist.end());

    for (int i = 0; i + 1 <= ecc; ++i) {
        std::vector<int> sphere_verts;
        for (int v = 0; v < n; ++v)
            if (dist[v] == i + 1) sphere_verts.push_back(v);
        if (sphere_verts.empty()) continue;

        VertexSet inner(n);
        for (int v = 0; v < n; ++v)
            if (dist[v] >= 0 && dist[v] <= i) inner.set(v);

        std::vector<std::vector<int>> sigmas;
        if (mode == SdnMode::vertex_condition) {
            for (int v : sphere_verts) sigmas.push_back({v});
        } else if (mode == SdnMode::edge_condition) {
            for (std::size_t a = 0; a < sphere_verts.size(); ++a)
                for (std::size_t b = a + 1; b < sphere_verts.size(); ++b)
                    if (g.adjacent(sphere_verts[a], sphere_verts[b]))
                        sigmas.push_back({sphere_verts[a], sphere_verts[b]});
        } else {
            std::vector<int> cur;
            cliques_within(g, sphere_verts, x.dim_cap() + 1, cur, sigmas);
        }

        for (const auto& sig : sigmas) {
            VertexSet descent = inner;
            for (int v : sig) descent &= g.neighbor_set(v);
            if (descent.empty() || !is_clique(g, descent))
                return {false, {i, Simplex(sig), descent.to_vector()}};
        }
    }
    return {};
}

SdnMaximalCheck check_sdn_maximal(const FlagComplex& x, SdnMode mode) {
    for (const auto& m : x.maximal_simplices()) {
        auto r = check_sdn(x, m, mode);
        if (!r.ok) return {false, m, r.witness};
    }
    return {};
}

EdgeDescentCheck check_edge_descent(const FlagComplex& x, const Simplex& s) {
    if (!x.is_simplex(s)) throw std::invalid_argument("check_edge_descent: not a simplex");
    const Graph& g = x.carrier();
    int n = g.vertex_count();
    auto dist = simplex_distances(g, s);
    int ecc = *std::max_element(dist.begin(), dist.end());
    for (int i = 1; i <= ecc; ++i) {
        for (int z = 0; z < n; ++z) {
            if (dist[z] != i) continue;
            for (int zp : g.neighbors(z)) {
                if (zp < z || dist[zp] != i) continue;
                bool found = false;
                for (int v : (g.neighbor_set(z) & g.neighbor_set(zp)).to_vector())
                    if (dist[v] == i - 1) found = true;
                if (!found) return {false, i, z, zp};
            }
        }
    }
    return {};
}

BallConvexityCheck check_big_ball_convex(const FlagComplex& x, const Simplex& s) {
    if (!x.is_simplex(s)) throw std::invalid_argument("check_big_ball_convex: not a simplex");
    const Graph& g = x.carrier();
    VertexSet center = s.to_set(g.vertex_count());
    for (int i = 2; i <= g.diameter(); ++i)
        if (!is_convex(g, ball(g, center, i))) return {false, i};
    return {};
}

VertexSet k_set(const FlagComplex& x, const Simplex& s, int i) {
    if (!x.is_simplex(s)) throw std::invalid_argument("k_set: not a simplex");
    if (i < 0) throw std::invalid_argument("k_set: negative radius");
    const Graph& g = x.carrier();
    if (i == 0) return s.to_set(g.vertex_count());
    VertexSet out = VertexSet::full(g.vertex_count());
    for (int v : s.verts) out &= ball(g, v, i);
    return out;
}

KDescentCheck check_k_descent(const FlagComplex& x, const Simplex& s) {
    const Graph& g = x.carrier();
    int diam = g.diameter();
    for (int i = 0; i <= diam; ++i) {
        VertexSet ki = k_set(x, s, i);
        if (!is_convex(g, ki)) return {false, i, true};
        if (i + 1 <= diam) {
            VertexSet next = k_set(x, s, i + 1);
            if (!next.subset_of(ball(g, ki, 1))) return {false, i + 1, false};
        }
    }
    return {};
}

Simplex project_on_convex(const FlagComplex& x, const Simplex& s, const VertexSet& y) {
    const Graph& g = x.carrier();
    if (s.empty()) throw std::invalid_argument("project_on_convex: empty simplex");
    if (!x.is_simplex(s)) throw std::invalid_argument("project_on_convex: not a simplex");
    if (!is_convex(g, y)) throw std::invalid_argument("project_on_convex: target set is not convex");
    VertexSet sset = s.to_set(g.vertex_count());
    if (sset.intersects(y)) throw std::invalid_argument("project_on_convex: simplex meets the target set");
    if (!sset.subset_of(ball(g, y, 1))) throw std::invalid_argument("project_on_convex: simplex not within one step of the target");
    VertexSet tau = y;
    for (int v : s.verts) tau &= g.neighbor_set(v);
    if (tau.empty()) throw std::logic_error("project_on_convex: empty projection on a convex set");
    if (!is_clique(g, tau)) throw std::logic_error("project_on_convex: projection is not a simplex");
    return Simplex(tau.to_vector());
}

Simplex expand_by_projection(const FlagComplex& x, const Simplex& s, const VertexSet& y) {
    const Graph& g = x.carrier();
    if (!x.is_simplex(s)) throw std::invalid_argument("expand_by_projection: not a simplex");
    if (!is_convex(g, y)) throw std::invalid_argument("expand_by_projection: target set is not convex");
    VertexSet sset = s.to_set(g.vertex_count());
    if (!sset.subset_of(ball(g, y, 1))) throw std::invalid_argument("expand_by_projection: simplex not inside B_1(y)");
    if (sset.subset_of(y)) return s;
    std::vector<int> outside;
    for (int v : s.verts)
        if (!y.test(v)) outside.push_back(v);
    Simplex boundary((std::vector<int>(outside)));
    Simplex proj = project_on_convex(x, boundary, y);
    std::vector<int> joined = boundary.verts;
    joined.insert(joined.end(), proj.verts.begin(), proj.verts.end());
    Simplex result{std::move(joined)};
    if (!x.is_simplex(result)) throw std::logic_error("expand_by_projection: join is not a simplex");
    return result;
}

LcReduction lc_reduce(const FlagComplex& x) {
    const Graph& g = x.carrier();
    int n = g.vertex_count();
    LcReduction red;
    VertexSet present = VertexSet::full(n);
    for (int remaining = n; remaining > 1; --remaining) {
        int victim = -1, apex = -1;
        for (int v = 0; v < n && victim < 0; ++v) {
            if (!present.test(v)) continue;
            // link of v in the current complex: present common neighbors
            VertexSet lk = g.neighbor_set(v) & present;
            auto verts = lk.to_vector();
            if (verts.empty()) continue;  // isolated vertex cannot be LC-removed
            for (int a : verts) {
                bool universal = true;
                for (int b : verts)
                    if (b != a && !g.adjacent(a, b)) {
                        universal = false;
                        break;
                    }
                if (universal) {
                    victim = v;
                    apex = a;
                    break;
                }
            }
        }
        if (victim < 0) {
            red.stuck = present.to_vector();
            return red;
        }
        red.steps.emplace_back(victim, apex);
        present.reset(victim);
    }
    red.success = true;
    return red;
}

}  // namespace wsc
