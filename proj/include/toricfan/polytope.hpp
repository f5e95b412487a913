#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toricfan/building_set.hpp"
#include "toricfan/criteria.hpp"
#include "toricfan/errors.hpp"
#include "toricfan/fan.hpp"
#include "toricfan/lattice.hpp"

namespace toricfan {

/// A full-dimensional lattice polytope with its complete facet description.
/// Facets are inner descriptions <u, x> <= c with primitive normals u, sorted
/// by (normal, offset); vertices are sorted lexicographically.
struct LatticePolytope {
    int dim = 0;
    std::vector<Vec> vertices;
    std::vector<Vec> facet_normals;
    std::vector<Int> facet_offsets;
    std::vector<std::vector<int>> facet_vertices;
};

namespace detail {

inline void attach_facets(LatticePolytope& p, std::map<std::pair<Vec, Int>, char>& hyperplanes) {
    size_t n = static_cast<size_t>(p.dim);
    for (const auto& [hp, unused] : hyperplanes) {
        (void)unused;
        std::vector<int> inc;
        for (size_t k = 0; k < p.vertices.size(); ++k)
            if (dot(hp.first, p.vertices[k]) == hp.second) inc.push_back(static_cast<int>(k));
        if (inc.size() < n)
            throw PolytopeError("facet with " + std::to_string(inc.size()) +
                                " vertices in dimension " + std::to_string(n));
        p.facet_normals.push_back(hp.first);
        p.facet_offsets.push_back(hp.second);
        p.facet_vertices.push_back(std::move(inc));
    }
}

}  // namespace detail

/// Convex hull of a finite point set, by exhausting supporting hyperplanes
/// through dimension-many points.  Exact but brute force; intended for small
/// inputs.
inline LatticePolytope hull(std::vector<Vec> points) {
    if (points.empty()) throw NotFullDimensional("no points");
    size_t n = points[0].size();
    for (const Vec& p : points)
        if (p.size() != n) throw PolytopeError("points of mixed dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    LatticePolytope poly;
    poly.dim = static_cast<int>(n);
    if (n == 0) {
        poly.vertices = {Vec{}};
        return poly;
    }
    if (points.size() > 1000 || n > 8)
        throw TooLarge("hull limited to 1000 points in dimension 8");

    std::vector<Vec> diffs;
    for (size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    int rank = rank_of(diffs);
    if (rank < static_cast<int>(n))
        throw NotFullDimensional("affine rank " + std::to_string(rank) + " in dimension " +
                                 std::to_string(n));

    double combos = 1;
    for (size_t i = 0; i < n; ++i) combos *= static_cast<double>(points.size() - i) / (i + 1);
    if (combos > 2e7) throw SearchBudgetExceeded("hull would scan too many point subsets");

    std::map<std::pair<Vec, Int>, char> hyperplanes;
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<Vec> span(n - 1);
    while (true) {
        for (size_t i = 1; i < n; ++i) span[i - 1] = sub(points[idx[i]], points[idx[0]]);
        Vec normal = cross_normal(span);
        if (!is_zero(normal)) {
            normal = primitive(normal);
            Int offset = dot(normal, points[idx[0]]);
            bool above = false, below = false;
            for (const Vec& p : points) {
                Int d = dot(normal, p);
                if (d > offset) above = true;
                if (d < offset) below = true;
                if (above && below) break;
            }
            if (!above && below) hyperplanes.insert({{normal, offset}, 0});
            if (!below && above) hyperplanes.insert({{negate(normal), -offset}, 0});
        }
        // next combination of n indices
        size_t i = n;
        while (i > 0 && idx[i - 1] == points.size() - n + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }

    for (const Vec& p : points) {
        std::vector<Vec> active;
        for (const auto& [hp, unused] : hyperplanes) {
            (void)unused;
            if (dot(hp.first, p) == hp.second) active.push_back(hp.first);
        }
        if (rank_of(active) == static_cast<int>(n)) poly.vertices.push_back(p);
    }
    if (poly.vertices.size() < n + 1)
        throw PolytopeError("hull produced fewer than dim+1 vertices");
    detail::attach_facets(poly, hyperplanes);
    return poly;
}

/// The polytope P whose face fan is the given weak Fano fan: one facet
/// hyperplane <u_sigma, x> = 1 per maximal cone (walls of degree zero merge
/// adjacent cones into one facet), with the fan's rays among its boundary
/// lattice points.
inline LatticePolytope polytope_of_weak_fano_fan(const Fan& f) {
    if (!is_weak_fano_oracle(f))
        throw NotWeakFano("fan has a wall of negative anticanonical degree");
    size_t n = static_cast<size_t>(f.dim);
    LatticePolytope poly;
    poly.dim = f.dim;
    if (n == 0) {
        poly.vertices = {Vec{}};
        return poly;
    }

    std::map<std::pair<Vec, Int>, char> hyperplanes;
    std::vector<Vec> cols(n, Vec(n));
    Vec ones(n, 1);
    for (const auto& cone : f.max_cones) {
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i)
                cols[j][i] = f.rays[static_cast<size_t>(cone[i])][j];
        Vec u = solve_unimodular_columns(cols, ones);
        for (const Vec& r : f.rays)
            if (dot(u, r) > 1)
                throw FanError("support normal exceeds offset on ray " + vec_to_string(r));
        hyperplanes.insert({{std::move(u), 1}, 0});
    }

    std::vector<Vec> sorted_rays = f.rays;
    std::sort(sorted_rays.begin(), sorted_rays.end());
    for (const Vec& r : sorted_rays) {
        std::vector<Vec> active;
        for (const auto& [hp, unused] : hyperplanes) {
            (void)unused;
            if (dot(hp.first, r) == 1) active.push_back(hp.first);
        }
        if (rank_of(active) == static_cast<int>(n)) poly.vertices.push_back(r);
    }
    detail::attach_facets(poly, hyperplanes);
    return poly;
}

/// Reflexive: the origin is interior and every facet is at lattice distance
/// one (primitive normal, offset one).
inline bool is_reflexive(const LatticePolytope& p) {
    if (p.dim == 0) return true;
    if (p.facet_offsets.empty()) return false;
    for (size_t k = 0; k < p.facet_offsets.size(); ++k) {
        if (p.facet_offsets[k] != 1) return false;
        if (vec_gcd(p.facet_normals[k]) != 1) return false;
    }
    return true;
}

namespace detail {

/// Lattice points strictly inside p, by scanning the bounding box.
inline std::vector<Vec> interior_lattice_points(const LatticePolytope& p) {
    size_t n = static_cast<size_t>(p.dim);
    Vec lo = p.vertices[0], hi = p.vertices[0];
    for (const Vec& v : p.vertices)
        for (size_t i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    double cells = 1;
    for (size_t i = 0; i < n; ++i) cells *= static_cast<double>(hi[i] - lo[i] + 1);
    if (cells > 5e6) throw SearchBudgetExceeded("interior point scan over too large a box");

    std::vector<Vec> found;
    Vec x = lo;
    while (true) {
        bool inside = true;
        for (size_t k = 0; k < p.facet_normals.size() && inside; ++k)
            if (dot(p.facet_normals[k], x) >= p.facet_offsets[k]) inside = false;
        if (inside) found.push_back(x);
        size_t i = 0;
        while (i < n && x[i] == hi[i]) {
            x[i] = lo[i];
            ++i;
        }
        if (i == n) break;
        ++x[i];
    }
    return found;
}

}  // namespace detail

using detail::interior_lattice_points;

/// Smooth Fano: every facet's vertices form a lattice basis, and the origin
/// is the unique interior lattice point.
inline bool is_smooth_fano(const LatticePolytope& p) {
    if (p.dim == 0) return true;
    size_t n = static_cast<size_t>(p.dim);
    for (size_t k = 0; k < p.facet_vertices.size(); ++k) {
        if (p.facet_vertices[k].size() != n) return false;
        std::vector<Vec> basis;
        for (int vi : p.facet_vertices[k]) basis.push_back(p.vertices[static_cast<size_t>(vi)]);
        Int d = det_columns(basis);
        if (d != 1 && d != -1) return false;
    }
    std::vector<Vec> interior = detail::interior_lattice_points(p);
    return interior.size() == 1 && is_zero(interior[0]);
}

/// Pseudo-symmetric: some facet is the pointwise negation of another facet.
inline bool is_pseudo_symmetric(const LatticePolytope& p) {
    if (!is_smooth_fano(p)) throw NotSmoothFano("pseudo-symmetry is defined for smooth Fano polytopes");
    if (p.dim == 0) return false;
    std::set<std::vector<Vec>> facet_sets;
    for (const auto& inc : p.facet_vertices) {
        std::vector<Vec> vs;
        for (int vi : inc) vs.push_back(p.vertices[static_cast<size_t>(vi)]);
        std::sort(vs.begin(), vs.end());
        facet_sets.insert(std::move(vs));
    }
    for (const auto& inc : p.facet_vertices) {
        std::vector<Vec> neg;
        for (int vi : inc) neg.push_back(negate(p.vertices[static_cast<size_t>(vi)]));
        std::sort(neg.begin(), neg.end());
        if (facet_sets.count(neg)) return true;
    }
    return false;
}

/// Apply a unimodular matrix to a polytope: vertices map by m, facet normals
/// by the inverse transpose, offsets unchanged.
inline LatticePolytope transform_polytope(const LatticePolytope& p, const IntMatrix& m) {
    size_t n = static_cast<size_t>(p.dim);
    IntMatrix minv = inverse_unimodular(m);
    LatticePolytope q;
    q.dim = p.dim;

    std::vector<std::pair<Vec, int>> mapped;
    for (size_t k = 0; k < p.vertices.size(); ++k)
        mapped.emplace_back(mat_vec(m, p.vertices[k]), static_cast<int>(k));
    std::sort(mapped.begin(), mapped.end());
    std::vector<int> where(mapped.size());
    for (size_t k = 0; k < mapped.size(); ++k) {
        where[static_cast<size_t>(mapped[k].second)] = static_cast<int>(k);
        q.vertices.push_back(mapped[k].first);
    }

    std::vector<std::pair<std::pair<Vec, Int>, std::vector<int>>> facets;
    for (size_t k = 0; k < p.facet_normals.size(); ++k) {
        Vec u(n);
        for (size_t j = 0; j < n; ++j) {
            Wide s = 0;
            for (size_t i = 0; i < n; ++i)
                s += detail::checked_mul(Wide(p.facet_normals[k][i]), Wide(minv[i][j]));
            u[j] = detail::narrow(s, "transformed normal");
        }
        std::vector<int> inc;
        for (int vi : p.facet_vertices[k]) inc.push_back(where[static_cast<size_t>(vi)]);
        std::sort(inc.begin(), inc.end());
        facets.push_back({{std::move(u), p.facet_offsets[k]}, std::move(inc)});
    }
    std::sort(facets.begin(), facets.end());
    for (auto& [hp, inc] : facets) {
        q.facet_normals.push_back(std::move(hp.first));
        q.facet_offsets.push_back(hp.second);
        q.facet_vertices.push_back(std::move(inc));
    }
    return q;
}

/// Canonical form of a smooth Fano polytope under unimodular equivalence:
/// the minimum, over all facets and all orderings of a facet's vertex basis,
/// of the sorted vertex list mapped by the basis inverse, serialized.
/// Two polytopes get the same string iff they are unimodularly equivalent.
inline std::string normal_form(const LatticePolytope& p) {
    if (!is_smooth_fano(p)) throw NotSmoothFano("normal form is defined for smooth Fano polytopes");
    auto serialize = [](int dim, const std::vector<Vec>& vs) {
        std::string s = "polytope;d=" + std::to_string(dim) + ";v=";
        for (const Vec& v : vs) s += vec_to_string(v);
        return s;
    };
    if (p.dim == 0) return serialize(0, {Vec{}});
    size_t n = static_cast<size_t>(p.dim);

    double steps = static_cast<double>(p.facet_vertices.size()) *
                   static_cast<double>(p.vertices.size());
    for (size_t i = 2; i <= n; ++i) steps *= static_cast<double>(i);
    if (steps > 1e8) throw SearchBudgetExceeded("normal form would scan too many bases");

    std::vector<Vec> best;
    for (const auto& inc : p.facet_vertices) {
        std::vector<size_t> order(n);
        for (size_t i = 0; i < n; ++i) order[i] = static_cast<size_t>(inc[i]);
        std::sort(order.begin(), order.end());
        do {
            IntMatrix basis(n, Vec(n));
            for (size_t j = 0; j < n; ++j)
                for (size_t i = 0; i < n; ++i) basis[i][j] = p.vertices[order[j]][i];
            IntMatrix inv = inverse_unimodular(basis);
            std::vector<Vec> image;
            image.reserve(p.vertices.size());
            for (const Vec& v : p.vertices) image.push_back(mat_vec(inv, v));
            std::sort(image.begin(), image.end());
            if (best.empty() || image < best) best = std::move(image);
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return serialize(p.dim, best);
}

/// A finite directed graph without loops, nodes 0-based.
struct DirectedGraph {
    int nodes = 0;
    std::vector<std::pair<int, int>> arrows;
};

namespace detail {

inline bool digraph_underlying_connected(const DirectedGraph& g) {
    if (g.nodes <= 0) return false;
    std::vector<Mask> adj(static_cast<size_t>(g.nodes), 0);
    for (auto [a, b] : g.arrows) {
        adj[static_cast<size_t>(a)] |= Mask(1) << b;
        adj[static_cast<size_t>(b)] |= Mask(1) << a;
    }
    Mask comp = 1, frontier = 1;
    while (frontier) {
        Mask grown = 0;
        for (int v : elements_of(frontier)) grown |= adj[static_cast<size_t>(v)];
        frontier = grown & ~comp;
        comp |= grown;
    }
    return comp == full_mask(g.nodes);
}

}  // namespace detail

/// The lattice polytope of a digraph: the hull of e_i - e_j over arrows
/// (i, j), taken in the sum-zero hyperplane by dropping the last coordinate.
inline LatticePolytope digraph_polytope(const DirectedGraph& g) {
    if (g.nodes < 1) throw IoError("digraph needs at least one node");
    for (auto [a, b] : g.arrows) {
        if (a < 0 || b < 0 || a >= g.nodes || b >= g.nodes)
            throw IndexOutOfRange("arrow endpoint out of range");
        if (a == b) throw IoError("digraph has a loop");
    }
    if (!detail::digraph_underlying_connected(g))
        throw NotConnected("digraph is not connected");
    size_t n = static_cast<size_t>(g.nodes);
    if (n == 1) {
        LatticePolytope point;
        point.dim = 0;
        point.vertices = {Vec{}};
        return point;
    }
    std::vector<Vec> points;
    for (auto [a, b] : g.arrows) {
        Vec v(n, 0);
        v[static_cast<size_t>(a)] = 1;
        v[static_cast<size_t>(b)] = -1;
        Int s = 0;
        for (Int c : v) s += c;
        if (s != 0) throw PolytopeError("arrow vector does not sum to zero");
        v.pop_back();
        points.push_back(std::move(v));
    }
    if (points.empty()) throw NotFullDimensional("digraph has no arrows");
    return hull(std::move(points));
}

/// Search for a connected digraph whose polytope is unimodularly equivalent
/// to the polytope of the given Fano building set.  The digraph must have
/// dim+1 nodes; digraphs are scanned in canonical arrow-mask order.
inline std::optional<DirectedGraph> find_digraph_realization(const BuildingSet& b,
                                                             int max_nodes = 5) {
    Classification cls = building_set_fano(b);
    if (!cls.fano) throw NotFano(cls.witness);
    Fan f = fan_of_building_set(b);
    if (f.dim > 4 || max_nodes > 5)
        throw TooLarge("digraph realization search is limited to dimension 4");
    LatticePolytope target_polytope = polytope_of_weak_fano_fan(f);
    std::string target = normal_form(target_polytope);
    size_t target_vertices = target_polytope.vertices.size();

    int k = f.dim + 1;
    if (k > max_nodes) return std::nullopt;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) slots.emplace_back(i, j);
    size_t s = slots.size();

    std::vector<int> perm(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) perm[static_cast<size_t>(i)] = i;
    std::vector<std::vector<size_t>> slot_perms;
    std::map<std::pair<int, int>, size_t> slot_index;
    for (size_t t = 0; t < s; ++t) slot_index[slots[t]] = t;
    do {
        std::vector<size_t> table(s);
        for (size_t t = 0; t < s; ++t)
            table[t] = slot_index.at({perm[static_cast<size_t>(slots[t].first)],
                                      perm[static_cast<size_t>(slots[t].second)]});
        slot_perms.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (uint64_t mask = 0; mask < (uint64_t(1) << s); ++mask) {
        if (static_cast<size_t>(popcount(mask)) < target_vertices && !(k == 1 && mask == 0))
            continue;
        DirectedGraph g;
        g.nodes = k;
        for (size_t t = 0; t < s; ++t)
            if (mask >> t & 1) g.arrows.push_back(slots[t]);
        if (!detail::digraph_underlying_connected(g)) continue;
        bool canonical = true;
        for (const auto& table : slot_perms) {
            uint64_t image = 0;
            for (size_t t = 0; t < s; ++t)
                if (mask >> t & 1) image |= uint64_t(1) << table[t];
            if (image < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        try {
            LatticePolytope pg = digraph_polytope(g);
            if (pg.vertices.size() != target_vertices && f.dim != 0) continue;
            if (!is_smooth_fano(pg)) continue;
            if (normal_form(pg) == target) return g;
        } catch (const NotFullDimensional&) {
            continue;
        } catch (const NotSmooth&) {
            continue;
        }
    }
    return std::nullopt;
}

}  // namespace toricfan
