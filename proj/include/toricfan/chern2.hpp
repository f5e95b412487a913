#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toricfan/building_set.hpp"
#include "toricfan/criteria.hpp"
#include "toricfan/errors.hpp"
#include "toricfan/fan.hpp"

namespace toricfan {

/// An integer with denominator 1 or 2.
struct Rational {
    Int num = 0;
    Int den = 1;

    bool operator==(const Rational&) const = default;
    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rational half_of(Int twice) {
    if (twice % 2 == 0) return {twice / 2, 1};
    return {twice, 2};
}

/// A polynomial in the divisor classes X_i (one per ray), with at most
/// quadratic terms; encodes intersection numbers against a fixed cycle.
struct IntersectionPolynomial {
    std::map<int, Int> linear;
    std::map<std::pair<int, int>, Int> quadratic;  // keys (i, j) with i <= j

    bool operator==(const IntersectionPolynomial&) const = default;

    void add_linear(int i, Int c) {
        if (c == 0) return;
        Int& slot = linear[i];
        slot = checked_add(slot, c);
        if (slot == 0) linear.erase(i);
    }
    void add_quadratic(int i, int j, Int c) {
        if (c == 0) return;
        auto key = std::minmax(i, j);
        Int& slot = quadratic[{key.first, key.second}];
        slot = checked_add(slot, c);
        if (slot == 0) quadratic.erase({key.first, key.second});
    }
};

inline IntersectionPolynomial add_polynomials(const IntersectionPolynomial& a,
                                              const IntersectionPolynomial& b) {
    IntersectionPolynomial r = a;
    for (auto [i, c] : b.linear) r.add_linear(i, c);
    for (auto [k, c] : b.quadratic) r.add_quadratic(k.first, k.second, c);
    return r;
}

inline IntersectionPolynomial scale_polynomial(Int s, const IntersectionPolynomial& p) {
    IntersectionPolynomial r;
    for (auto [i, c] : p.linear) r.add_linear(i, checked_mul(s, c));
    for (auto [k, c] : p.quadratic) r.add_quadratic(k.first, k.second, checked_mul(s, c));
    return r;
}

/// Product of the linear parts of two polynomials.
inline IntersectionPolynomial multiply_linear(const IntersectionPolynomial& a,
                                              const IntersectionPolynomial& b) {
    IntersectionPolynomial r;
    for (auto [i, ci] : a.linear)
        for (auto [j, cj] : b.linear) r.add_quadratic(i, j, checked_mul(ci, cj));
    return r;
}

/// The intersection polynomial of a wall curve C = V(tau): the coefficient of
/// X_i is the intersection number D_i . C, read off the wall relation.
inline IntersectionPolynomial curve_polynomial(const Wall& w) {
    IntersectionPolynomial p;
    p.add_linear(w.side_a, 1);
    p.add_linear(w.side_b, 1);
    for (size_t t = 0; t < w.generators.size(); ++t) p.add_linear(w.generators[t], w.coeffs[t]);
    return p;
}

enum class StarKind { ProjectivePlane, Hirzebruch, Other };

/// The star of a codimension-2 cone tau, classified as a toric surface.
/// For a projective plane, `star_walls` holds the three line walls; for a
/// Hirzebruch surface, the fiber wall then the negative-section wall.
struct SurfaceStar {
    std::vector<int> tau;
    std::vector<int> link;  // link ray indices in cyclic order
    StarKind kind = StarKind::Other;
    Int hirzebruch_degree = 0;
    std::vector<Wall> star_walls;
};

namespace detail {

/// The wall relation v_a + v_b + sum c_t v_t = 0 for a known wall.
inline Wall solve_wall_relation(const Fan& f, std::vector<int> generators, int a, int b) {
    Wall w;
    w.generators = std::move(generators);
    w.side_a = std::min(a, b);
    w.side_b = std::max(a, b);
    std::vector<Vec> cols;
    cols.reserve(w.generators.size() + 1);
    for (int g : w.generators) cols.push_back(f.rays[static_cast<size_t>(g)]);
    cols.push_back(f.rays[static_cast<size_t>(w.side_a)]);
    Vec x = solve_unimodular_columns(cols, negate(f.rays[static_cast<size_t>(w.side_b)]));
    if (x.back() != 1) throw FanError("degenerate wall in star");
    x.pop_back();
    w.coeffs = std::move(x);
    return w;
}

}  // namespace detail

/// Classify the star of a codimension-2 cone of a smooth complete fan.
inline SurfaceStar classify_surface_star(const Fan& f, std::vector<int> tau) {
    size_t n = static_cast<size_t>(f.dim);
    std::sort(tau.begin(), tau.end());
    if (n < 2 || tau.size() != n - 2)
        throw NotACone("star classification needs a codimension-2 cone");

    std::vector<std::pair<int, int>> star_pairs;
    for (const auto& cone : f.max_cones) {
        if (!std::includes(cone.begin(), cone.end(), tau.begin(), tau.end())) continue;
        std::vector<int> rest;
        std::set_difference(cone.begin(), cone.end(), tau.begin(), tau.end(),
                            std::back_inserter(rest));
        if (rest.size() != 2) throw NotACone("repeated ray index in cone");
        star_pairs.emplace_back(rest[0], rest[1]);
    }
    if (star_pairs.empty()) throw NotACone("no maximal cone contains the given rays");

    std::map<int, std::vector<int>> neighbors;
    for (auto [x, y] : star_pairs) {
        neighbors[x].push_back(y);
        neighbors[y].push_back(x);
    }
    for (const auto& [r, ns] : neighbors)
        if (ns.size() != 2)
            throw NotACone("link ray " + std::to_string(r) + " lies in " +
                           std::to_string(ns.size()) + " star cones");

    SurfaceStar s;
    s.tau = tau;
    int start = neighbors.begin()->first;
    int prev = -1, cur = start;
    do {
        s.link.push_back(cur);
        auto& ns = neighbors[cur];
        int next = ns[0] == prev ? ns[1] : ns[0];
        prev = cur;
        cur = next;
    } while (cur != start && s.link.size() <= neighbors.size());
    if (s.link.size() != neighbors.size() || cur != start)
        throw NotACone("link of the cone is not a single cycle");

    size_t m = s.link.size();
    if (m == 3) {
        s.kind = StarKind::ProjectivePlane;
        std::vector<int> sorted_link = s.link;
        std::sort(sorted_link.begin(), sorted_link.end());
        for (int v : sorted_link) {
            std::vector<int> gens = tau;
            gens.push_back(v);
            std::sort(gens.begin(), gens.end());
            std::vector<int> sides;
            for (int u : sorted_link)
                if (u != v) sides.push_back(u);
            s.star_walls.push_back(detail::solve_wall_relation(f, gens, sides[0], sides[1]));
        }
        return s;
    }
    if (m != 4) {
        s.kind = StarKind::Other;
        return s;
    }

    // quotient coordinates from one star cone's basis
    std::vector<Vec> basis;
    for (int t : tau) basis.push_back(f.rays[static_cast<size_t>(t)]);
    auto base_pair = *std::min_element(star_pairs.begin(), star_pairs.end());
    basis.push_back(f.rays[static_cast<size_t>(base_pair.first)]);
    basis.push_back(f.rays[static_cast<size_t>(base_pair.second)]);
    std::map<int, std::pair<Int, Int>> image;
    for (int v : s.link) {
        Vec c = solve_unimodular_columns(basis, f.rays[static_cast<size_t>(v)]);
        image[v] = {c[n - 2], c[n - 1]};
    }

    auto self_intersection = [&](size_t pos) {
        auto [px, py] = image[s.link[(pos + m - 1) % m]];
        auto [qx, qy] = image[s.link[(pos + 1) % m]];
        auto [vx, vy] = image[s.link[pos]];
        Int sx = checked_add(px, qx), sy = checked_add(py, qy);
        Int c;
        if (vx != 0) {
            if (sx % vx != 0) throw FanError("non-integral star relation");
            c = -(sx / vx);
        } else {
            if (sy % vy != 0) throw FanError("non-integral star relation");
            c = -(sy / vy);
        }
        if (checked_add(sx, checked_mul(c, vx)) != 0 ||
            checked_add(sy, checked_mul(c, vy)) != 0)
            throw FanError("inconsistent star relation");
        return c;
    };

    s.kind = StarKind::Hirzebruch;
    Int a = 0;
    size_t neg_pos = 0;
    bool have = false;
    for (size_t pos = 0; pos < m; ++pos) {
        Int c = self_intersection(pos);
        if (!have || -c > a || (-c == a && s.link[pos] < s.link[neg_pos])) {
            have = true;
            a = -c;
            neg_pos = pos;
        }
    }
    if (a < 0) throw FanError("star has positive self-intersections only");
    s.hirzebruch_degree = a;
    int neg = s.link[neg_pos];
    int left = s.link[(neg_pos + m - 1) % m], right = s.link[(neg_pos + 1) % m];
    int fib = std::min(left, right);

    auto wall_for = [&](int v) {
        std::vector<int> gens = tau;
        gens.push_back(v);
        std::sort(gens.begin(), gens.end());
        size_t pos = static_cast<size_t>(std::find(s.link.begin(), s.link.end(), v) -
                                         s.link.begin());
        return detail::solve_wall_relation(f, gens, s.link[(pos + m - 1) % m],
                                           s.link[(pos + 1) % m]);
    };
    s.star_walls.push_back(wall_for(fib));
    s.star_walls.push_back(wall_for(neg));
    return s;
}

/// The quadratic intersection polynomial of the star surface.
inline IntersectionPolynomial surface_polynomial(const SurfaceStar& s) {
    if (s.kind == StarKind::ProjectivePlane) {
        IntersectionPolynomial line = curve_polynomial(s.star_walls[0]);
        for (size_t k = 1; k < 3; ++k)
            if (!(curve_polynomial(s.star_walls[k]) == line))
                throw FanError("line walls of a projective plane star disagree");
        return multiply_linear(line, line);
    }
    if (s.kind == StarKind::Hirzebruch) {
        IntersectionPolynomial fib = curve_polynomial(s.star_walls[0]);
        IntersectionPolynomial neg = curve_polynomial(s.star_walls[1]);
        IntersectionPolynomial twice = scale_polynomial(2, multiply_linear(fib, neg));
        return add_polynomials(scale_polynomial(s.hirzebruch_degree, multiply_linear(fib, fib)),
                               twice);
    }
    throw UnsupportedStar("star surface is neither a projective plane nor Hirzebruch");
}

/// ch2(X) . S for a star surface: half the sum of the X_i^2 coefficients.
inline Rational ch2_dot_surface(const SurfaceStar& s) {
    IntersectionPolynomial p = surface_polynomial(s);
    Int twice = 0;
    for (auto [k, c] : p.quadratic)
        if (k.first == k.second) twice = checked_add(twice, c);
    return half_of(twice);
}

/// ch2(X) . X for a smooth complete surface fan: half the sum of the wall
/// relation coefficients (each wall contributes its ray's self-intersection).
inline Rational ch2_dot_whole_surface(const Fan& f) {
    if (f.dim != 2) throw NotACone("whole-surface evaluation needs a 2-dimensional fan");
    Int twice = 0;
    for (const Wall& w : walls(f)) twice = checked_add(twice, w.coeffs[0]);
    return half_of(twice);
}

/// All codimension-2 subsets of maximal cones, in ascending order.
inline std::vector<std::vector<int>> codim2_cones(const Fan& f) {
    std::set<std::vector<int>> taus;
    size_t n = static_cast<size_t>(f.dim);
    if (n < 2) return {};
    for (const auto& cone : f.max_cones)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                std::vector<int> tau;
                tau.reserve(n - 2);
                for (size_t t = 0; t < n; ++t)
                    if (t != i && t != j) tau.push_back(cone[t]);
                taus.insert(std::move(tau));
            }
    return {taus.begin(), taus.end()};
}

/// Outcome of the 2-Fano test for the fan of a Fano building set.
struct TwoFanoResult {
    bool two_fano = false;
    bool has_witness = false;
    Fan scanned;                   // fan of the components with >= 2 elements
    std::vector<int> witness_tau;  // ray indices into `scanned` (empty: X itself)
    Rational ch2;                  // ch2 . S for the witness surface
};

/// A Fano building-set variety is 2-Fano iff, after discarding point factors,
/// it is a (possibly zero-dimensional) projective space.  Otherwise some star
/// surface of the remaining product has ch2 . S <= 0; the scan returns one.
inline TwoFanoResult is_two_fano(const BuildingSet& b) {
    Classification cls = building_set_fano(b);
    if (!cls.fano) throw NotFano(cls.witness);

    TwoFanoResult res;
    Mask effective = 0;
    for (const auto& [comp_mask, comp] : components(b))
        if (popcount(comp_mask) >= 2) effective |= comp_mask;
    if (effective == 0) {
        res.two_fano = true;
        res.scanned = fan_of_building_set(b);
        return res;
    }
    BuildingSet r = restriction(b, effective);
    res.scanned = fan_of_building_set(r);
    if (r.connected() && r.sets.size() == static_cast<size_t>(popcount(effective)) + 1) {
        res.two_fano = true;
        return res;
    }

    const Fan& f = res.scanned;
    if (f.dim == 2) {
        res.has_witness = true;
        res.witness_tau = {};
        res.ch2 = ch2_dot_whole_surface(f);
        return res;
    }
    for (const auto& tau : codim2_cones(f)) {
        SurfaceStar s = classify_surface_star(f, tau);
        if (s.kind == StarKind::Other) continue;
        Rational v = ch2_dot_surface(s);
        if (v.num <= 0) {
            res.has_witness = true;
            res.witness_tau = tau;
            res.ch2 = v;
            return res;
        }
    }
    return res;
}

}  // namespace toricfan
