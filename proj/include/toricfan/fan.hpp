#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "toricfan/building_set.hpp"
#include "toricfan/errors.hpp"
#include "toricfan/lattice.hpp"
#include "toricfan/subset.hpp"

namespace toricfan {

/// A rational simplicial fan in Z^dim, given by primitive ray generators and
/// maximal cones as sorted lists of ray indices.
struct Fan {
    int dim = 0;
    std::vector<Vec> rays;
    std::vector<std::vector<int>> max_cones;
    std::vector<std::string> labels;  // optional, parallel to rays
};

// -- construction from building sets ------------------------------------------

namespace detail {

/// Fan of a connected building set, in the coordinates where the elements of
/// the ground mask, taken in increasing order, play the roles 1..n+1 and the
/// last one carries -(e_1 + ... + e_n).
inline Fan connected_building_set_fan(const BuildingSet& b) {
    std::vector<int> elems = elements_of(b.ground);
    int n = static_cast<int>(elems.size()) - 1;
    std::vector<int> local(64, -1);
    for (size_t i = 0; i < elems.size(); ++i)
        local[static_cast<size_t>(elems[i])] = static_cast<int>(i);

    Fan f;
    f.dim = n;
    auto ray_of = [&](Mask s) {
        Vec v(static_cast<size_t>(n), 0);
        for (int e : elements_of(s)) {
            int i = local[static_cast<size_t>(e)];
            if (i < n)
                v[static_cast<size_t>(i)] = checked_add(v[static_cast<size_t>(i)], 1);
            else
                for (auto& x : v) x = checked_add(x, -1);
        }
        return v;
    };

    std::map<Mask, int> index_of;
    for (Mask s : b.sets) {
        if (s == b.ground) continue;
        index_of.emplace(s, -1);
    }
    {
        // canonical ray order: by (cardinality, value) of the subset
        std::vector<Mask> ordered;
        ordered.reserve(index_of.size());
        for (auto& [s, _] : index_of) ordered.push_back(s);
        std::sort(ordered.begin(), ordered.end(), canonical_less);
        for (size_t i = 0; i < ordered.size(); ++i) {
            index_of[ordered[i]] = static_cast<int>(i);
            f.rays.push_back(ray_of(ordered[i]));
            f.labels.push_back(set_label(ordered[i]));
        }
    }
    for (const NestedSet& nst : maximal_nested_sets(b)) {
        std::vector<int> cone;
        cone.reserve(nst.members.size());
        for (Mask m : nst.members) cone.push_back(index_of.at(m));
        std::sort(cone.begin(), cone.end());
        f.max_cones.push_back(std::move(cone));
    }
    std::sort(f.max_cones.begin(), f.max_cones.end());
    return f;
}

}  // namespace detail

/// Product fan: coordinate blocks and ray lists are concatenated, and every
/// combination of maximal cones contributes a maximal cone.
inline Fan fan_product(const std::vector<Fan>& factors) {
    Fan f;
    f.max_cones.push_back({});
    bool any_labels = false;
    for (const Fan& g : factors)
        if (!g.labels.empty()) any_labels = true;
    for (const Fan& g : factors) {
        int coord_off = f.dim;
        int ray_off = static_cast<int>(f.rays.size());
        f.dim += g.dim;
        for (auto& r : f.rays) r.resize(static_cast<size_t>(f.dim), 0);
        for (const Vec& r : g.rays) {
            Vec v(static_cast<size_t>(f.dim), 0);
            std::copy(r.begin(), r.end(), v.begin() + coord_off);
            f.rays.push_back(std::move(v));
        }
        if (any_labels)
            for (size_t i = 0; i < g.rays.size(); ++i)
                f.labels.push_back(i < g.labels.size() ? g.labels[i] : "");
        std::vector<std::vector<int>> combined;
        combined.reserve(f.max_cones.size() * std::max<size_t>(g.max_cones.size(), 1));
        for (const auto& left : f.max_cones)
            for (const auto& right : g.max_cones) {
                std::vector<int> cone = left;
                for (int idx : right) cone.push_back(idx + ray_off);
                combined.push_back(std::move(cone));
            }
        f.max_cones = std::move(combined);
    }
    for (auto& c : f.max_cones) std::sort(c.begin(), c.end());
    std::sort(f.max_cones.begin(), f.max_cones.end());
    return f;
}

/// The fan of a building set: rays e_I for the non-maximal members, maximal
/// cones from maximal nested sets, and a product over connected components.
inline Fan fan_of_building_set(const BuildingSet& b) {
    if (popcount(b.ground) > 14)
        throw GroundSetTooLarge("fan construction is limited to 14 ground elements");
    auto comps = components(b);
    if (comps.size() == 1) return detail::connected_building_set_fan(comps[0].second);
    std::vector<Fan> factors;
    factors.reserve(comps.size());
    for (auto& [c, bc] : comps) factors.push_back(detail::connected_building_set_fan(bc));
    return fan_product(factors);
}

// -- smoothness and completeness ------------------------------------------------

inline bool is_smooth(const Fan& f) {
    for (const auto& cone : f.max_cones) {
        if (static_cast<int>(cone.size()) < f.dim)
            throw NonMaximalDimensionCone("maximal cone with " +
                                          std::to_string(cone.size()) + " rays in dimension " +
                                          std::to_string(f.dim));
        std::vector<Vec> cols;
        cols.reserve(cone.size());
        for (int i : cone) cols.push_back(f.rays[static_cast<size_t>(i)]);
        Int d = det_columns(cols);
        if (d != 1 && d != -1) return false;
    }
    return true;
}

namespace detail {

/// facet (sorted ray-index subset of size dim-1) -> cones sharing it, with
/// the ray each cone drops.
inline std::map<std::vector<int>, std::vector<std::pair<int, int>>> facet_map(const Fan& f) {
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> facets;
    for (size_t ci = 0; ci < f.max_cones.size(); ++ci) {
        const auto& cone = f.max_cones[ci];
        for (size_t drop = 0; drop < cone.size(); ++drop) {
            std::vector<int> facet;
            facet.reserve(cone.size() - 1);
            for (size_t j = 0; j < cone.size(); ++j)
                if (j != drop) facet.push_back(cone[j]);
            facets[facet].emplace_back(static_cast<int>(ci), cone[drop]);
        }
    }
    return facets;
}

}  // namespace detail

/// Completeness test for a smooth simplicial fan: every facet of a maximal
/// cone is shared by exactly two of them and the dual graph is connected.
inline bool is_complete(const Fan& f) {
    if (f.max_cones.empty()) return false;
    if (f.dim == 0) return f.max_cones.size() == 1;
    auto facets = detail::facet_map(f);
    std::vector<std::vector<int>> dual(f.max_cones.size());
    for (auto& [facet, owners] : facets) {
        if (owners.size() != 2) return false;
        dual[static_cast<size_t>(owners[0].first)].push_back(owners[1].first);
        dual[static_cast<size_t>(owners[1].first)].push_back(owners[0].first);
    }
    std::vector<char> seen(f.max_cones.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int d : dual[static_cast<size_t>(c)])
            if (!seen[static_cast<size_t>(d)]) {
                seen[static_cast<size_t>(d)] = 1;
                stack.push_back(d);
            }
    }
    for (char s : seen)
        if (!s) return false;
    return true;
}

// -- walls ------------------------------------------------------------------------

/// A wall: a shared facet tau of two maximal cones tau+{a} and tau+{b},
/// together with the unique relation  v_a + v_b + sum coeffs[i] * v_gen[i] = 0.
struct Wall {
    std::vector<int> generators;  // ray indices of tau, ascending
    int side_a = -1;              // ray index, side_a < side_b
    int side_b = -1;
    std::vector<Int> coeffs;  // aligned with generators
};

/// All walls of a smooth complete fan, in canonical (generators, sides) order.
inline std::vector<Wall> walls(const Fan& f) {
    if (!is_smooth(f)) throw NotSmooth("wall relations require a smooth fan");
    auto facets = detail::facet_map(f);
    std::vector<Wall> out;
    for (auto& [facet, owners] : facets) {
        if (owners.size() != 2)
            throw NotComplete("facet shared by " + std::to_string(owners.size()) +
                              " maximal cones");
        Wall w;
        w.generators = facet;
        w.side_a = std::min(owners[0].second, owners[1].second);
        w.side_b = std::max(owners[0].second, owners[1].second);
        // Solve [gen..., v_a] x = -v_b; the last coordinate must be 1.
        std::vector<Vec> cols;
        cols.reserve(facet.size() + 1);
        for (int g : facet) cols.push_back(f.rays[static_cast<size_t>(g)]);
        cols.push_back(f.rays[static_cast<size_t>(w.side_a)]);
        Vec x = solve_unimodular_columns(cols, negate(f.rays[static_cast<size_t>(w.side_b)]));
        if (x.back() != 1)
            throw FanError("degenerate wall: opposite rays are not on opposite sides");
        x.pop_back();
        w.coeffs = std::move(x);
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(), [](const Wall& a, const Wall& b) {
        if (a.generators != b.generators) return a.generators < b.generators;
        return std::make_pair(a.side_a, a.side_b) < std::make_pair(b.side_a, b.side_b);
    });
    return out;
}

/// Anticanonical degree of the curve of a wall: 2 plus the relation coefficients.
inline Int anticanonical_degree(const Wall& w) {
    Int s = 2;
    for (Int c : w.coeffs) s = checked_add(s, c);
    return s;
}

inline bool is_fano_oracle(const Fan& f) {
    if (!is_complete(f)) throw NotComplete("Fano test requires a complete fan");
    for (const Wall& w : walls(f))
        if (anticanonical_degree(w) <= 0) return false;
    return true;
}

inline bool is_weak_fano_oracle(const Fan& f) {
    if (!is_complete(f)) throw NotComplete("Fano test requires a complete fan");
    for (const Wall& w : walls(f))
        if (anticanonical_degree(w) < 0) return false;
    return true;
}

/// Per wall, the number of negative coefficients in the full relation
/// (the two side coefficients are 1 and never count).
inline std::vector<int> wall_negative_coefficient_counts(const Fan& f) {
    std::vector<int> out;
    for (const Wall& w : walls(f)) {
        int neg = 0;
        for (Int c : w.coeffs)
            if (c < 0) ++neg;
        out.push_back(neg);
    }
    return out;
}

// -- combinatorial wall degrees ------------------------------------------------------

/// Anticanonical degree of the wall spanned by a nested set N, where N+{I1}
/// and N+{I2} are maximal nested sets of a connected building set: find the
/// members I3..Ik of N that are pairwise disjoint, disjoint from I1 and I2,
/// and complete the union to a member of N (or to the ground set); then the
/// degree is k - |(B|_{I1 cap I2})_max| - 1, with no -1 in the ground-set case.
inline Int building_set_wall_degree(const BuildingSet& b, const std::vector<Mask>& nested,
                                    Mask i1, Mask i2) {
    if (!b.connected())
        throw NotAWallConfiguration("wall degrees are defined for connected building sets");
    if (i1 == i2) throw NotAWallConfiguration("the two sides of a wall must differ");
    auto with = [&](Mask extra) {
        std::vector<Mask> m = nested;
        m.push_back(extra);
        return m;
    };
    std::vector<Mask> maxes = b.maximal();
    size_t want = static_cast<size_t>(popcount(b.ground)) - maxes.size();
    for (Mask side : {i1, i2}) {
        std::vector<Mask> m = with(side);
        if (m.size() != want || !is_nested(b, m))
            throw NotAWallConfiguration("N plus " + set_to_string(side) +
                                        " is not a maximal nested set");
    }

    Mask base = i1 | i2;
    std::vector<Mask> candidates;
    for (Mask m : nested)
        if ((m & base) == 0) candidates.push_back(m);

    // Search pairwise-disjoint subfamilies whose union completes base to a
    // member of N or to the ground set; exactly one exists.
    size_t cnt = candidates.size();
    for (Mask pick = 0; pick < (Mask{1} << cnt); ++pick) {
        Mask u = base;
        bool ok = true;
        int extra = 0;
        for (size_t j = 0; j < cnt && ok; ++j) {
            if (!((pick >> j) & 1)) continue;
            if (candidates[j] & u) ok = false;
            u |= candidates[j];
            ++extra;
        }
        if (!ok) continue;
        bool in_nested =
            std::find(nested.begin(), nested.end(), u) != nested.end();
        bool is_ground = (u == b.ground);
        if (!in_nested && !is_ground) continue;
        Int k = 2 + extra;
        Mask inter = i1 & i2;
        Int m = inter == 0
                    ? 0
                    : static_cast<Int>(restriction(b, inter).maximal().size());
        return in_nested ? k - m - 1 : k - m;
    }
    throw NotAWallConfiguration("no completion of I1 | I2 inside N or the ground set");
}

// -- canonical form ---------------------------------------------------------------

/// Canonical form of a smooth complete fan under lattice isomorphism: for each
/// maximal cone and each ordering of its rays, map that basis to the standard
/// one, sort the transformed rays, and keep the lexicographically smallest
/// (rays, cones) description.  Two fans are isomorphic iff the strings agree.
inline std::string fan_normal_form(const Fan& f) {
    if (!is_smooth(f)) throw NotSmooth("fan canonical form requires a smooth fan");
    size_t n = static_cast<size_t>(f.dim);
    std::vector<Vec> best_rays;
    std::vector<std::vector<int>> best_cones;
    bool have = false;
    std::vector<int> order;
    for (const auto& cone : f.max_cones) {
        order = cone;
        std::sort(order.begin(), order.end());
        do {
            IntMatrix basis(n, Vec(n));
            for (size_t j = 0; j < n; ++j)
                for (size_t i = 0; i < n; ++i)
                    basis[i][j] = f.rays[static_cast<size_t>(order[j])][i];
            IntMatrix inv = inverse_unimodular(basis);
            std::vector<Vec> rays;
            rays.reserve(f.rays.size());
            for (const Vec& r : f.rays) rays.push_back(mat_vec(inv, r));
            std::vector<int> rank(f.rays.size());
            std::iota(rank.begin(), rank.end(), 0);
            std::sort(rank.begin(), rank.end(),
                      [&](int a, int c) { return rays[static_cast<size_t>(a)] < rays[static_cast<size_t>(c)]; });
            std::vector<int> where(f.rays.size());
            std::vector<Vec> sorted_rays(f.rays.size());
            for (size_t i = 0; i < rank.size(); ++i) {
                where[static_cast<size_t>(rank[i])] = static_cast<int>(i);
                sorted_rays[i] = rays[static_cast<size_t>(rank[i])];
            }
            std::vector<std::vector<int>> cones;
            cones.reserve(f.max_cones.size());
            for (const auto& c : f.max_cones) {
                std::vector<int> cc;
                cc.reserve(c.size());
                for (int i : c) cc.push_back(where[static_cast<size_t>(i)]);
                std::sort(cc.begin(), cc.end());
                cones.push_back(std::move(cc));
            }
            std::sort(cones.begin(), cones.end());
            if (!have || std::make_pair(sorted_rays, cones) <
                             std::make_pair(best_rays, best_cones)) {
                best_rays = std::move(sorted_rays);
                best_cones = std::move(cones);
                have = true;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    std::string s = "fan;d=" + std::to_string(f.dim) + ";r=";
    for (const Vec& r : best_rays) s += vec_to_string(r);
    s += ";c=";
    for (const auto& c : best_cones) {
        s += "[";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        s += "]";
    }
    return s;
}

}  // namespace toricfan
