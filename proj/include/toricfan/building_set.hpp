#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "toricfan/errors.hpp"
#include "toricfan/subset.hpp"

namespace toricfan {

/// A building set on a ground set: contains every singleton and the union
/// of any two members that intersect.  The ground set is kept as a mask so
/// restrictions can stay in the labelling of the original ground set.
struct BuildingSet {
    Mask ground = 0;
    std::vector<Mask> sets;  // ascending (cardinality, value), no duplicates

    bool contains(Mask s) const {
        auto it = std::lower_bound(sets.begin(), sets.end(), s, canonical_less);
        return it != sets.end() && *it == s;
    }

    /// Inclusion-maximal members; these partition the ground set.
    std::vector<Mask> maximal() const {
        std::vector<Mask> out;
        Mask covered = 0;
        for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
            if (subset_of(*it, covered)) continue;
            out.push_back(*it);
            covered |= *it;
        }
        std::sort(out.begin(), out.end(), canonical_less);
        return out;
    }

    bool connected() const { return !sets.empty() && sets.back() == ground; }
};

namespace detail {

inline void sort_canonical(std::vector<Mask>& sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace detail

/// Check both building-set conditions and return the canonical form.
/// The family is interpreted on the given ground mask.
inline BuildingSet make_building_set(Mask ground, std::vector<Mask> family) {
    if (popcount(ground) > kMaxGroundSize)
        throw GroundSetTooLarge("ground sets are limited to 63 elements");
    detail::sort_canonical(family);
    for (Mask s : family) {
        if (s == 0) throw EmptyMember();
        if (!subset_of(s, ground))
            throw BuildingSetError("member " + set_to_string(s) +
                                   " is not a subset of the ground set");
    }
    for (Mask e = ground; e;) {
        Mask bit = e & (0 - e);
        e &= e - 1;
        if (!std::binary_search(family.begin(), family.end(), bit, canonical_less))
            throw MissingSingleton(lowest_element(bit) + 1);
    }
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j) {
            if ((family[i] & family[j]) == 0) continue;
            Mask u = family[i] | family[j];
            if (!std::binary_search(family.begin(), family.end(), u, canonical_less))
                throw NotUnionClosed(family[i], family[j],
                                     "union of intersecting members " +
                                         set_to_string(family[i]) + " and " +
                                         set_to_string(family[j]) + " is missing");
        }
    return BuildingSet{ground, std::move(family)};
}

inline BuildingSet validate_building_set(GroundSet ground, std::vector<Mask> family) {
    if (ground.size < 1 || ground.size > kMaxGroundSize)
        throw GroundSetTooLarge("ground set size must be between 1 and 63");
    return make_building_set(full_mask(ground.size), std::move(family));
}

/// B restricted to C: all members contained in C, still labelled in the
/// ground set of B.  For C in B this is itself a building set on C.
inline BuildingSet restriction(const BuildingSet& b, Mask c) {
    std::vector<Mask> out;
    for (Mask s : b.sets)
        if (subset_of(s, c)) out.push_back(s);
    return BuildingSet{c & b.ground, std::move(out)};
}

/// Connected components: one (C, B|_C) per maximal member, canonical order.
inline std::vector<std::pair<Mask, BuildingSet>> components(const BuildingSet& b) {
    std::vector<std::pair<Mask, BuildingSet>> out;
    for (Mask c : b.maximal()) out.emplace_back(c, restriction(b, c));
    return out;
}

// -- graphs -------------------------------------------------------------------

/// Undirected simple graph on nodes 1..n (stored 0-based).
struct SimpleGraph {
    int nodes = 0;
    std::vector<Mask> adj;  // adj[v] = neighbour mask

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < nodes; ++u)
            for (int v = u + 1; v < nodes; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }
};

inline SimpleGraph make_graph(int nodes, const std::vector<std::pair<int, int>>& edges0) {
    if (nodes < 0 || nodes > kMaxGroundSize)
        throw GroundSetTooLarge("graphs are limited to 63 nodes");
    SimpleGraph g;
    g.nodes = nodes;
    g.adj.assign(static_cast<size_t>(nodes), 0);
    for (auto [u, v] : edges0) {
        if (u < 0 || v < 0 || u >= nodes || v >= nodes || u == v)
            throw IoError("invalid edge (" + std::to_string(u + 1) + "," +
                          std::to_string(v + 1) + ")");
        g.adj[static_cast<size_t>(u)] |= Mask{1} << v;
        g.adj[static_cast<size_t>(v)] |= Mask{1} << u;
    }
    return g;
}

/// Is the subgraph induced on the subset connected (and nonempty)?
inline bool induced_connected(const SimpleGraph& g, Mask subset) {
    if (subset == 0) return false;
    Mask seen = subset & (0 - subset);
    for (;;) {
        Mask grow = seen;
        Mask rest = seen;
        while (rest) {
            int v = lowest_element(rest);
            rest &= rest - 1;
            grow |= g.adj[static_cast<size_t>(v)] & subset;
        }
        if (grow == seen) break;
        seen = grow;
    }
    return seen == subset;
}

/// The graphical building set B(G): subsets of V(G) inducing a connected
/// subgraph.
inline BuildingSet graphical_building_set(const SimpleGraph& g) {
    if (g.nodes < 1) throw GroundSetTooLarge("graph must have at least one node");
    if (g.nodes > 20) throw GroundSetTooLarge("graphical building sets are limited to 20 nodes");
    Mask ground = full_mask(g.nodes);
    std::vector<Mask> sets;
    for (Mask s = 1; s <= ground; ++s)
        if (induced_connected(g, s)) sets.push_back(s);
    return BuildingSet{ground, [&] {
                           detail::sort_canonical(sets);
                           return std::move(sets);
                       }()};
}

// -- nested sets ----------------------------------------------------------------

struct NestedSet {
    std::vector<Mask> members;  // canonical order

    bool operator==(const NestedSet& o) const { return members == o.members; }
};

namespace detail {

/// Can `cand` join the (already valid) nested set `members`?
/// Checks pairwise nested-or-disjoint against each member, plus the
/// antichain condition for every pairwise-disjoint subfamily through `cand`.
inline bool nested_can_add(const BuildingSet& b, const std::vector<Mask>& members,
                           Mask cand) {
    std::vector<Mask> disjoint;
    for (Mask m : members) {
        if (m == cand) return false;
        Mask inter = m & cand;
        if (inter == 0)
            disjoint.push_back(m);
        else if (inter != m && inter != cand)
            return false;  // overlapping, neither contains the other
    }
    // DFS over pairwise-disjoint subfamilies of `disjoint`; reject if any
    // union together with cand lands back in B.
    size_t k = disjoint.size();
    std::vector<std::pair<size_t, Mask>> stack;
    stack.emplace_back(0, cand);
    while (!stack.empty()) {
        auto [i, acc] = stack.back();
        stack.pop_back();
        for (size_t j = i; j < k; ++j) {
            if (disjoint[j] & acc) continue;
            Mask u = acc | disjoint[j];
            if (b.contains(u)) return false;
            stack.emplace_back(j + 1, u);
        }
    }
    return true;
}

inline std::vector<Mask> non_maximal_members(const BuildingSet& b) {
    std::vector<Mask> maxes = b.maximal();
    std::vector<Mask> out;
    for (Mask s : b.sets)
        if (!std::binary_search(maxes.begin(), maxes.end(), s, canonical_less))
            out.push_back(s);
    return out;
}

}  // namespace detail

/// The members of B \ B_max in canonical order; fan rays follow this order.
using detail::non_maximal_members;

/// Is the family a nested set of B?  Members must come from B \ B_max.
inline bool is_nested(const BuildingSet& b, const std::vector<Mask>& members) {
    std::vector<Mask> maxes = b.maximal();
    for (Mask m : members) {
        if (!b.contains(m))
            throw MemberNotInB("nested-set member " + set_to_string(m) +
                               " is not in the building set");
        if (std::binary_search(maxes.begin(), maxes.end(), m, canonical_less))
            throw MemberIsBMax("nested-set member " + set_to_string(m) +
                               " is a maximal member");
    }
    std::vector<Mask> sorted = members;
    detail::sort_canonical(sorted);
    if (sorted.size() != members.size()) return false;  // duplicate member
    std::vector<Mask> prefix;
    for (Mask m : sorted) {
        if (!detail::nested_can_add(b, prefix, m)) return false;
        prefix.push_back(m);
    }
    return true;
}

/// All nested sets of B, by depth-first extension in canonical member order.
/// The result is downward closed and starts with the empty nested set.
inline std::vector<NestedSet> nested_complex(const BuildingSet& b) {
    std::vector<Mask> cand = detail::non_maximal_members(b);
    std::vector<NestedSet> out;
    std::vector<Mask> current;
    auto dfs = [&](auto&& self, size_t start) -> void {
        out.push_back(NestedSet{current});
        for (size_t i = start; i < cand.size(); ++i) {
            if (!detail::nested_can_add(b, current, cand[i])) continue;
            current.push_back(cand[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

/// Nested sets that cannot be extended by any further member.
inline std::vector<NestedSet> maximal_nested_sets(const BuildingSet& b) {
    std::vector<Mask> cand = detail::non_maximal_members(b);
    std::vector<NestedSet> out;
    for (const NestedSet& n : nested_complex(b)) {
        bool extendable = false;
        for (Mask c : cand) {
            if (std::binary_search(n.members.begin(), n.members.end(), c, canonical_less))
                continue;
            if (detail::nested_can_add(b, n.members, c)) {
                extendable = true;
                break;
            }
        }
        if (!extendable) out.push_back(n);
    }
    return out;
}

// -- relabelling and isomorphism -------------------------------------------------

/// Apply a permutation of ground elements: element i goes to perm[i].
/// Both grounds are 0..n-1; the building set must live on a full mask.
inline Mask apply_perm(Mask s, const std::vector<int>& perm) {
    Mask out = 0;
    while (s) {
        int e = lowest_element(s);
        s &= s - 1;
        out |= Mask{1} << perm[static_cast<size_t>(e)];
    }
    return out;
}

/// Relabel a building set on an arbitrary ground mask down to {0..k-1},
/// keeping the increasing order of elements.
inline BuildingSet compact(const BuildingSet& b) {
    std::vector<int> map(64, -1);
    int next = 0;
    for (int e : elements_of(b.ground)) map[static_cast<size_t>(e)] = next++;
    std::vector<Mask> sets;
    sets.reserve(b.sets.size());
    for (Mask s : b.sets) {
        Mask t = 0;
        for (int e : elements_of(s)) t |= Mask{1} << map[static_cast<size_t>(e)];
        sets.push_back(t);
    }
    detail::sort_canonical(sets);
    return BuildingSet{full_mask(next), std::move(sets)};
}

namespace detail {

/// Invariant used to cut the permutation search: for each element, the
/// sorted list of cardinalities of the members containing it.
inline std::vector<std::vector<int>> element_profiles(const BuildingSet& b) {
    int n = popcount(b.ground);
    std::vector<std::vector<int>> prof(static_cast<size_t>(n));
    for (Mask s : b.sets)
        for (int e : elements_of(s)) prof[static_cast<size_t>(e)].push_back(popcount(s));
    for (auto& p : prof) std::sort(p.begin(), p.end());
    return prof;
}

}  // namespace detail

/// Canonical representative of the isomorphism class: the minimum, over all
/// ground permutations compatible with element profiles, of the sorted list
/// of member masks.  Two building sets are isomorphic iff the forms agree.
inline std::vector<Mask> canonical_form(const BuildingSet& b0) {
    BuildingSet b = compact(b0);
    int n = popcount(b.ground);
    auto prof = detail::element_profiles(b);
    // Group elements whose profiles agree; only permutations preserving the
    // grouping can map the family to itself or anything smaller.
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int c) { return prof[static_cast<size_t>(a)] < prof[static_cast<size_t>(c)]; });
    std::vector<std::vector<int>> classes;
    for (int e : order) {
        if (!classes.empty() &&
            prof[static_cast<size_t>(classes.back().back())] == prof[static_cast<size_t>(e)])
            classes.back().push_back(e);
        else
            classes.push_back({e});
    }
    std::vector<Mask> best;
    std::vector<int> perm(static_cast<size_t>(n));
    std::vector<Mask> image;
    // targets: class k occupies a fixed block of target positions
    std::vector<int> target_start(classes.size());
    {
        int pos = 0;
        for (size_t k = 0; k < classes.size(); ++k) {
            target_start[k] = pos;
            pos += static_cast<int>(classes[k].size());
        }
    }
    auto emit = [&] {
        image.clear();
        image.reserve(b.sets.size());
        for (Mask s : b.sets) image.push_back(apply_perm(s, perm));
        std::sort(image.begin(), image.end(), canonical_less);
        if (best.empty() || image < best) best = image;
    };
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == classes.size()) {
            emit();
            return;
        }
        std::vector<int> cls = classes[k];
        std::sort(cls.begin(), cls.end());
        do {
            for (size_t i = 0; i < cls.size(); ++i)
                perm[static_cast<size_t>(cls[i])] = target_start[k] + static_cast<int>(i);
            self(self, k + 1);
        } while (std::next_permutation(cls.begin(), cls.end()));
    };
    rec(rec, 0);
    return best;
}

inline bool isomorphic(const BuildingSet& a, const BuildingSet& b) {
    if (popcount(a.ground) != popcount(b.ground) || a.sets.size() != b.sets.size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace toricfan
