#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "toricfan/building_set.hpp"
#include "toricfan/root_system.hpp"
#include "toricfan/subset.hpp"

namespace toricfan {

/// Result of a combinatorial Fano / weak Fano test.  When a property fails,
/// `witness` describes one violating configuration.
struct Classification {
    bool fano = false;
    bool weak_fano = false;
    std::string witness;
};

namespace detail {

inline std::vector<Mask> graph_components(const SimpleGraph& g) {
    std::vector<Mask> comps;
    Mask left = g.nodes == 0 ? 0 : full_mask(g.nodes);
    while (left) {
        Mask seed = left & (~left + 1);
        Mask comp = 0;
        Mask frontier = seed;
        while (frontier) {
            comp |= frontier;
            Mask grown = 0;
            for (int v : elements_of(frontier)) grown |= g.adj[static_cast<size_t>(v)];
            frontier = grown & ~comp;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

inline bool subset_connected(const SimpleGraph& g, Mask sub) {
    if (sub == 0) return false;
    Mask seed = sub & (~sub + 1);
    Mask comp = 0;
    Mask frontier = seed;
    while (frontier) {
        comp |= frontier;
        Mask grown = 0;
        for (int v : elements_of(frontier)) grown |= g.adj[static_cast<size_t>(v)] & sub;
        frontier = grown & ~comp;
    }
    return comp == sub;
}

/// The subgraph induced on `sub` is a cycle of length >= 4.
inline bool induces_long_cycle(const SimpleGraph& g, Mask sub) {
    if (popcount(sub) < 4) return false;
    for (int v : elements_of(sub))
        if (popcount(g.adj[static_cast<size_t>(v)] & sub) != 2) return false;
    return subset_connected(g, sub);
}

/// The subgraph induced on `sub` is a diamond (4 nodes, 5 edges).
inline bool induces_diamond(const SimpleGraph& g, Mask sub) {
    if (popcount(sub) != 4) return false;
    int twice_edges = 0;
    for (int v : elements_of(sub)) twice_edges += popcount(g.adj[static_cast<size_t>(v)] & sub);
    return twice_edges == 10;
}

/// The subgraph induced on `sub` is a claw (one degree-3 node, three leaves).
inline bool induces_claw(const SimpleGraph& g, Mask sub) {
    if (popcount(sub) != 4) return false;
    int twice_edges = 0;
    int deg3 = 0;
    for (int v : elements_of(sub)) {
        int d = popcount(g.adj[static_cast<size_t>(v)] & sub);
        twice_edges += d;
        if (d == 3) ++deg3;
    }
    return twice_edges == 6 && deg3 == 1;
}

}  // namespace detail

/// The fan of the graph associahedron is Fano iff every connected component
/// has at most three nodes.
inline Classification graph_fano(const SimpleGraph& g) {
    Classification c;
    c.fano = true;
    for (Mask comp : detail::graph_components(g))
        if (popcount(comp) > 3) {
            c.fano = false;
            c.witness = "component " + set_to_string(comp) + " has more than 3 nodes";
            break;
        }
    return c;
}

/// The fan of the graph associahedron is weak Fano iff no proper subset of a
/// connected component induces a cycle of length >= 4 or a diamond.
inline Classification graph_weak_fano(const SimpleGraph& g) {
    Classification c;
    c.weak_fano = true;
    for (Mask comp : detail::graph_components(g)) {
        if (!c.weak_fano) break;
        Mask sub = comp;
        while (sub && c.weak_fano) {
            if (sub != comp && popcount(sub) >= 4) {
                if (detail::induces_long_cycle(g, sub)) {
                    c.weak_fano = false;
                    c.witness = "proper subset " + set_to_string(sub) + " induces a cycle";
                } else if (detail::induces_diamond(g, sub)) {
                    c.weak_fano = false;
                    c.witness = "proper subset " + set_to_string(sub) + " induces a diamond";
                }
            }
            sub = (sub - 1) & comp;
        }
    }
    Classification f = graph_fano(g);
    c.fano = f.fano;
    if (!c.fano && c.witness.empty()) c.witness = f.witness;
    return c;
}

/// The fan of the graph cubeahedron is Fano iff every connected component has
/// at most two nodes.
inline Classification cubeahedron_fano(const SimpleGraph& g) {
    Classification c;
    c.fano = true;
    for (Mask comp : detail::graph_components(g))
        if (popcount(comp) > 2) {
            c.fano = false;
            c.witness = "component " + set_to_string(comp) + " has more than 2 nodes";
            break;
        }
    return c;
}

/// The fan of the graph cubeahedron is weak Fano iff no subset of the nodes
/// (proper or not) induces a cycle of length >= 4, a diamond, or a claw.
/// Equivalently, every component is the line graph of a tree.
inline Classification cubeahedron_weak_fano(const SimpleGraph& g) {
    Classification c;
    c.weak_fano = true;
    for (Mask comp : detail::graph_components(g)) {
        if (!c.weak_fano) break;
        Mask sub = comp;
        while (sub && c.weak_fano) {
            if (popcount(sub) >= 4) {
                if (detail::induces_long_cycle(g, sub)) {
                    c.weak_fano = false;
                    c.witness = "subset " + set_to_string(sub) + " induces a cycle";
                } else if (detail::induces_diamond(g, sub)) {
                    c.weak_fano = false;
                    c.witness = "subset " + set_to_string(sub) + " induces a diamond";
                } else if (detail::induces_claw(g, sub)) {
                    c.weak_fano = false;
                    c.witness = "subset " + set_to_string(sub) + " induces a claw";
                }
            }
            sub = (sub - 1) & comp;
        }
    }
    Classification f = cubeahedron_fano(g);
    c.fano = f.fano;
    if (!c.fano && c.witness.empty()) c.witness = f.witness;
    return c;
}

/// The fan of a building set is Fano iff, within each component C, every
/// overlapping incomparable pair I1, I2 of B|_C has I1 union I2 = C and
/// I1 intersect I2 in B.
inline Classification building_set_fano(const BuildingSet& b) {
    Classification c;
    c.fano = true;
    for (const auto& [comp_mask, comp] : components(b)) {
        if (!c.fano) break;
        for (size_t p = 0; p < comp.sets.size() && c.fano; ++p)
            for (size_t q = p + 1; q < comp.sets.size(); ++q) {
                Mask i1 = comp.sets[p], i2 = comp.sets[q];
                Mask meet = i1 & i2;
                if (meet == 0 || meet == i1 || meet == i2) continue;
                if ((i1 | i2) != comp_mask) {
                    c.fano = false;
                    c.witness = "pair " + set_to_string(i1) + ", " + set_to_string(i2) +
                                " does not cover component " + set_to_string(comp_mask);
                    break;
                }
                if (!comp.contains(meet)) {
                    c.fano = false;
                    c.witness = "pair " + set_to_string(i1) + ", " + set_to_string(i2) +
                                " has intersection " + set_to_string(meet) +
                                " outside the building set";
                    break;
                }
            }
    }
    return c;
}

/// The fan of a building set is weak Fano iff, within each component C, every
/// overlapping incomparable pair I1, I2 of B|_C either has I1 intersect I2 in
/// B, or has I1 union I2 = C with at most two maximal members of the
/// restriction to I1 intersect I2.
inline Classification building_set_weak_fano(const BuildingSet& b) {
    Classification c;
    c.weak_fano = true;
    for (const auto& [comp_mask, comp] : components(b)) {
        if (!c.weak_fano) break;
        for (size_t p = 0; p < comp.sets.size() && c.weak_fano; ++p)
            for (size_t q = p + 1; q < comp.sets.size(); ++q) {
                Mask i1 = comp.sets[p], i2 = comp.sets[q];
                Mask meet = i1 & i2;
                if (meet == 0 || meet == i1 || meet == i2) continue;
                if (comp.contains(meet)) continue;
                size_t blocks = restriction(b, meet).maximal().size();
                if ((i1 | i2) == comp_mask && blocks <= 2) continue;
                c.weak_fano = false;
                c.witness = "pair " + set_to_string(i1) + ", " + set_to_string(i2) +
                            " fails on intersection " + set_to_string(meet) +
                            ((i1 | i2) == comp_mask
                                 ? " (" + std::to_string(blocks) + " maximal blocks)"
                                 : " (union misses component " + set_to_string(comp_mask) + ")");
                break;
            }
    }
    Classification f = building_set_fano(b);
    c.fano = f.fano;
    if (!c.fano && c.witness.empty()) c.witness = f.witness;
    return c;
}

/// The fan of Weyl chambers is Fano iff every Cartan column sum is positive,
/// and weak Fano iff every column sum is nonnegative.
inline Classification root_system_fano_weak_fano(const RootDatum& r) {
    Classification c;
    c.fano = true;
    c.weak_fano = true;
    std::vector<Int> sums = cartan_column_degrees(r);
    for (size_t j = 0; j < sums.size(); ++j) {
        if (sums[j] < 0 && c.weak_fano) {
            c.weak_fano = false;
            c.witness = "column " + std::to_string(j + 1) + " sums to " +
                        std::to_string(sums[j]);
        }
        if (sums[j] <= 0 && c.fano) {
            c.fano = false;
            if (c.witness.empty())
                c.witness = "column " + std::to_string(j + 1) + " sums to " +
                            std::to_string(sums[j]);
        }
    }
    return c;
}

}  // namespace toricfan
