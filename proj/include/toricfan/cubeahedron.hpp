#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "toricfan/building_set.hpp"
#include "toricfan/errors.hpp"
#include "toricfan/fan.hpp"
#include "toricfan/subset.hpp"

namespace toricfan {

/// A facet label of the graph cubeahedron: either a tube (an induced
/// connected subset of nodes) or a bar (a single node).
struct CubeLabel {
    bool is_bar = false;
    Mask tube = 0;  // valid when !is_bar
    int node = -1;  // valid when is_bar, 0-based

    static CubeLabel make_tube(Mask t) { return {false, t, -1}; }
    static CubeLabel make_bar(int i) { return {true, 0, i}; }
};

inline std::string cube_label_string(const CubeLabel& l) {
    return l.is_bar ? "~" + std::to_string(l.node + 1) : set_label(l.tube);
}

/// Two labels are compatible iff their facets intersect:
///  - tube/tube: nested, or the union is not itself a tube;
///  - tube/bar: the bar's node lies outside the tube;
///  - bar/bar: always.
inline bool labels_compatible(const SimpleGraph& g, const CubeLabel& a, const CubeLabel& b) {
    if (a.is_bar && b.is_bar) return true;
    if (a.is_bar) return !(b.tube >> a.node & 1);
    if (b.is_bar) return !(a.tube >> b.node & 1);
    if (subset_of(a.tube, b.tube) || subset_of(b.tube, a.tube)) return true;
    return !induced_connected(g, a.tube | b.tube);
}

namespace detail {

/// Fixed-width bitset over label indices, sized at construction.
struct LabelSet {
    std::vector<uint64_t> bits;

    explicit LabelSet(size_t blocks = 0) : bits(blocks, 0) {}

    bool test(size_t i) const { return bits[i >> 6] >> (i & 63) & 1; }
    void set(size_t i) { bits[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(size_t i) { bits[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool empty() const {
        for (uint64_t b : bits)
            if (b) return false;
        return true;
    }
    size_t count() const {
        size_t c = 0;
        for (uint64_t b : bits) c += static_cast<size_t>(popcount(b));
        return c;
    }
    LabelSet intersect(const LabelSet& o) const {
        LabelSet r(bits.size());
        for (size_t k = 0; k < bits.size(); ++k) r.bits[k] = bits[k] & o.bits[k];
        return r;
    }
    LabelSet minus(const LabelSet& o) const {
        LabelSet r(bits.size());
        for (size_t k = 0; k < bits.size(); ++k) r.bits[k] = bits[k] & ~o.bits[k];
        return r;
    }
    template <class F>
    void for_each(F f) const {
        for (size_t k = 0; k < bits.size(); ++k) {
            uint64_t b = bits[k];
            while (b) {
                f((k << 6) + static_cast<size_t>(lowest_element(b)));
                b &= b - 1;
            }
        }
    }
    int first() const {
        for (size_t k = 0; k < bits.size(); ++k)
            if (bits[k]) return static_cast<int>((k << 6) + lowest_element(bits[k]));
        return -1;
    }
};

inline void maximal_cliques(const std::vector<LabelSet>& adj, LabelSet r, LabelSet p, LabelSet x,
                            std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        std::vector<int> clique;
        r.for_each([&](size_t i) { clique.push_back(static_cast<int>(i)); });
        out.push_back(std::move(clique));
        return;
    }
    size_t pivot = 0, best = 0;
    bool have = false;
    auto consider = [&](size_t u) {
        size_t deg = p.intersect(adj[u]).count();
        if (!have || deg > best) {
            have = true;
            best = deg;
            pivot = u;
        }
    };
    p.for_each(consider);
    x.for_each(consider);
    LabelSet candidates = p.minus(adj[pivot]);
    std::vector<size_t> order;
    candidates.for_each([&](size_t v) { order.push_back(v); });
    for (size_t v : order) {
        LabelSet r2 = r;
        r2.set(v);
        maximal_cliques(adj, std::move(r2), p.intersect(adj[v]), x.intersect(adj[v]), out);
        p.reset(v);
        x.set(v);
    }
}

}  // namespace detail

/// All cubeahedron labels of g: tubes in canonical order, then bars by node.
inline std::vector<CubeLabel> cubeahedron_labels(const SimpleGraph& g) {
    BuildingSet tubes = graphical_building_set(g);
    std::vector<CubeLabel> labels;
    labels.reserve(tubes.sets.size() + static_cast<size_t>(g.nodes));
    for (Mask t : tubes.sets) labels.push_back(CubeLabel::make_tube(t));
    for (int i = 0; i < g.nodes; ++i) labels.push_back(CubeLabel::make_bar(i));
    return labels;
}

/// The toric fan of the graph cubeahedron in Z^n, n the number of nodes.
/// Rays are e_I per tube I and -e_i per bar i; maximal cones are the maximal
/// sets of pairwise compatible labels (the complex is flag).
inline Fan cubeahedron_fan(const SimpleGraph& g) {
    if (g.nodes > 12)
        throw GroundSetTooLarge("cubeahedron fan construction is limited to 12 nodes, got " +
                                std::to_string(g.nodes));
    std::vector<CubeLabel> labels = cubeahedron_labels(g);
    size_t m = labels.size();
    size_t blocks = (m + 63) / 64;
    std::vector<detail::LabelSet> adj(m, detail::LabelSet(blocks));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (labels_compatible(g, labels[i], labels[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }

    detail::LabelSet all(blocks);
    for (size_t i = 0; i < m; ++i) all.set(i);
    std::vector<std::vector<int>> cliques;
    detail::maximal_cliques(adj, detail::LabelSet(blocks), all, detail::LabelSet(blocks),
                            cliques);

    size_t n = static_cast<size_t>(g.nodes);
    for (const auto& c : cliques)
        if (c.size() != n)
            throw FanError("maximal compatible set of size " + std::to_string(c.size()) +
                           " in dimension " + std::to_string(n));
    std::sort(cliques.begin(), cliques.end());

    Fan f;
    f.dim = g.nodes;
    f.rays.reserve(m);
    f.labels.reserve(m);
    for (const CubeLabel& l : labels) {
        Vec v(n, 0);
        if (l.is_bar)
            v[static_cast<size_t>(l.node)] = -1;
        else
            for (int e : elements_of(l.tube)) v[static_cast<size_t>(e)] = 1;
        f.rays.push_back(std::move(v));
        f.labels.push_back(cube_label_string(l));
    }
    f.max_cones = std::move(cliques);
    return f;
}

}  // namespace toricfan
