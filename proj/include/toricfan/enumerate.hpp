#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toricfan/building_set.hpp"
#include "toricfan/criteria.hpp"
#include "toricfan/cubeahedron.hpp"
#include "toricfan/errors.hpp"
#include "toricfan/fan.hpp"
#include "toricfan/parallel.hpp"
#include "toricfan/polytope.hpp"
#include "toricfan/root_system.hpp"
#include "toricfan/subset.hpp"

namespace toricfan {

namespace detail {

/// Pack edge {i, j}, i < j, into a bit position.
inline int edge_bit(int n, int i, int j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

inline uint64_t edge_mask_of(const SimpleGraph& g) {
    uint64_t mask = 0;
    for (auto [i, j] : g.edges()) mask |= uint64_t(1) << edge_bit(g.nodes, i, j);
    return mask;
}

inline SimpleGraph graph_from_edge_mask(int n, uint64_t mask) {
    SimpleGraph g;
    g.nodes = n;
    g.adj.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask >> edge_bit(n, i, j) & 1) {
                g.adj[static_cast<size_t>(i)] |= Mask(1) << j;
                g.adj[static_cast<size_t>(j)] |= Mask(1) << i;
            }
    return g;
}

/// Node classes by (degree, sorted neighbor degrees); isomorphisms preserve
/// them, so canonicalization only needs class-preserving relabelings.
inline std::vector<std::vector<int>> graph_classes(const SimpleGraph& g) {
    std::vector<int> deg(static_cast<size_t>(g.nodes));
    for (int v = 0; v < g.nodes; ++v) deg[static_cast<size_t>(v)] = popcount(g.adj[static_cast<size_t>(v)]);
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
    for (int v = 0; v < g.nodes; ++v) {
        std::vector<int> nd;
        for (int u : elements_of(g.adj[static_cast<size_t>(v)])) nd.push_back(deg[static_cast<size_t>(u)]);
        std::sort(nd.begin(), nd.end());
        groups[{deg[static_cast<size_t>(v)], nd}].push_back(v);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [profile, nodes] : groups) classes.push_back(std::move(nodes));
    return classes;
}

/// Lexicographically minimal edge mask over class-preserving relabelings.
/// Positions are assigned to classes in profile order, so equal masks
/// characterize isomorphic graphs.
inline uint64_t canonical_edge_mask(const SimpleGraph& g) {
    std::vector<std::vector<int>> classes = graph_classes(g);
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::vector<std::vector<int>> arrangement = classes;
    uint64_t best = ~uint64_t(0);
    bool first = true;
    while (true) {
        std::vector<int> position(static_cast<size_t>(g.nodes));
        int pos = 0;
        for (const auto& c : arrangement)
            for (int v : c) position[static_cast<size_t>(v)] = pos++;
        uint64_t mask = 0;
        for (auto [i, j] : g.edges()) {
            int a = position[static_cast<size_t>(i)], b = position[static_cast<size_t>(j)];
            mask |= uint64_t(1) << edge_bit(g.nodes, std::min(a, b), std::max(a, b));
        }
        if (first || mask < best) {
            best = mask;
            first = false;
        }
        size_t k = 0;
        while (k < arrangement.size() &&
               !std::next_permutation(arrangement[k].begin(), arrangement[k].end()))
            ++k;
        if (k == arrangement.size()) break;
    }
    return best;
}

inline bool graph_connected(const SimpleGraph& g) {
    return g.nodes >= 1 && graph_components(g).size() == 1;
}

}  // namespace detail

/// All isomorphism classes of simple graphs on n nodes, by extending every
/// class on n-1 nodes with one more vertex.
inline std::vector<SimpleGraph> enumerate_graphs(int n) {
    if (n < 1 || n > 8)
        throw TooLarge("graph enumeration supports 1 to 8 nodes, got " + std::to_string(n));
    std::vector<SimpleGraph> current;
    {
        SimpleGraph g;
        g.nodes = 1;
        g.adj = {0};
        current.push_back(g);
    }
    for (int k = 2; k <= n; ++k) {
        std::set<uint64_t> seen;
        std::vector<SimpleGraph> next;
        for (const SimpleGraph& base : current)
            for (Mask nbrs = 0; nbrs < (Mask(1) << (k - 1)); ++nbrs) {
                SimpleGraph g;
                g.nodes = k;
                g.adj = base.adj;
                g.adj.push_back(nbrs);
                for (int v : elements_of(nbrs)) g.adj[static_cast<size_t>(v)] |= Mask(1) << (k - 1);
                uint64_t key = detail::canonical_edge_mask(g);
                if (seen.insert(key).second) next.push_back(std::move(g));
            }
        current = std::move(next);
    }
    return current;
}

inline std::vector<SimpleGraph> enumerate_connected_graphs(int n) {
    std::vector<SimpleGraph> all = enumerate_graphs(n);
    std::vector<SimpleGraph> out;
    for (auto& g : all)
        if (detail::graph_connected(g)) out.push_back(std::move(g));
    return out;
}

/// All labeled building sets on {1..n}, by depth-first search over the
/// non-singleton subsets in canonical order.  Unions of overlapping chosen
/// members are forced in (they come later in the order), so exactly the
/// union-closed families are visited.  With fano_filter the pair condition
/// for Fano fans prunes the search exactly.
inline std::vector<BuildingSet> enumerate_labeled_building_sets(int n, bool connected_only,
                                                                bool fano_filter) {
    if (n < 1 || n > (fano_filter ? 6 : 5))
        throw TooLarge("building set enumeration supports n <= " +
                       std::string(fano_filter ? "6" : "5") + ", got " + std::to_string(n));
    Mask ground = full_mask(n);
    std::vector<Mask> candidates;
    for (Mask s = 1; s <= ground; ++s)
        if (popcount(s) >= 2) candidates.push_back(s);
    std::sort(candidates.begin(), candidates.end(), canonical_less);

    std::vector<BuildingSet> out;
    std::vector<Mask> chosen;
    std::vector<char> chosen_has(size_t(1) << n, 0);
    std::vector<char> required(size_t(1) << n, 0);

    std::function<void(size_t)> walk = [&](size_t i) {
        if (i == candidates.size()) {
            if (connected_only && !(chosen.empty() ? n == 1 : chosen.back() == ground)) return;
            BuildingSet b;
            b.ground = ground;
            for (int e = 0; e < n; ++e) b.sets.push_back(Mask(1) << e);
            b.sets.insert(b.sets.end(), chosen.begin(), chosen.end());
            detail::sort_canonical(b.sets);
            if (fano_filter && !connected_only && !building_set_fano(b).fano) return;
            out.push_back(std::move(b));
            return;
        }
        Mask c = candidates[i];
        if (!required[c]) walk(i + 1);

        if (fano_filter) {
            for (Mask m : chosen) {
                Mask meet = c & m;
                if (meet == 0 || meet == c || meet == m) continue;
                if (popcount(meet) >= 2 && !chosen_has[meet]) return;
                if (connected_only && (c | m) != ground) return;
            }
        }
        std::vector<Mask> newly_required;
        for (Mask m : chosen) {
            if ((c & m) == 0) continue;
            Mask u = c | m;
            if (u == c || u == m) continue;
            if (!chosen_has[u] && !required[u]) {
                required[u] = 1;
                newly_required.push_back(u);
            }
        }
        chosen.push_back(c);
        chosen_has[c] = 1;
        walk(i + 1);
        chosen.pop_back();
        chosen_has[c] = 0;
        for (Mask u : newly_required) required[u] = 0;
    };
    walk(0);
    return out;
}

/// Isomorphism classes of building sets on n elements, in a deterministic
/// order (by canonical form).
inline std::vector<BuildingSet> enumerate_building_sets(int n, bool connected_only,
                                                        bool fano_filter) {
    std::map<std::vector<Mask>, BuildingSet> classes;
    for (BuildingSet& b : enumerate_labeled_building_sets(n, connected_only, fano_filter))
        classes.try_emplace(canonical_form(b), std::move(b));
    std::vector<BuildingSet> out;
    out.reserve(classes.size());
    for (auto& [key, b] : classes) out.push_back(std::move(b));
    return out;
}

namespace detail {

inline BuildingSet shift_building_set(const BuildingSet& b, int offset) {
    BuildingSet s;
    s.ground = b.ground << offset;
    for (Mask m : b.sets) s.sets.push_back(m << offset);
    return s;
}

inline BuildingSet disjoint_union(const std::vector<const BuildingSet*>& parts) {
    BuildingSet u;
    int offset = 0;
    for (const BuildingSet* p : parts) {
        BuildingSet s = shift_building_set(*p, offset);
        u.ground |= s.ground;
        u.sets.insert(u.sets.end(), s.sets.begin(), s.sets.end());
        offset += popcount(p->ground);
    }
    sort_canonical(u.sets);
    return u;
}

inline std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// All multisets of classes matching a descending partition: one class index
/// per part, nondecreasing within runs of equal parts.
inline std::vector<std::vector<std::pair<int, int>>> partition_combos(
    const std::vector<int>& partition, const std::function<size_t(int)>& classes_for) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == partition.size()) {
            out.push_back(cur);
            return;
        }
        int part = partition[pos];
        size_t count = classes_for(part);
        int start = (pos > 0 && partition[pos - 1] == part) ? cur.back().second : 0;
        for (int ci = start; ci < static_cast<int>(count); ++ci) {
            cur.emplace_back(part, ci);
            rec(pos + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace detail

/// All isomorphism classes of building sets on exactly n elements, composed
/// from connected classes per component.  Agrees with direct enumeration.
inline std::vector<BuildingSet> all_building_set_classes(int n) {
    if (n < 1 || n > 5) throw TooLarge("class composition supports n <= 5");
    std::map<int, std::vector<BuildingSet>> connected;
    for (int k = 1; k <= n; ++k) connected[k] = enumerate_building_sets(k, true, false);
    std::vector<BuildingSet> out;
    for (const auto& partition : detail::partitions_of(n))
        for (const auto& combo : detail::partition_combos(
                 partition, [&](int part) { return connected[part].size(); })) {
            std::vector<const BuildingSet*> parts;
            for (auto [part, ci] : combo)
                parts.push_back(&connected[part][static_cast<size_t>(ci)]);
            out.push_back(detail::disjoint_union(parts));
        }
    return out;
}

struct ReportRow {
    int param = 0;
    long long total = 0;
    long long positive = 0;
};

struct EnumerationReport {
    std::vector<ReportRow> rows;
};

/// Connected graphs per node count, with how many have weak Fano
/// associahedron fans.
inline EnumerationReport table1(int jobs = 1) {
    EnumerationReport rep;
    for (int n = 1; n <= 6; ++n) {
        std::vector<SimpleGraph> graphs = enumerate_connected_graphs(n);
        std::vector<char> good = parallel_map<char>(graphs.size(), jobs, [&](size_t i) {
            return static_cast<char>(graph_weak_fano(graphs[i]).weak_fano);
        });
        ReportRow row;
        row.param = n;
        row.total = static_cast<long long>(graphs.size());
        for (char c : good) row.positive += c;
        rep.rows.push_back(row);
    }
    return rep;
}

/// Connected graphs per node count, with how many have weak Fano cubeahedron
/// fans.
inline EnumerationReport table3(int jobs = 1) {
    EnumerationReport rep;
    for (int n = 1; n <= 6; ++n) {
        std::vector<SimpleGraph> graphs = enumerate_connected_graphs(n);
        std::vector<char> good = parallel_map<char>(graphs.size(), jobs, [&](size_t i) {
            return static_cast<char>(cubeahedron_weak_fano(graphs[i]).weak_fano);
        });
        ReportRow row;
        row.param = n;
        row.total = static_cast<long long>(graphs.size());
        for (char c : good) row.positive += c;
        rep.rows.push_back(row);
    }
    return rep;
}

/// Resumable state for the table2 run: finished rows, plus the normal forms
/// and combo cursor of the dimension in progress.
struct Table2Checkpoint {
    std::vector<ReportRow> rows_done;
    int current_dim = 0;
    size_t combos_done = 0;
    std::vector<std::string> forms;
};

/// Count distinct Fano varieties of building sets per dimension: every
/// product of connected Fano classes is built, its polytope's normal form
/// dedupes varieties across partitions.  total = products considered,
/// positive = distinct varieties.
inline EnumerationReport table2(
    int max_dim, bool extended = false, Table2Checkpoint* checkpoint = nullptr,
    const std::function<void(const Table2Checkpoint&)>& save = nullptr) {
    if (max_dim < 1 || max_dim > 5 || (max_dim == 5 && !extended))
        throw TooLarge("table2 supports dimensions 1 to 4, 5 as an extended run");

    Table2Checkpoint local;
    if (!checkpoint && save) checkpoint = &local;

    std::map<int, std::vector<BuildingSet>> fano_connected;  // by dimension
    std::map<int, std::vector<Fan>> fano_fans;
    for (int d = 1; d <= max_dim; ++d) {
        fano_connected[d] = enumerate_building_sets(d + 1, true, true);
        for (const BuildingSet& b : fano_connected[d])
            fano_fans[d].push_back(fan_of_building_set(b));
    }

    EnumerationReport rep;
    int start_dim = 1;
    if (checkpoint) {
        for (const ReportRow& row : checkpoint->rows_done) {
            rep.rows.push_back(row);
            start_dim = row.param + 1;
        }
        if (checkpoint->current_dim >= start_dim) start_dim = checkpoint->current_dim;
    }

    for (int d = start_dim; d <= max_dim; ++d) {
        std::vector<std::vector<std::pair<int, int>>> combos;
        for (const auto& partition : detail::partitions_of(d))
            for (auto& combo : detail::partition_combos(partition, [&](int part) {
                     return fano_connected[part].size();
                 }))
                combos.push_back(std::move(combo));

        std::set<std::string> forms;
        size_t first = 0;
        if (checkpoint && checkpoint->current_dim == d) {
            forms.insert(checkpoint->forms.begin(), checkpoint->forms.end());
            first = std::min(checkpoint->combos_done, combos.size());
        }
        for (size_t ci = first; ci < combos.size(); ++ci) {
            std::vector<Fan> factors;
            for (auto [part, idx] : combos[ci])
                factors.push_back(fano_fans[part][static_cast<size_t>(idx)]);
            Fan product = fan_product(factors);
            forms.insert(normal_form(polytope_of_weak_fano_fan(product)));
            if (checkpoint) {
                checkpoint->current_dim = d;
                checkpoint->combos_done = ci + 1;
                checkpoint->forms.assign(forms.begin(), forms.end());
                if (save) save(*checkpoint);
            }
        }
        ReportRow row;
        row.param = d;
        row.total = static_cast<long long>(combos.size());
        row.positive = static_cast<long long>(forms.size());
        rep.rows.push_back(row);
        if (checkpoint) {
            checkpoint->rows_done.push_back(row);
            checkpoint->current_dim = d + 1;
            checkpoint->combos_done = 0;
            checkpoint->forms.clear();
            if (save) save(*checkpoint);
        }
    }
    return rep;
}

enum class Corpus { Graphs, BuildingSets, Cubeahedra, Roots };

struct CrossValidation {
    long long cases = 0;
    std::vector<std::string> disagreements;
};

/// Check the combinatorial criteria against the fan-level oracle over a
/// finite corpus; any disagreement is reported.
inline CrossValidation cross_validate(Corpus corpus, int jobs = 1) {
    CrossValidation cv;
    auto compare = [&cv](const std::string& item, const Classification& crit, bool oracle_fano,
                         bool oracle_weak) {
        ++cv.cases;
        if (crit.fano != oracle_fano)
            cv.disagreements.push_back(item + ": criterion fano=" +
                                       (crit.fano ? "true" : "false") + ", oracle says " +
                                       (oracle_fano ? "true" : "false"));
        if (crit.weak_fano != oracle_weak)
            cv.disagreements.push_back(item + ": criterion weak_fano=" +
                                       (crit.weak_fano ? "true" : "false") + ", oracle says " +
                                       (oracle_weak ? "true" : "false"));
    };

    if (corpus == Corpus::Graphs || corpus == Corpus::Cubeahedra) {
        bool cube = corpus == Corpus::Cubeahedra;
        std::vector<SimpleGraph> graphs;
        for (int n = 1; n <= (cube ? 4 : 5); ++n)
            for (SimpleGraph& g : enumerate_connected_graphs(n)) graphs.push_back(std::move(g));
        struct Item {
            Classification crit;
            bool fano, weak;
            std::string name;
        };
        std::vector<Item> items = parallel_map<Item>(graphs.size(), jobs, [&](size_t i) {
            const SimpleGraph& g = graphs[i];
            Item it;
            it.name = (cube ? "cubeahedron " : "graph ") + std::to_string(g.nodes) +
                      " nodes, edges";
            for (auto [a, b] : g.edges())
                it.name += " " + std::to_string(a + 1) + "-" + std::to_string(b + 1);
            Fan f = cube ? cubeahedron_fan(g) : fan_of_building_set(graphical_building_set(g));
            it.crit = cube ? cubeahedron_weak_fano(g) : graph_weak_fano(g);
            it.fano = is_fano_oracle(f);
            it.weak = is_weak_fano_oracle(f);
            return it;
        });
        for (const Item& it : items) compare(it.name, it.crit, it.fano, it.weak);
        return cv;
    }

    if (corpus == Corpus::BuildingSets) {
        std::vector<BuildingSet> sets;
        for (int n = 1; n <= 4; ++n)
            for (BuildingSet& b : all_building_set_classes(n)) sets.push_back(std::move(b));
        // documented sample of the 5-element connected classes: every fifth
        std::vector<BuildingSet> five = enumerate_building_sets(5, true, false);
        for (size_t i = 0; i < five.size(); i += 5) sets.push_back(std::move(five[i]));
        struct Item {
            Classification crit;
            bool fano, weak;
            std::string name;
        };
        std::vector<Item> items = parallel_map<Item>(sets.size(), jobs, [&](size_t i) {
            const BuildingSet& b = sets[i];
            Item it;
            it.name = "building set on " + std::to_string(popcount(b.ground)) + ":";
            for (Mask m : b.sets)
                if (popcount(m) > 1) it.name += " " + set_to_string(m);
            Fan f = fan_of_building_set(b);
            it.crit = building_set_weak_fano(b);
            it.fano = is_fano_oracle(f);
            it.weak = is_weak_fano_oracle(f);
            return it;
        });
        for (const Item& it : items) compare(it.name, it.crit, it.fano, it.weak);
        return cv;
    }

    std::vector<std::string> names = {"A1", "A2", "A3", "B2", "B3", "C3", "G2"};
    for (const std::string& name : names) {
        RootDatum r = named_root_datum(name);
        Fan f = weyl_fan(r);
        compare("root system " + name, root_system_fano_weak_fano(r), is_fano_oracle(f),
                is_weak_fano_oracle(f));
    }
    return cv;
}

}  // namespace toricfan
