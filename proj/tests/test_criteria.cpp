#include <catch2/catch_amalgamated.hpp>

#include "toricfan/toricfan.hpp"

using namespace toricfan;

namespace {

SimpleGraph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make_graph(n, e);
}

SimpleGraph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make_graph(n, e);
}

SimpleGraph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return make_graph(n, e);
}

}  // namespace

TEST_CASE("graph criterion: components of at most three nodes") {
    REQUIRE(graph_fano(path(3)).fano);
    REQUIRE(graph_fano(complete(3)).fano);
    REQUIRE_FALSE(graph_fano(path(4)).fano);
    REQUIRE(graph_fano(make_graph(1, {})).fano);

    // two triangles: each component small enough
    SimpleGraph two = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    REQUIRE(graph_fano(two).fano);

    Classification c = graph_fano(path(4));
    REQUIRE(c.witness == "component {1,2,3,4} has more than 3 nodes");
}

TEST_CASE("graph criterion: forbidden proper subsets") {
    REQUIRE(graph_weak_fano(path(4)).weak_fano);
    REQUIRE(graph_weak_fano(cycle(4)).weak_fano);
    REQUIRE(graph_weak_fano(cycle(5)).weak_fano);
    REQUIRE(graph_weak_fano(complete(4)).weak_fano);
    REQUIRE(graph_weak_fano(complete(5)).weak_fano);

    SimpleGraph diamond = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    REQUIRE(graph_weak_fano(diamond).weak_fano);

    SimpleGraph c4_pendant = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    Classification c = graph_weak_fano(c4_pendant);
    REQUIRE_FALSE(c.weak_fano);
    REQUIRE_FALSE(c.fano);
    REQUIRE(c.witness == "proper subset {1,2,3,4} induces a cycle");

    SimpleGraph diamond_pendant =
        make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    Classification d = graph_weak_fano(diamond_pendant);
    REQUIRE_FALSE(d.weak_fano);
    REQUIRE(d.witness == "proper subset {1,2,3,4} induces a diamond");
}

TEST_CASE("cubeahedron criteria") {
    REQUIRE(cubeahedron_fano(make_graph(2, {{0, 1}})).fano);
    REQUIRE(cubeahedron_fano(make_graph(4, {{0, 1}, {2, 3}})).fano);
    REQUIRE_FALSE(cubeahedron_fano(path(3)).fano);

    REQUIRE(cubeahedron_weak_fano(path(3)).weak_fano);
    REQUIRE(cubeahedron_weak_fano(complete(3)).weak_fano);
    REQUIRE(cubeahedron_weak_fano(path(4)).weak_fano);
    REQUIRE(cubeahedron_weak_fano(complete(4)).weak_fano);

    // unlike the associahedron case, the whole node set counts as a subset
    Classification claw = cubeahedron_weak_fano(make_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    REQUIRE_FALSE(claw.weak_fano);
    REQUIRE(claw.witness == "subset {1,2,3,4} induces a claw");

    Classification c4 = cubeahedron_weak_fano(cycle(4));
    REQUIRE_FALSE(c4.weak_fano);
    REQUIRE(c4.witness == "subset {1,2,3,4} induces a cycle");
}

TEST_CASE("building-set criteria on hand-checked families") {
    BuildingSet ex = make_building_set(0b111, {0b001, 0b010, 0b100, 0b110, 0b111});
    REQUIRE(building_set_fano(ex).fano);
    REQUIRE(building_set_weak_fano(ex).weak_fano);

    // overlapping incomparable pair with union = S and intersection in B
    std::vector<Mask> pw;
    for (Mask s = 1; s < 8; ++s) pw.push_back(s);
    REQUIRE(building_set_fano(make_building_set(0b111, pw)).fano);

    // 4-cycle: {1,2} and {2,3} overlap with union a proper subset
    BuildingSet c4 = graphical_building_set(cycle(4));
    Classification c = building_set_weak_fano(c4);
    REQUIRE_FALSE(c.fano);
    REQUIRE(c.weak_fano);

    BuildingSet bad = graphical_building_set(
        make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}));
    REQUIRE_FALSE(building_set_weak_fano(bad).weak_fano);
}

TEST_CASE("graph criterion agrees with the building-set criterion") {
    for (int n = 1; n <= 6; ++n)
        for (const SimpleGraph& g : enumerate_graphs(n)) {
            BuildingSet b = graphical_building_set(g);
            REQUIRE(graph_fano(g).fano == building_set_fano(b).fano);
            REQUIRE(graph_weak_fano(g).weak_fano ==
                    building_set_weak_fano(b).weak_fano);
        }
}

TEST_CASE("criteria agree with the fan oracle on small corpora") {
    for (int n = 1; n <= 5; ++n)
        for (const SimpleGraph& g : enumerate_connected_graphs(n)) {
            Fan f = fan_of_building_set(graphical_building_set(g));
            Classification c = graph_weak_fano(g);
            REQUIRE(c.fano == is_fano_oracle(f));
            REQUIRE(c.weak_fano == is_weak_fano_oracle(f));
        }
    for (int n = 1; n <= 4; ++n)
        for (const SimpleGraph& g : enumerate_connected_graphs(n)) {
            Fan f = cubeahedron_fan(g);
            Classification c = cubeahedron_weak_fano(g);
            REQUIRE(c.fano == is_fano_oracle(f));
            REQUIRE(c.weak_fano == is_weak_fano_oracle(f));
        }
    for (int n = 1; n <= 4; ++n)
        for (const BuildingSet& b : all_building_set_classes(n)) {
            Fan f = fan_of_building_set(b);
            Classification c = building_set_weak_fano(b);
            REQUIRE(c.fano == is_fano_oracle(f));
            REQUIRE(c.weak_fano == is_weak_fano_oracle(f));
        }
}

TEST_CASE("root system criterion from column sums") {
    Classification a1 = root_system_fano_weak_fano(named_root_datum("A1"));
    REQUIRE(a1.fano);
    Classification a2 = root_system_fano_weak_fano(named_root_datum("A2"));
    REQUIRE(a2.fano);
    Classification a3 = root_system_fano_weak_fano(named_root_datum("A3"));
    REQUIRE_FALSE(a3.fano);
    REQUIRE(a3.weak_fano);
    Classification b2 = root_system_fano_weak_fano(named_root_datum("B2"));
    REQUIRE_FALSE(b2.fano);
    REQUIRE(b2.weak_fano);
    Classification c3 = root_system_fano_weak_fano(named_root_datum("C3"));
    REQUIRE_FALSE(c3.weak_fano);
    Classification g2 = root_system_fano_weak_fano(named_root_datum("G2"));
    REQUIRE_FALSE(g2.weak_fano);
    Classification f4 = root_system_fano_weak_fano(named_root_datum("F4"));
    REQUIRE_FALSE(f4.weak_fano);
    Classification prod = root_system_fano_weak_fano(named_root_datum("A1xA2"));
    REQUIRE(prod.fano);
    Classification mixed = root_system_fano_weak_fano(named_root_datum("A2xB2"));
    REQUIRE_FALSE(mixed.fano);
    REQUIRE(mixed.weak_fano);
}
