#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "test_util.hpp"
#include "toricfan/toricfan.hpp"

using namespace toricfan;

namespace {

BuildingSet example_b() {
    return make_building_set(full_mask(3), {0b001, 0b010, 0b100, 0b110, 0b111});
}

BuildingSet projective_space(int n) {
    std::vector<Mask> sets;
    for (int i = 0; i < n; ++i) sets.push_back(Mask{1} << i);
    sets.push_back(full_mask(n));
    return make_building_set(full_mask(n), sets);
}

LatticePolytope hexagon() {
    return hull({{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}});
}

LatticePolytope diamond() { return hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

}  // namespace

TEST_CASE("hull of a square") {
    LatticePolytope p = hull({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {0, 0}, {1, 1}});
    REQUIRE(p.dim == 2);
    REQUIRE(p.vertices == std::vector<Vec>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
    REQUIRE(p.facet_normals.size() == 4);
    for (size_t i = 0; i < p.facet_normals.size(); ++i) {
        REQUIRE(p.facet_offsets[i] == 1);
        REQUIRE(p.facet_vertices[i].size() == 2);
    }
    std::set<Vec> normals(p.facet_normals.begin(), p.facet_normals.end());
    REQUIRE(normals == std::set<Vec>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

TEST_CASE("hull failure modes") {
    REQUIRE_THROWS_AS(hull({{0, 0}, {1, 1}, {2, 2}}), NotFullDimensional);
    REQUIRE_THROWS_AS(hull({{4, 7}}), NotFullDimensional);
}

TEST_CASE("hull in one dimension") {
    LatticePolytope p = hull({{5}, {-3}, {2}});
    REQUIRE(p.vertices == std::vector<Vec>{{-3}, {5}});
    REQUIRE(p.facet_normals.size() == 2);
}

TEST_CASE("hull budget guards") {
    std::vector<Vec> cube;
    for (int m = 0; m < 256; ++m) {
        Vec v(8);
        for (int i = 0; i < 8; ++i) v[static_cast<size_t>(i)] = (m >> i & 1) ? 1 : -1;
        cube.push_back(v);
    }
    REQUIRE_THROWS_AS(hull(cube), SearchBudgetExceeded);
    std::vector<Vec> many;
    for (Int i = 0; i <= 1000; ++i) many.push_back({i, i * i});
    REQUIRE_THROWS_AS(hull(many), TooLarge);
}

TEST_CASE("polytope of the projective plane fan") {
    LatticePolytope p = polytope_of_weak_fano_fan(fan_of_building_set(projective_space(3)));
    REQUIRE(p.vertices == std::vector<Vec>{{-1, -1}, {0, 1}, {1, 0}});
    REQUIRE(p.facet_normals.size() == 3);
    REQUIRE(is_reflexive(p));
    REQUIRE(is_smooth_fano(p));
    REQUIRE_FALSE(is_pseudo_symmetric(p));
    // same polytope directly from the ray generators
    REQUIRE(normal_form(p) == normal_form(hull({{1, 0}, {0, 1}, {-1, -1}})));
}

TEST_CASE("polytope of the running example") {
    Fan f = fan_of_building_set(example_b());
    LatticePolytope p = polytope_of_weak_fano_fan(f);
    REQUIRE(p.vertices == std::vector<Vec>{{-1, -1}, {-1, 0}, {0, 1}, {1, 0}});
    REQUIRE(p.facet_normals.size() == 4);
    REQUIRE(is_reflexive(p));
    REQUIRE(is_smooth_fano(p));
    REQUIRE_FALSE(is_pseudo_symmetric(p));
}

TEST_CASE("non-weak-Fano fans have no anticanonical polytope") {
    // claw cubeahedron is not weak Fano
    Fan f = cubeahedron_fan(make_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    REQUIRE_THROWS_AS(polytope_of_weak_fano_fan(f), NotWeakFano);
}

TEST_CASE("weak but not Fano fans merge facets across degree-zero walls") {
    SimpleGraph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Fan f = fan_of_building_set(graphical_building_set(c4));
    REQUIRE(is_weak_fano_oracle(f));
    REQUIRE_FALSE(is_fano_oracle(f));
    LatticePolytope p = polytope_of_weak_fano_fan(f);
    REQUIRE(is_reflexive(p));
    REQUIRE_FALSE(is_smooth_fano(p));
    REQUIRE(f.max_cones.size() == 20);
    REQUIRE(p.facet_normals.size() == 14);
    REQUIRE(p.vertices.size() == f.rays.size());
}

TEST_CASE("point polytopes") {
    Fan f0 = fan_of_building_set(make_building_set(0b1, {0b1}));
    LatticePolytope p = polytope_of_weak_fano_fan(f0);
    REQUIRE(p.dim == 0);
    REQUIRE(p.vertices == std::vector<Vec>{Vec{}});
    REQUIRE(is_reflexive(p));
    REQUIRE(is_smooth_fano(p));
    REQUIRE_FALSE(is_pseudo_symmetric(p));
    REQUIRE(normal_form(p) == "polytope;d=0;v=()");
}

TEST_CASE("reflexivity and smoothness classify standard shapes") {
    LatticePolytope square = hull({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    REQUIRE(is_reflexive(square));
    REQUIRE_FALSE(is_smooth_fano(square));
    REQUIRE_THROWS_AS(is_pseudo_symmetric(square), NotSmoothFano);
    REQUIRE_THROWS_AS(normal_form(square), NotSmoothFano);

    REQUIRE(is_smooth_fano(diamond()));
    REQUIRE(is_pseudo_symmetric(diamond()));
    REQUIRE(is_smooth_fano(hexagon()));
    REQUIRE(is_pseudo_symmetric(hexagon()));

    LatticePolytope corner = hull({{0, 0}, {1, 0}, {0, 1}});
    REQUIRE_FALSE(is_reflexive(corner));
    REQUIRE_FALSE(is_smooth_fano(corner));

    LatticePolytope big = hull({{2, 2}, {2, -2}, {-2, 2}, {-2, -2}});
    REQUIRE_FALSE(is_reflexive(big));
}

TEST_CASE("interior lattice points") {
    REQUIRE(interior_lattice_points(hull({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})) ==
            std::vector<Vec>{{0, 0}});
    REQUIRE(interior_lattice_points(hull({{0, 0}, {3, 0}, {0, 3}})) ==
            std::vector<Vec>{{1, 1}});
    REQUIRE(interior_lattice_points(hull({{0, 0}, {1, 0}, {0, 1}})).empty());
}

TEST_CASE("unimodular transforms preserve the normal form") {
    std::vector<LatticePolytope> samples = {
        polytope_of_weak_fano_fan(fan_of_building_set(projective_space(3))),
        polytope_of_weak_fano_fan(fan_of_building_set(example_b())),
        diamond(),
        hexagon(),
        polytope_of_weak_fano_fan(fan_of_building_set(projective_space(4))),
    };
    std::mt19937_64 rng(2026);
    for (const LatticePolytope& p : samples) {
        std::string nf = normal_form(p);
        for (int t = 0; t < 25; ++t) {
            IntMatrix m = testutil::random_unimodular(p.dim, rng);
            LatticePolytope q = transform_polytope(p, m);
            REQUIRE(is_smooth_fano(q));
            REQUIRE(normal_form(q) == nf);
        }
    }
}

TEST_CASE("normal forms separate inequivalent polytopes") {
    std::set<std::string> forms = {
        normal_form(polytope_of_weak_fano_fan(fan_of_building_set(projective_space(3)))),
        normal_form(polytope_of_weak_fano_fan(fan_of_building_set(example_b()))),
        normal_form(diamond()),
        normal_form(hexagon()),
    };
    REQUIRE(forms.size() == 4);
}

TEST_CASE("digraph polytopes") {
    LatticePolytope p1 = digraph_polytope(DirectedGraph{2, {{0, 1}, {1, 0}}});
    REQUIRE(p1.dim == 1);
    REQUIRE(p1.vertices == std::vector<Vec>{{-1}, {1}});

    DirectedGraph k3{3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}};
    REQUIRE(normal_form(digraph_polytope(k3)) == normal_form(hexagon()));

    LatticePolytope pt = digraph_polytope(DirectedGraph{1, {}});
    REQUIRE(pt.dim == 0);
    REQUIRE(pt.vertices == std::vector<Vec>{Vec{}});

    REQUIRE_THROWS_AS(digraph_polytope(DirectedGraph{2, {{0, 1}}}), NotFullDimensional);
    REQUIRE_THROWS_AS(digraph_polytope(DirectedGraph{2, {{0, 0}}}), IoError);
    REQUIRE_THROWS_AS(digraph_polytope(DirectedGraph{2, {{0, 5}}}), IndexOutOfRange);
    REQUIRE_THROWS_AS(digraph_polytope(DirectedGraph{3, {{0, 1}, {1, 0}}}), NotConnected);
}

TEST_CASE("digraph realizations of small Fano building sets") {
    auto verify = [](const BuildingSet& b) {
        std::optional<DirectedGraph> g = find_digraph_realization(b);
        REQUIRE(g.has_value());
        LatticePolytope target = polytope_of_weak_fano_fan(fan_of_building_set(b));
        REQUIRE(normal_form(digraph_polytope(*g)) == normal_form(target));
        return *g;
    };

    DirectedGraph p1 = verify(projective_space(2));
    REQUIRE(p1.nodes == 2);

    verify(projective_space(3));
    verify(example_b());
    // product of two lines lives on three nodes
    DirectedGraph q = verify(
        make_building_set(0b1111, {0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b1100}));
    REQUIRE(q.nodes == 3);

    REQUIRE_THROWS_AS(
        find_digraph_realization(graphical_building_set(
            make_graph(4, {{0, 1}, {1, 2}, {2, 3}}))),
        NotFano);
    REQUIRE_THROWS_AS(find_digraph_realization(projective_space(6)), TooLarge);
}
