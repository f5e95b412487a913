#include <catch2/catch_amalgamated.hpp>

#include "toricfan/toricfan.hpp"

using namespace toricfan;

namespace {

BuildingSet example_b() {
    // singletons, {2,3}, and the ground set {1,2,3}
    return make_building_set(full_mask(3), {0b001, 0b010, 0b100, 0b110, 0b111});
}

/// Literal transcription of the nested-set definition: pairwise nested or
/// disjoint, and no union of >= 2 pairwise disjoint members lies in B.
bool brute_nested(const BuildingSet& b, const std::vector<Mask>& family) {
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j) {
            Mask x = family[i], y = family[j];
            bool ok = (x & y) == 0 || subset_of(x, y) || subset_of(y, x);
            if (!ok) return false;
        }
    size_t k = family.size();
    for (Mask pick = 1; pick < (Mask{1} << k); ++pick) {
        if (popcount(pick) < 2) continue;
        Mask u = 0;
        bool disjoint = true;
        for (int i : elements_of(pick)) {
            if (u & family[static_cast<size_t>(i)]) disjoint = false;
            u |= family[static_cast<size_t>(i)];
        }
        if (disjoint && b.contains(u)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("building set validation") {
    BuildingSet b = example_b();
    REQUIRE(b.ground == 0b111);
    REQUIRE(b.sets == std::vector<Mask>{0b001, 0b010, 0b100, 0b110, 0b111});
    REQUIRE(b.connected());
    REQUIRE(b.contains(0b110));
    REQUIRE_FALSE(b.contains(0b011));

    REQUIRE_THROWS_AS(make_building_set(0b11, {0b01, 0b11}), MissingSingleton);
    REQUIRE_THROWS_AS(make_building_set(0b11, {0b01, 0b10, 0b11, 0}), EmptyMember);
    REQUIRE_THROWS_AS(make_building_set(0b11, {0b01, 0b10, 0b100}), BuildingSetError);
    // {1,2} and {2,3} intersect but their union is absent
    REQUIRE_THROWS_AS(make_building_set(0b111, {0b001, 0b010, 0b100, 0b011, 0b110}),
                      NotUnionClosed);
    REQUIRE_THROWS_AS(validate_building_set(GroundSet{64}, {}), GroundSetTooLarge);
}

TEST_CASE("maximal members partition the ground set") {
    BuildingSet b = make_building_set(0b1111, {0b0001, 0b0010, 0b0100, 0b1000, 0b0011});
    std::vector<Mask> maxes = b.maximal();
    REQUIRE(maxes == std::vector<Mask>{0b0100, 0b1000, 0b0011});
    REQUIRE_FALSE(b.connected());
    REQUIRE(example_b().maximal() == std::vector<Mask>{0b111});

    auto comps = components(b);
    REQUIRE(comps.size() == 3);
    REQUIRE(comps[2].first == 0b0011);
    REQUIRE(comps[2].second.sets == std::vector<Mask>{0b0001, 0b0010, 0b0011});
    REQUIRE(comps[0].second.sets == std::vector<Mask>{0b0100});
}

TEST_CASE("restriction keeps global labels") {
    SimpleGraph path3 = make_graph(3, {{0, 1}, {1, 2}});
    BuildingSet b = graphical_building_set(path3);
    BuildingSet r = restriction(b, 0b110);
    REQUIRE(r.ground == 0b110);
    REQUIRE(r.sets == std::vector<Mask>{0b010, 0b100, 0b110});
    BuildingSet c = compact(r);
    REQUIRE(c.ground == 0b11);
    REQUIRE(c.sets == std::vector<Mask>{0b01, 0b10, 0b11});
}

TEST_CASE("graphs and graphical building sets") {
    REQUIRE_THROWS_AS(make_graph(2, {{0, 2}}), IoError);
    REQUIRE_THROWS_AS(make_graph(2, {{1, 1}}), IoError);

    SimpleGraph path3 = make_graph(3, {{0, 1}, {1, 2}});
    REQUIRE(path3.has_edge(0, 1));
    REQUIRE_FALSE(path3.has_edge(0, 2));
    REQUIRE(path3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    REQUIRE(induced_connected(path3, 0b111));
    REQUIRE_FALSE(induced_connected(path3, 0b101));

    BuildingSet b = graphical_building_set(path3);
    REQUIRE(b.sets == std::vector<Mask>{0b001, 0b010, 0b100, 0b011, 0b110, 0b111});

    SimpleGraph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    REQUIRE(graphical_building_set(k3).sets.size() == 7);
}

TEST_CASE("nested sets of the running example") {
    BuildingSet b = example_b();
    REQUIRE(non_maximal_members(b) == std::vector<Mask>{0b001, 0b010, 0b100, 0b110});

    REQUIRE(is_nested(b, {}));
    REQUIRE(is_nested(b, {0b001, 0b010}));
    REQUIRE(is_nested(b, {0b010, 0b110}));
    // {2} and {3} are disjoint with union {2,3} in B
    REQUIRE_FALSE(is_nested(b, {0b010, 0b100}));
    // {1} and {2,3} are disjoint with union S in B
    REQUIRE_FALSE(is_nested(b, {0b001, 0b110}));

    REQUIRE(nested_complex(b).size() == 9);
    auto maxes = maximal_nested_sets(b);
    REQUIRE(maxes.size() == 4);
    for (const NestedSet& n : maxes) REQUIRE(n.members.size() == 2);
}

TEST_CASE("is_nested matches the definition on every small class") {
    for (int n = 1; n <= 4; ++n) {
        for (const BuildingSet& b : all_building_set_classes(n)) {
            std::vector<Mask> cand = non_maximal_members(b);
            size_t k = cand.size();
            REQUIRE(k <= 14);
            for (Mask pick = 0; pick < (Mask{1} << k); ++pick) {
                std::vector<Mask> family;
                for (int i : elements_of(pick)) family.push_back(cand[static_cast<size_t>(i)]);
                if (is_nested(b, family) != brute_nested(b, family)) {
                    CAPTURE(n, b.sets, family);
                    REQUIRE(false);
                }
            }
        }
    }
}

TEST_CASE("maximal nested sets all have the same cardinality") {
    for (int n = 1; n <= 4; ++n)
        for (const BuildingSet& b : all_building_set_classes(n)) {
            size_t want = static_cast<size_t>(n) - b.maximal().size();
            for (const NestedSet& m : maximal_nested_sets(b))
                REQUIRE(m.members.size() == want);
        }
}

TEST_CASE("isomorphism classification") {
    SimpleGraph path3 = make_graph(3, {{0, 1}, {1, 2}});
    SimpleGraph path3b = make_graph(3, {{1, 2}, {0, 2}});
    SimpleGraph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    BuildingSet a = graphical_building_set(path3);
    BuildingSet b = graphical_building_set(path3b);
    BuildingSet c = graphical_building_set(k3);
    REQUIRE(isomorphic(a, b));
    REQUIRE_FALSE(isomorphic(a, c));
    REQUIRE(canonical_form(a) == canonical_form(b));

    REQUIRE(apply_perm(0b101, {1, 2, 0}) == 0b011);
}
