#include <catch2/catch_amalgamated.hpp>

#include "toricfan/toricfan.hpp"

using namespace toricfan;

namespace {

BuildingSet projective_space(int n) {
    std::vector<Mask> sets;
    for (int i = 0; i < n; ++i) sets.push_back(Mask{1} << i);
    sets.push_back(full_mask(n));
    return make_building_set(full_mask(n), sets);
}

BuildingSet on_four(std::vector<Mask> extra) {
    std::vector<Mask> sets = {0b0001, 0b0010, 0b0100, 0b1000, 0b1111};
    sets.insert(sets.end(), extra.begin(), extra.end());
    return make_building_set(0b1111, sets);
}

int ray_labelled(const Fan& f, const std::string& label) {
    for (size_t i = 0; i < f.labels.size(); ++i)
        if (f.labels[i] == label) return static_cast<int>(i);
    FAIL("no ray labelled " + label);
    return -1;
}

}  // namespace

TEST_CASE("rationals") {
    REQUIRE(half_of(4).to_string() == "2");
    REQUIRE(half_of(-2).to_string() == "-1");
    REQUIRE(half_of(3).to_string() == "3/2");
    REQUIRE(half_of(0).to_string() == "0");
    REQUIRE(half_of(-1).to_string() == "-1/2");
}

TEST_CASE("polynomial arithmetic") {
    IntersectionPolynomial a, b;
    a.add_linear(0, 1);
    a.add_linear(2, -1);
    b.add_linear(0, 2);
    b.add_linear(1, 1);

    IntersectionPolynomial sum = add_polynomials(a, b);
    REQUIRE(sum.linear == std::map<int, Int>{{0, 3}, {1, 1}, {2, -1}});

    IntersectionPolynomial prod = multiply_linear(a, b);
    REQUIRE(prod.quadratic ==
            std::map<std::pair<int, int>, Int>{
                {{0, 0}, 2}, {{0, 1}, 1}, {{0, 2}, -2}, {{1, 2}, -1}});

    REQUIRE(scale_polynomial(-1, a).linear == std::map<int, Int>{{0, -1}, {2, 1}});
    a.add_linear(2, 1);
    REQUIRE(a.linear == std::map<int, Int>{{0, 1}});
}

TEST_CASE("curve polynomials read off wall relations") {
    Fan p2 = fan_of_building_set(projective_space(3));
    for (const Wall& w : walls(p2)) {
        IntersectionPolynomial p = curve_polynomial(w);
        REQUIRE(p.linear == std::map<int, Int>{{0, 1}, {1, 1}, {2, 1}});
    }

    Fan f1 = fan_of_building_set(
        make_building_set(0b111, {0b001, 0b010, 0b100, 0b110, 0b111}));
    for (const Wall& w : walls(f1))
        if (w.generators == std::vector<int>{3}) {
            IntersectionPolynomial p = curve_polynomial(w);
            REQUIRE(p.linear == std::map<int, Int>{{1, 1}, {2, 1}, {3, -1}});
        }
}

TEST_CASE("whole-surface second Chern character") {
    auto whole = [](const BuildingSet& b) {
        return ch2_dot_whole_surface(fan_of_building_set(b));
    };
    REQUIRE(whole(projective_space(3)) == Rational{3, 2});
    // blowup of the plane
    REQUIRE(whole(make_building_set(0b111, {0b001, 0b010, 0b100, 0b110, 0b111})) ==
            Rational{0, 1});
    // product of two lines
    REQUIRE(whole(make_building_set(0b1111,
                                    {0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b1100})) ==
            Rational{0, 1});
    REQUIRE_THROWS_AS(ch2_dot_whole_surface(fan_of_building_set(projective_space(4))),
                      NotACone);
}

TEST_CASE("stars of the projective three-space") {
    Fan f = fan_of_building_set(projective_space(4));
    for (int r = 0; r < 4; ++r) {
        SurfaceStar s = classify_surface_star(f, {r});
        REQUIRE(s.kind == StarKind::ProjectivePlane);
        REQUIRE(s.link.size() == 3);
        REQUIRE(ch2_dot_surface(s) == Rational{2, 1});
    }
    REQUIRE(codim2_cones(f).size() == 4);
    REQUIRE_THROWS_AS(classify_surface_star(f, {17}), FanError);
}

TEST_CASE("first proof family: one nested triple") {
    BuildingSet b = on_four({0b0111});
    REQUIRE(building_set_fano(b).fano);
    Fan f = fan_of_building_set(b);
    int t = ray_labelled(f, "3");
    SurfaceStar s = classify_surface_star(f, {t});
    REQUIRE(s.kind == StarKind::Hirzebruch);
    REQUIRE(s.hirzebruch_degree == 1);
    REQUIRE(ch2_dot_surface(s) == Rational{0, 1});
}

TEST_CASE("second proof family: overlapping triples") {
    BuildingSet b = on_four({0b0011, 0b0111, 0b1011});
    REQUIRE(building_set_fano(b).fano);
    Fan f = fan_of_building_set(b);
    int t = ray_labelled(f, "3");
    SurfaceStar s = classify_surface_star(f, {t});
    REQUIRE(s.kind == StarKind::Hirzebruch);
    REQUIRE(s.hirzebruch_degree == 1);
    REQUIRE(ch2_dot_surface(s) == Rational{0, 1});
}

TEST_CASE("third proof family: two disjoint pairs") {
    BuildingSet b = on_four({0b0011, 0b1100});
    REQUIRE(building_set_fano(b).fano);
    Fan f = fan_of_building_set(b);
    int t = ray_labelled(f, "1|2");
    SurfaceStar s = classify_surface_star(f, {t});
    REQUIRE(s.kind == StarKind::Hirzebruch);
    REQUIRE(s.hirzebruch_degree == 0);

    int r1 = ray_labelled(f, "1"), r2 = ray_labelled(f, "2");
    int r3 = ray_labelled(f, "3"), r4 = ray_labelled(f, "4");
    IntersectionPolynomial fib = curve_polynomial(s.star_walls[0]);
    IntersectionPolynomial neg = curve_polynomial(s.star_walls[1]);
    REQUIRE(fib.linear == std::map<int, Int>{{r1, 1}, {r2, 1}, {t, -1}});
    REQUIRE(neg.linear == std::map<int, Int>{{r3, 1}, {r4, 1}, {t, 1}});

    REQUIRE(ch2_dot_surface(s) == Rational{-1, 1});
}

TEST_CASE("two-Fano classification") {
    REQUIRE(is_two_fano(projective_space(2)).two_fano);
    REQUIRE(is_two_fano(projective_space(5)).two_fano);

    // point: no effective components at all
    TwoFanoResult pt = is_two_fano(make_building_set(0b11, {0b01, 0b10}));
    REQUIRE(pt.two_fano);
    REQUIRE_FALSE(pt.has_witness);

    // line times points is still a line
    REQUIRE(is_two_fano(make_building_set(0b111, {0b001, 0b010, 0b100, 0b011})).two_fano);

    // the blowup of the plane fails on the surface itself
    TwoFanoResult bl = is_two_fano(
        make_building_set(0b111, {0b001, 0b010, 0b100, 0b110, 0b111}));
    REQUIRE_FALSE(bl.two_fano);
    REQUIRE(bl.has_witness);
    REQUIRE(bl.witness_tau.empty());
    REQUIRE(bl.ch2 == Rational{0, 1});

    // product of two lines
    TwoFanoResult pp = is_two_fano(
        make_building_set(0b1111, {0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b1100}));
    REQUIRE_FALSE(pp.two_fano);
    REQUIRE(pp.scanned.dim == 2);

    // higher-dimensional non-projective case needs a genuine star witness
    TwoFanoResult big = is_two_fano(on_four({0b0011, 0b1100}));
    REQUIRE_FALSE(big.two_fano);
    REQUIRE(big.has_witness);
    REQUIRE(big.witness_tau.size() == 1);
    REQUIRE(big.ch2.num <= 0);

    REQUIRE_THROWS_AS(is_two_fano(graphical_building_set(
                          make_graph(4, {{0, 1}, {1, 2}, {2, 3}}))),
                      NotFano);
}

TEST_CASE("two-Fano matches the projective-space classification on small classes") {
    for (int n = 1; n <= 4; ++n)
        for (const BuildingSet& b : all_building_set_classes(n)) {
            if (!building_set_fano(b).fano) continue;
            std::vector<Mask> effective;
            for (const auto& [mask, comp] : components(b))
                if (popcount(mask) >= 2) effective.push_back(mask);
            bool projective =
                effective.empty() ||
                (effective.size() == 1 &&
                 restriction(b, effective[0]).sets.size() ==
                     static_cast<size_t>(popcount(effective[0])) + 1);
            REQUIRE(is_two_fano(b).two_fano == projective);
        }
}
