#include <doctest.h>

#include <algorithm>

#include "atk/fan.hpp"
#include "helpers.hpp"

using namespace atk;

namespace {

const std::vector<LatticeVector> hex_rays{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};

} // namespace

TEST_SUITE("fan") {

TEST_CASE("winding number") {
    CHECK(winding_number(hex_rays) == 1);
    CHECK(winding_number({{1, 0}, {0, 1}, {-1, -1}}) == 1);
    std::vector<LatticeVector> twice;
    for (int rep = 0; rep < 2; ++rep)
        for (const auto& v : std::vector<LatticeVector>{{1, 0}, {1, 1}, {0, 1}, {-1, -1}})
            twice.push_back(v);
    CHECK(winding_number(twice) == 2);
}

TEST_CASE("constructor validation") {
    auto make = [](std::vector<LatticeVector> v) { return Fan(std::move(v)); };
    CHECK_NOTHROW(make(hex_rays));
    CHECK_THROWS_AS(make({{1, 0}, {0, 1}}), domain_error);
    CHECK_THROWS_AS(make({{1, 0}, {0, 2}, {-1, -1}}), domain_error); // non-primitive
    CHECK_THROWS_AS(make({{1, 0}, {1, 1}, {-1, -1}}), domain_error); // det 2 corner
    CHECK_THROWS_AS(make({{1, 0}, {0, 1}, {0, 0}}), domain_error);   // zero ray
    std::vector<LatticeVector> cw(hex_rays.rbegin(), hex_rays.rend());
    CHECK_THROWS_AS(make(cw), domain_error); // clockwise: determinants -1
}

TEST_CASE("normalization is basis independent") {
    Fan base(hex_rays);
    CHECK(base.rays()[0] == LatticeVector{1, 0});
    CHECK(base.rays()[1] == LatticeVector{0, 1});
    // shear the whole plane; the stored fan must be unchanged
    Mat2 shear{1, 3, 0, 1};
    std::vector<LatticeVector> mapped;
    for (const auto& v : hex_rays)
        mapped.push_back(shear.apply(v));
    CHECK(Fan(mapped) == base);
}

TEST_CASE("fan from cycle round trips") {
    for (Cycle c : {Cycle{1, 1, 1, 1, 1, 1}, Cycle{1, 1, 2, 1, 2, 1, 1},
                    Cycle{2, 1, 2, 1, 2, 1, 2, 1}, Cycle{1, 2, 1, 2, 2, 1, 2, 1},
                    Cycle{2, 2, 1, 2, 2, 1, 2, 2, 1}, Cycle{-1, -1, -1}}) {
        Fan f = fan_from_cycle(c);
        CHECK(cycle_from_fan(f) == c);
    }
    // ruled-surface boundary for several twists
    for (int a = 0; a <= 4; ++a) {
        Cycle c{0, a, 0, -a};
        CHECK(cycle_from_fan(fan_from_cycle(c)) == c);
    }
}

TEST_CASE("model fans have the expected rays") {
    CHECK(fan_from_cycle({1, 1, 1, 1, 1, 1}).rays() ==
          std::vector<LatticeVector>{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
    CHECK(fan_from_cycle({1, 1, 2, 1, 2, 1, 1}).rays() ==
          std::vector<LatticeVector>{
              {1, 0}, {0, 1}, {-1, 1}, {-2, 1}, {-1, 0}, {0, -1}, {1, -1}});
    CHECK(fan_from_cycle({2, 1, 2, 1, 2, 1, 2, 1}).rays() ==
          std::vector<LatticeVector>{
              {1, 0}, {0, 1}, {-1, 1}, {-2, 1}, {-1, 0}, {0, -1}, {1, -1}, {2, -1}});
    CHECK(fan_from_cycle({1, 2, 1, 2, 2, 1, 2, 1}).rays() ==
          std::vector<LatticeVector>{
              {1, 0}, {0, 1}, {-1, 2}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}});
    CHECK(fan_from_cycle({2, 2, 1, 2, 2, 1, 2, 2, 1}).rays() ==
          std::vector<LatticeVector>{
              {1, 0}, {0, 1}, {-1, 2}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {2, -1}});
}

TEST_CASE("cycles without fans") {
    for (Cycle c : {Cycle{2, 2, 2, 2}, Cycle{1, 1, 1}, Cycle{0, 0, 2, 1, 2, 2},
                    Cycle{1, 0, 0, 3, 2, 2, 1, 2, 4}}) {
        CHECK_THROWS_AS(fan_from_cycle(c), domain_error);
        try {
            fan_from_cycle(c);
        } catch (const domain_error& e) {
            CHECK(e.code() == errc::not_toric);
        }
    }
}

TEST_CASE("corner blowup and blowdown") {
    Fan p2 = fan_from_cycle({-1, -1, -1});
    Fan once = corner_blowup(p2, 0);
    CHECK(once.size() == 4);
    CHECK(cycle_from_fan(once) == Cycle{0, 1, 0, -1});
    // the inserted ray is a -1 component and contracts back
    CHECK(corner_blowdown(once, 1) == p2);
    CHECK_THROWS_AS(corner_blowdown(once, 0), domain_error);
    CHECK_THROWS_AS(corner_blowup(p2, 5), domain_error);
    CHECK_THROWS_AS(corner_blowdown(p2, -1), domain_error);

    std::mt19937 gen(11);
    for (int trial = 0; trial < 100; ++trial) {
        Cycle c = atk_test::random_toric_cycle(gen, 3 + trial % 7);
        Fan f = fan_from_cycle(c);
        std::uniform_int_distribution<int> pick(0, f.size() - 1);
        int i = pick(gen);
        Fan up = corner_blowup(f, i);
        CHECK(up.size() == f.size() + 1);
        CHECK(corner_blowdown(up, (i + 1) % up.size()) == f);
    }
}

TEST_CASE("opposite rays") {
    Fan ti = fan_from_cycle({2, 1, 2, 1, 2, 1, 2, 1});
    CHECK(are_opposite(ti, 7, 3)); // (2,-1) against (-2,1)
    CHECK(are_opposite(ti, 0, 4));
    CHECK_FALSE(are_opposite(ti, 0, 3));
    CHECK_FALSE(are_opposite(ti, 2, 2));
}

TEST_CASE("fan symmetries") {
    auto hex_sym = fan_symmetries(fan_from_cycle({1, 1, 1, 1, 1, 1}));
    CHECK(hex_sym.size() == 12);
    for (const FanSymmetry& s : hex_sym) {
        Fan f = fan_from_cycle({1, 1, 1, 1, 1, 1});
        for (int i = 0; i < f.size(); ++i)
            CHECK(s.map.apply(f.rays()[i]) == f.rays()[dihedral_image(s.action, 6, i)]);
    }

    auto t9_sym = fan_symmetries(fan_from_cycle({2, 2, 1, 2, 2, 1, 2, 2, 1}));
    std::vector<DihedralElement> actions;
    for (const FanSymmetry& s : t9_sym)
        actions.push_back(s.action);
    std::sort(actions.begin(), actions.end());
    CHECK(actions == std::vector<DihedralElement>{{0, false},
                                                  {3, false},
                                                  {6, false},
                                                  {1, true},
                                                  {4, true},
                                                  {7, true}});

    auto ti_sym = fan_symmetries(fan_from_cycle({2, 1, 2, 1, 2, 1, 2, 1}));
    CHECK(ti_sym.size() == 8);
    for (const FanSymmetry& s : ti_sym)
        CHECK(s.action.rotation % 2 == 0);
}

}
