#include <doctest.h>

#include "atk/int_linalg.hpp"
#include "helpers.hpp"

using namespace atk;

TEST_SUITE("int_linalg") {

TEST_CASE("det2 and vector arithmetic") {
    LatticeVector a{2, 1}, b{1, 1};
    CHECK(det2(a, b) == 1);
    CHECK(det2(b, a) == -1);
    CHECK(det2(a, a) == 0);
    CHECK(a + b == LatticeVector{3, 2});
    CHECK(a - b == LatticeVector{1, 0});
    CHECK(-a == LatticeVector{-2, -1});
    CHECK(Int(3) * b == LatticeVector{3, 3});
}

TEST_CASE("is_primitive") {
    CHECK(is_primitive({1, 0}));
    CHECK(is_primitive({-3, 2}));
    CHECK(is_primitive({0, -1}));
    CHECK_FALSE(is_primitive({2, 4}));
    CHECK_FALSE(is_primitive({-2, 0}));
    CHECK_THROWS_AS(is_primitive({0, 0}), domain_error);
    try {
        is_primitive({0, 0});
    } catch (const domain_error& e) {
        CHECK(e.code() == errc::zero_vector);
    }
}

TEST_CASE("Mat2 algebra") {
    Mat2 m = Mat2::from_columns({2, 1}, {1, 1});
    CHECK(m.det() == 1);
    Mat2 inv = m.inverse_unimodular();
    CHECK(m.mul(inv).a == 1);
    CHECK(m.mul(inv).b == 0);
    CHECK(m.mul(inv).c == 0);
    CHECK(m.mul(inv).d == 1);
    CHECK(inv.apply(m.apply({5, -3})) == LatticeVector{5, -3});
    CHECK(Mat2::identity().apply({7, 9}) == LatticeVector{7, 9});
}

TEST_CASE("smith normal form on fixed inputs") {
    // columns (1,1) and (1,-1) span an index-2 sublattice
    GroupInvariants g = cokernel_invariants({{1, 1}, {1, -1}});
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<Int>{2});
    CHECK_FALSE(g.is_trivial());

    g = cokernel_invariants({{1, 2}, {-2, -1}, {1, -1}});
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<Int>{3});

    g = cokernel_invariants({});
    CHECK(g.free_rank == 2);
    CHECK(g.torsion.empty());

    g = cokernel_invariants({{2, 4}});
    CHECK(g.free_rank == 1);
    CHECK(g.torsion == std::vector<Int>{2});

    g = cokernel_invariants({{1, 0}, {0, 1}});
    CHECK(g.is_trivial());

    g = cokernel_invariants({{0, 0}});
    CHECK(g.free_rank == 2);
}

TEST_CASE("smith normal form input validation") {
    CHECK_THROWS_AS(smith_normal_form({{1, 2, 3}}), domain_error);
    CHECK_THROWS_AS(smith_normal_form({{1, 2}, {3, 4}, {5, 6}}), domain_error);
    CHECK_THROWS_AS(smith_normal_form({{1, 2, 3}, {4, 5}}), domain_error);
}

TEST_CASE("divisibility chain and index on random matrices") {
    std::mt19937 gen(2024);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> cols(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        int m = cols(gen);
        std::vector<std::vector<Int>> rows(2, std::vector<Int>(m));
        std::vector<LatticeVector> gens;
        for (int j = 0; j < m; ++j) {
            rows[0][j] = entry(gen);
            rows[1][j] = entry(gen);
            gens.push_back({rows[0][j], rows[1][j]});
        }
        GroupInvariants got = smith_normal_form(rows);

        // reference invariants via entry and minor gcds
        Int d1 = 0, d2 = 0;
        for (int j = 0; j < m; ++j) {
            d1 = boost::multiprecision::gcd(d1, rows[0][j]);
            d1 = boost::multiprecision::gcd(d1, rows[1][j]);
            for (int k = j + 1; k < m; ++k)
                d2 = boost::multiprecision::gcd(
                    d2, rows[0][j] * rows[1][k] - rows[0][k] * rows[1][j]);
        }
        int rank = (d1 != 0 ? 1 : 0) + (d2 != 0 ? 1 : 0);
        CHECK(got.free_rank == 2 - rank);
        std::vector<Int> expect_torsion;
        if (d1 > 1)
            expect_torsion.push_back(d1);
        if (d2 != 0 && d2 / d1 > 1)
            expect_torsion.push_back(d2 / d1);
        CHECK(got.torsion == expect_torsion);
        for (std::size_t i = 1; i < got.torsion.size(); ++i)
            CHECK(got.torsion[i] % got.torsion[i - 1] == 0);

        CHECK(cokernel_invariants(gens) == got);
    }
}

}
