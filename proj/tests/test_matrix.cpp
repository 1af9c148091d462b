#include <degen/exact.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"

#include <random>

using namespace degen;

TEST_CASE("rank of identity and zero matrices") {
    CHECK(rank(QMatrix::identity(2)) == 2);
    CHECK(rank(QMatrix::zero(2, 2)) == 0);
    CHECK(rank(QMatrix(0, 0)) == 0);
    CHECK(rank(QMatrix::zero(3, 5)) == 0);
}

TEST_CASE("rank of the tetrahedron vertex-edge incidence matrix") {
    // Signed vertex-edge incidence of the boundary of the tetrahedron:
    // columns are the edges 01, 02, 03, 12, 13, 23. Gaussian elimination
    // by hand gives rank 3 (rows sum to zero, any three are independent).
    ZMatrix d1{{-1, -1, -1, 0, 0, 0},
               {1, 0, 0, -1, -1, 0},
               {0, 1, 0, 1, 0, -1},
               {0, 0, 1, 0, 1, 1}};
    CHECK(rank(d1) == 3);
    // Dual route: the count of nonzero invariant factors agrees.
    CHECK(smith_normal_form(d1).invariant_factors().size() == 3);
}

TEST_CASE("rank agrees with transpose and with the Smith form") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<std::size_t> size(1, 7);
    for (int trial = 0; trial < 60; ++trial) {
        ZMatrix m = testgen::random_int_matrix(rng, size(rng), size(rng));
        std::size_t r = rank(m);
        CHECK(r == rank(m.transpose()));
        CHECK(r == smith_normal_form(m).invariant_factors().size());
    }
}

TEST_CASE("kernel basis spans the kernel") {
    std::mt19937 rng(72);
    std::uniform_int_distribution<std::size_t> size(1, 7);
    for (int trial = 0; trial < 40; ++trial) {
        ZMatrix m = testgen::random_int_matrix(rng, size(rng), size(rng));
        QMatrix q = to_rational(m);
        QMatrix k = kernel_basis(q);
        CHECK(k.cols() == q.cols() - rank(q));
        CHECK((q * k).is_zero());
        if (k.cols() > 0) CHECK(rank(k) == k.cols());
    }
}

TEST_CASE("rank over F_p matches the independent oracle") {
    std::mt19937 rng(73);
    std::uniform_int_distribution<std::size_t> size(1, 7);
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        for (int trial = 0; trial < 25; ++trial) {
            ZMatrix m = testgen::random_int_matrix(rng, size(rng), size(rng));
            CHECK(rank_mod_p(m, static_cast<unsigned>(p)) == testgen::oracle_rank_mod_p(m, p));
        }
    }
}

TEST_CASE("rank_mod_p rejects bad characteristics and denominators") {
    CHECK_THROWS_AS(rank_mod_p(ZMatrix::identity(2), 4), std::invalid_argument);
    QMatrix half{{Rat(1, 2)}};
    CHECK_THROWS_AS(rank_mod_p(half, 2), std::invalid_argument);
    CHECK(rank_mod_p(half, 3) == 1);
}

TEST_CASE("determinant is exact and multiplicative on small cases") {
    ZMatrix a{{2, 0}, {1, 3}};
    CHECK(determinant(a) == 6);
    CHECK(determinant(ZMatrix::identity(4)) == 1);
    ZMatrix swapped{{0, 1}, {1, 0}};
    CHECK(determinant(swapped) == -1);
    std::mt19937 rng(74);
    for (int trial = 0; trial < 20; ++trial) {
        ZMatrix u = testgen::random_unimodular(rng, 5);
        Int det = determinant(u);
        CHECK((det == 1 || det == -1));
    }
}
