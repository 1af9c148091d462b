#include <degen/exact.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"

#include <random>

using namespace degen;

namespace {

void check_smith_contract(const ZMatrix& m, const SmithResult& s) {
    REQUIRE(s.u.rows() == m.rows());
    REQUIRE(s.v.rows() == m.cols());
    CHECK(s.u * m * s.v == s.d);
    Int du = determinant(s.u);
    Int dv = determinant(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // diagonal, nonnegative, divisibility chain
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d(i, j) == 0);
    auto f = s.invariant_factors();
    for (const auto& x : f) CHECK(x > 0);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
}

} // namespace

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
    ZMatrix m{{2, 0}, {0, 3}};
    auto s = smith_normal_form(m);
    check_smith_contract(m, s);
    REQUIRE(s.invariant_factors().size() == 2);
    CHECK(s.d(0, 0) == 1);
    CHECK(s.d(1, 1) == 6);
}

TEST_CASE("smith normal form of the zero matrix is trivial") {
    ZMatrix m = ZMatrix::zero(3, 2);
    auto s = smith_normal_form(m);
    CHECK(s.d.is_zero());
    CHECK(s.u == ZMatrix::identity(3));
    CHECK(s.v == ZMatrix::identity(2));
}

TEST_CASE("Klein bottle boundary has exactly one invariant factor 2") {
    // d2 of the one-vertex Klein bottle Delta-complex with edges a, b, c
    // and triangles with boundaries a + b - c and -a + b + c. The modular
    // oracle confirms the 2-torsion: rank over Q is 2 but rank mod 2 is 1,
    // so H_1 = Z + Z/2.
    ZMatrix d2{{1, -1}, {1, 1}, {-1, 1}};
    auto s = smith_normal_form(d2);
    check_smith_contract(d2, s);
    auto f = s.invariant_factors();
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 1);
    CHECK(f[1] == 2);
    CHECK(testgen::oracle_rank_mod_p(d2, 2) == 1);
    CHECK(testgen::oracle_rank_mod_p(d2, 3) == 2);
}

TEST_CASE("smith normal form contract holds on 500 random matrices") {
    std::mt19937 rng(81);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int trial = 0; trial < 500; ++trial) {
        ZMatrix m = testgen::random_int_matrix(rng, size(rng), size(rng), -9, 9);
        auto s = smith_normal_form(m);
        check_smith_contract(m, s);
        CHECK(s.invariant_factors().size() == rank(m));
    }
}
