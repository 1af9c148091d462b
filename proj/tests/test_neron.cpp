#include <degen/cover.hpp>
#include <degen/neron.hpp>
#include <degen/weight.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"

#include <random>

using namespace degen;
namespace fx = degen::fixtures;

TEST_CASE("monodromy operators from the torus rank") {
    auto n0 = monodromy_on_h1({0});
    CHECK(n0.matrix.is_zero());
    CHECK(nilpotency_index(n0) == 1);

    auto n1 = monodromy_on_h1({1});
    CHECK(rank(n1.matrix) == 1);
    CHECK((n1.matrix * n1.matrix).is_zero());

    auto n2 = monodromy_on_h1({2});
    CHECK(rank(n2.matrix) == 2);
    CHECK((n2.matrix * n2.matrix).is_zero());

    CHECK_THROWS_AS(monodromy_on_h1({3}), std::invalid_argument);
}

TEST_CASE("the torus-rank dictionary") {
    CHECK(type_from_rank({0}) == DegenerationType::I);
    CHECK(type_from_rank({1}) == DegenerationType::II);
    CHECK(type_from_rank({2}) == DegenerationType::III);
    for (std::size_t r : {0u, 1u, 2u}) {
        UniformizationDatum d{r};
        CHECK(d.abelian_rank() == 2 - r);
        CHECK(nilpotency_index(wedge_square(monodromy_on_h1(d))) == r + 1);
    }
}

TEST_CASE("the dictionary is stable under 200 random conjugations") {
    std::mt19937 rng(141);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = static_cast<std::size_t>(trial % 3);
        auto n = monodromy_on_h1({r});
        auto u = to_rational(testgen::random_unimodular(rng, 4));
        QMatrix conjugated = u * n.matrix * testgen::inverse(u);
        NilpotentOperator m{4, conjugated};
        CHECK(nilpotency_index(wedge_square(m)) == r + 1);
    }
}

TEST_CASE("torus rank agrees with the spectral index of the matching fixtures") {
    // rank 1 <-> Type II cycle, rank 2 <-> Type III torus fixture
    auto index_of = [](const fx::ConfigFixture& f) {
        return monodromy_index(compute_E2(build_E1(f.config, f.transfers)), f.config.surface_class);
    };
    CHECK(static_cast<std::size_t>(type_from_rank({0})) ==
          index_of(fx::smooth_fibre(FibreClass::Abelian)));
    CHECK(static_cast<std::size_t>(type_from_rank({1})) == index_of(fx::abelian_cycle(4)));
    CHECK(static_cast<std::size_t>(type_from_rank({2})) == index_of(fx::abelian_csaszar()));
}
