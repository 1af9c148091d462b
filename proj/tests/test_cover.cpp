#include <degen/cover.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace degen;
namespace fx = degen::fixtures;

TEST_CASE("the fixture cover pairs validate") {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto chain = covers::k3_over_enriques_chain(n);
        auto verdict = validate_cover(chain);
        INFO((verdict.violations.empty() ? "" : verdict.violations.front().message));
        CHECK(verdict.pass);
        CHECK(validate_cover(covers::abelian_over_bielliptic_cycle(n)).pass);
        CHECK(validate_cover(covers::abelian_over_bielliptic_chain(n)).pass);
    }
    // bielliptic torsion orders
    for (std::size_t k : {2u, 3u, 4u, 6u})
        CHECK(validate_cover(covers::abelian_over_bielliptic_cycle(3, k)).pass);
    CHECK(validate_cover(covers::k3_over_enriques_rp2()).pass);
    CHECK(validate_cover(covers::abelian_over_bielliptic_klein()).pass);
    CHECK(validate_cover(covers::smooth_cover(FibreClass::K3,
                                              fx::smooth_fibre(FibreClass::Enriques).config))
              .pass);
}

TEST_CASE("an irreducible cover over a rational component is rejected") {
    auto m = covers::k3_over_enriques_chain(3);
    // redirect the middle component onto the rational end
    for (auto& cc : m.component_map)
        if (cc.behavior == FibreBehavior::IrreducibleCover) cc.base = 0;
    auto verdict = validate_cover(m);
    CHECK(!verdict.pass);
    bool found = false;
    for (const auto& v : verdict.violations)
        if (v.clause == "simply-connected") found = true;
    CHECK(found);
}

TEST_CASE("fibre degree bookkeeping is enforced") {
    auto m = covers::abelian_over_bielliptic_cycle(3);
    m.component_map[0].base = (m.component_map[0].base + 1) % 3;
    auto verdict = validate_cover(m);
    CHECK(!verdict.pass);

    auto m2 = covers::k3_over_enriques_chain(2);
    m2.degree = 3;
    CHECK(!validate_cover(m2).pass);
}

TEST_CASE("curve incidences must commute with the component map") {
    auto m = covers::abelian_over_bielliptic_cycle(4);
    m.curve_map[0] = (m.curve_map[0] + 1) % 4;
    auto verdict = validate_cover(m);
    CHECK(!verdict.pass);
}

TEST_CASE("split copies must keep the base component kind") {
    auto m = covers::k3_over_enriques_rp2();
    m.total.components[0].kind = ComponentKind::of(ComponentType::EllipticRuled);
    CHECK(!validate_cover(m).pass);
}

TEST_CASE("type transfer holds on every fixture pair") {
    auto equal_types = [](const CoverMap& m, DegenerationType expected) {
        auto v = check_type_transfer(m);
        REQUIRE(v.total_verdict.accepted());
        REQUIRE(v.base_verdict.accepted());
        CHECK(v.pass);
        CHECK(*v.total_verdict.type == expected);
    };
    equal_types(covers::smooth_cover(FibreClass::K3, fx::smooth_fibre(FibreClass::Enriques).config),
                DegenerationType::I);
    for (std::size_t n = 2; n <= 5; ++n) {
        equal_types(covers::k3_over_enriques_chain(n), DegenerationType::II);
        equal_types(covers::abelian_over_bielliptic_cycle(n), DegenerationType::II);
        equal_types(covers::abelian_over_bielliptic_chain(n), DegenerationType::II);
    }
    equal_types(covers::k3_over_enriques_rp2(), DegenerationType::III);
    equal_types(covers::abelian_over_bielliptic_klein(), DegenerationType::III);
}

TEST_CASE("Euler characteristic is multiplicative for the free fixture pairs") {
    for (const CoverMap& m : {covers::k3_over_enriques_rp2(),
                              covers::abelian_over_bielliptic_klein(),
                              covers::abelian_over_bielliptic_cycle(3, 2),
                              covers::abelian_over_bielliptic_cycle(2, 3)}) {
        auto total = dual_graph(m.total);
        auto base = dual_graph(m.base);
        CHECK(total.euler_characteristic() ==
              static_cast<long long>(m.degree) * base.euler_characteristic());
        // covering numerics on cells: every base component has preimage
        // degrees summing to the cover degree
        std::vector<std::size_t> fibre(m.base.components.size(), 0);
        for (const auto& cc : m.component_map) fibre[cc.base] += cc.degree;
        for (auto f : fibre) CHECK(f == m.degree);
    }
}

TEST_CASE("canonical covers exist exactly for Enriques and bielliptic inputs") {
    CHECK(!canonical_cover(fx::k3_chain(3).config).has_value());
    CHECK(!canonical_cover(fx::abelian_cycle(3).config).has_value());
    CHECK(!canonical_cover(fx::abelian_chain(3).config).has_value()); // does not classify

    auto smooth = canonical_cover(fx::smooth_fibre(FibreClass::Enriques).config);
    REQUIRE(smooth.has_value());
    CHECK(smooth->total.surface_class == FibreClass::K3);

    auto chain = canonical_cover(fx::enriques_chain(4).config);
    REQUIRE(chain.has_value());
    CHECK(chain->total.components.size() == 7);
    CHECK(validate_cover(*chain).pass);

    auto cycle = canonical_cover(fx::bielliptic_cycle(3).config);
    REQUIRE(cycle.has_value());
    CHECK(cycle->total.components.size() == 6);
    CHECK(validate_cover(*cycle).pass);

    auto klein = canonical_cover(fx::bielliptic_klein().config);
    REQUIRE(klein.has_value());
    CHECK(validate_cover(*klein).pass);
    CHECK(check_type_transfer(*klein).pass);
}

TEST_CASE("canonical covers survive a relabelled base") {
    // reverse the component listing of an Enriques chain; the canonical
    // cover must still validate and transfer the type
    auto base = fx::enriques_chain(4).config;
    Configuration reversed = base;
    std::size_t n = base.components.size();
    for (std::size_t i = 0; i < n; ++i) reversed.components[i] = base.components[n - 1 - i];
    for (auto& curve : reversed.double_curves) {
        curve.left.component = n - 1 - curve.left.component;
        curve.right.component = n - 1 - curve.right.component;
    }
    auto m = canonical_cover(reversed);
    REQUIRE(m.has_value());
    CHECK(validate_cover(*m).pass);
    CHECK(check_type_transfer(*m).pass);
}
