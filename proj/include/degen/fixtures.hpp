#pragma once

// The bundled configurations: smooth fibres, Type II chains and cycles,
// and the Type III fixtures built from the standard surface complexes.
// Every generator output passes local validation and classifies to its
// advertised type; the anti-fixtures (abelian chain, abelian-over-Klein)
// are provided for the exclusion arguments and are not exposed through
// the example generator.

#include <degen/complexes.hpp>
#include <degen/config.hpp>
#include <degen/cy3.hpp>
#include <degen/weight.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace degen::fixtures {

struct ConfigFixture {
    Configuration config;
    TransferTemplate transfers;
};

namespace detail {

inline Component make_component(const std::string& id, ComponentType t,
                                std::optional<std::size_t> b2 = std::nullopt) {
    return Component{id, ComponentKind::of(t, b2)};
}

inline OmegaClass omega_for(FibreClass cls) {
    return cls == FibreClass::K3 || cls == FibreClass::Abelian ? OmegaClass::Trivial
                                                               : OmegaClass::Torsion;
}

} // namespace detail

inline ConfigFixture smooth_fibre(FibreClass cls) {
    ConfigFixture f;
    f.config.surface_class = cls;
    f.config.omega = detail::omega_for(cls);
    ComponentType t = cls == FibreClass::K3         ? ComponentType::K3
                      : cls == FibreClass::Enriques ? ComponentType::Enriques
                      : cls == FibreClass::Abelian  ? ComponentType::Abelian
                                                    : ComponentType::Bielliptic;
    f.config.components.push_back(detail::make_component("Y1", t));
    return f;
}

inline ConfigFixture k3_type1() { return smooth_fibre(FibreClass::K3); }

// Chain of n components joined by elliptic curves; ends rational, the
// interior elliptic ruled with rulings.
inline ConfigFixture k3_chain(std::size_t n) {
    if (n < 2) throw std::invalid_argument("k3_chain: need at least two components");
    ConfigFixture f;
    f.config.surface_class = FibreClass::K3;
    f.config.omega = OmegaClass::Trivial;
    for (std::size_t i = 0; i < n; ++i) {
        bool end = i == 0 || i + 1 == n;
        f.config.components.push_back(detail::make_component(
            "Y" + std::to_string(i + 1), end ? ComponentType::Rational : ComponentType::EllipticRuled));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        DoubleCurve c;
        c.id = "C" + std::to_string(i + 1);
        c.genus = 1;
        auto role = [&](std::size_t comp) {
            return f.config.components[comp].kind.type == ComponentType::Rational
                       ? CurveRole::EllipticOnRational
                       : CurveRole::Ruling;
        };
        c.left = {i, role(i)};
        c.right = {i + 1, role(i + 1)};
        f.config.double_curves.push_back(c);
    }
    return f;
}

// Chain with a rational first component, elliptic ruled interior and a
// 2-ruling on the last component.
inline ConfigFixture enriques_chain(std::size_t n) {
    if (n < 2) throw std::invalid_argument("enriques_chain: need at least two components");
    ConfigFixture f;
    f.config.surface_class = FibreClass::Enriques;
    f.config.omega = OmegaClass::Torsion;
    f.config.components.push_back(detail::make_component("Y1", ComponentType::Rational));
    for (std::size_t i = 1; i < n; ++i)
        f.config.components.push_back(
            detail::make_component("Y" + std::to_string(i + 1), ComponentType::EllipticRuled));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        DoubleCurve c;
        c.id = "C" + std::to_string(i + 1);
        c.genus = 1;
        c.left = {i, i == 0 ? CurveRole::EllipticOnRational : CurveRole::Ruling};
        c.right = {i + 1, i + 2 == n ? CurveRole::TwoRuling : CurveRole::Ruling};
        f.config.double_curves.push_back(c);
    }
    return f;
}

// Cycle of n elliptic ruled components, every double curve a ruling.
inline ConfigFixture abelian_cycle(std::size_t n) {
    if (n < 2) throw std::invalid_argument("abelian_cycle: need at least two components");
    ConfigFixture f;
    f.config.surface_class = FibreClass::Abelian;
    f.config.omega = OmegaClass::Trivial;
    for (std::size_t i = 0; i < n; ++i)
        f.config.components.push_back(
            detail::make_component("Y" + std::to_string(i + 1), ComponentType::EllipticRuled));
    for (std::size_t i = 0; i < n; ++i) {
        DoubleCurve c;
        c.id = "C" + std::to_string(i + 1);
        c.genus = 1;
        c.left = {i, CurveRole::Ruling};
        c.right = {(i + 1) % n, CurveRole::Ruling};
        f.config.double_curves.push_back(c);
    }
    return f;
}

// Anti-fixture for the exclusion argument: a chain of elliptic ruled
// surfaces passes local validation but has h^1(Y, O) = 1, not 2.
inline ConfigFixture abelian_chain(std::size_t n) {
    if (n < 2) throw std::invalid_argument("abelian_chain: need at least two components");
    ConfigFixture f = abelian_cycle(n);
    f.config.double_curves.pop_back();
    // the ends now carry a single curve each, which must be a 2-ruling
    f.config.double_curves.front().left.role = CurveRole::TwoRuling;
    f.config.double_curves.back().right.role = CurveRole::TwoRuling;
    return f;
}

// Cycle of elliptic ruled surfaces with a holonomy twist on one transfer
// so that h^1(Y, O) = 1 and the weight E_2^{0,1} vanishes.
inline ConfigFixture bielliptic_cycle(std::size_t n) {
    ConfigFixture f = abelian_cycle(n);
    f.config.surface_class = FibreClass::Bielliptic;
    f.config.omega = OmegaClass::Torsion;
    QMatrix minus = QMatrix::identity(2);
    minus(0, 0) = -1;
    minus(1, 1) = -1;
    f.transfers.weight_h1[{0, 0}] = minus;
    f.transfers.coherent_h1[{0, 0}] = Rat(-1);
    return f;
}

// Chain of elliptic ruled surfaces with 2-rulings on both end components.
inline ConfigFixture bielliptic_chain(std::size_t n) {
    if (n < 2) throw std::invalid_argument("bielliptic_chain: need at least two components");
    ConfigFixture f;
    f.config.surface_class = FibreClass::Bielliptic;
    f.config.omega = OmegaClass::Torsion;
    for (std::size_t i = 0; i < n; ++i)
        f.config.components.push_back(
            detail::make_component("Y" + std::to_string(i + 1), ComponentType::EllipticRuled));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        DoubleCurve c;
        c.id = "C" + std::to_string(i + 1);
        c.genus = 1;
        c.left = {i, i == 0 ? CurveRole::TwoRuling : CurveRole::Ruling};
        c.right = {i + 1, i + 2 == n ? CurveRole::TwoRuling : CurveRole::Ruling};
        f.config.double_curves.push_back(c);
    }
    return f;
}

// Type III configuration over a closed-surface complex: every vertex a
// rational component, every edge a rational double curve, every triangle
// a triple point.
inline ConfigFixture type3_from_surface(FibreClass cls, const DeltaComplex& gamma) {
    gamma.validate();
    ConfigFixture f;
    f.config.surface_class = cls;
    f.config.omega = detail::omega_for(cls);
    for (std::size_t v = 0; v < gamma.size(0); ++v)
        f.config.components.push_back(
            detail::make_component("Y" + std::to_string(v + 1), ComponentType::Rational));
    std::vector<std::size_t> triple_count(gamma.size(1), 0);
    for (const auto& t : gamma.cells[2])
        for (auto e : t) ++triple_count[e];
    for (std::size_t e = 0; e < gamma.size(1); ++e) {
        DoubleCurve c;
        c.id = "C" + std::to_string(e + 1);
        c.genus = 0;
        c.left = {gamma.vertex_at(1, e, 0), CurveRole::CycleMember};
        c.right = {gamma.vertex_at(1, e, 1), CurveRole::CycleMember};
        c.triple_point_count = triple_count[e];
        f.config.double_curves.push_back(c);
    }
    for (std::size_t t = 0; t < gamma.size(2); ++t) {
        TriplePoint tp;
        tp.id = "P" + std::to_string(t + 1);
        tp.curves = {gamma.cells[2][t][0], gamma.cells[2][t][1], gamma.cells[2][t][2]};
        tp.components = {gamma.vertex_at(2, t, 0), gamma.vertex_at(2, t, 1),
                         gamma.vertex_at(2, t, 2)};
        f.config.triple_points.push_back(tp);
    }
    return f;
}

inline ConfigFixture k3_tetrahedron() {
    return type3_from_surface(FibreClass::K3, simplex_boundary(3));
}
inline ConfigFixture abelian_csaszar() {
    return type3_from_surface(FibreClass::Abelian, csaszar_torus());
}
inline ConfigFixture enriques_rp2() {
    return type3_from_surface(FibreClass::Enriques, projective_plane_6());
}
inline ConfigFixture bielliptic_klein() {
    return type3_from_surface(FibreClass::Bielliptic, klein_bottle_9());
}

// Threefold configuration over a 3-dimensional complex: every vertex a
// component with the Mori / unirationality flags set, every edge a
// rational double surface, every triangle a rational triple curve, every
// tetrahedron a quadruple point.
inline Configuration3 cy3_from_complex(const DeltaComplex& g) {
    g.validate();
    Configuration3 c;
    c.wmc_assumed = true;
    for (std::size_t v = 0; v < g.size(0); ++v)
        c.components.push_back({"V" + std::to_string(v + 1), true, true});
    for (std::size_t e = 0; e < g.size(1); ++e) {
        DoubleSurface s;
        s.id = "S" + std::to_string(e + 1);
        s.components = {g.vertex_at(1, e, 0), g.vertex_at(1, e, 1)};
        c.double_surfaces.push_back(s);
    }
    for (std::size_t t = 0; t < g.size(2); ++t) {
        TripleCurve tc;
        tc.id = "C" + std::to_string(t + 1);
        tc.components = {g.vertex_at(2, t, 0), g.vertex_at(2, t, 1), g.vertex_at(2, t, 2)};
        tc.surfaces = {g.cells[2][t][0], g.cells[2][t][1], g.cells[2][t][2]};
        c.triple_curves.push_back(tc);
    }
    for (std::size_t q = 0; q < g.size(3); ++q) {
        QuadruplePoint qp;
        qp.id = "P" + std::to_string(q + 1);
        qp.components = {g.vertex_at(3, q, 0), g.vertex_at(3, q, 1), g.vertex_at(3, q, 2),
                         g.vertex_at(3, q, 3)};
        qp.curves = {g.cells[3][q][0], g.cells[3][q][1], g.cells[3][q][2], g.cells[3][q][3]};
        c.quadruple_points.push_back(qp);
    }
    return c;
}

inline Configuration3 cy3_simplex_boundary() { return cy3_from_complex(simplex_boundary(4)); }

// Anti-fixture: a 3-torus dual complex, a closed 3-manifold with H_1 = Z^3.
inline Configuration3 cy3_three_torus() { return cy3_from_complex(torus_grid(3, 2)); }

} // namespace degen::fixtures
