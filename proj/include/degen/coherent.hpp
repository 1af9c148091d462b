#pragma once

// The coherent-cohomology spectral sequence
//   E_1^{s,t} = H^t(Y^(s), O)  =>  H^{s+t}(Y, O)
// over the base field. The t = 0 row is the simplicial cochain complex
// of the dual complex, the t = 1 row uses the same transfer templates as
// the weight page (scalar h^1 blocks), and the t = 2 row holds the h^2
// entries of the components with no outgoing maps. The abutment sums the
// antidiagonals of E_2.
//
// The base-field characteristic is a parameter with default 0; values 2
// and 3 are rejected (the classification used here needs p > 3).

#include <degen/config.hpp>
#include <degen/exact.hpp>
#include <degen/weight.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace degen {

struct CoherentPage {
    unsigned field_char = 0;
    std::map<std::pair<int, int>, std::size_t> e1_dims;
    std::map<std::pair<int, int>, std::size_t> e2_dims;
    std::array<std::size_t, 3> result{}; // (h^0, h^1, h^2)(Y, O)

    std::size_t e2(int s, int t) const {
        auto it = e2_dims.find({s, t});
        return it == e2_dims.end() ? 0 : it->second;
    }
};

inline CoherentPage coherent_cohomology(const Configuration& c, const TransferTemplate& transfers) {
    if (c.field_char == 2 || c.field_char == 3)
        throw std::invalid_argument("coherent_cohomology: base field characteristic must not be 2 or 3");
    if (c.field_char != 0 && !is_prime(c.field_char))
        throw std::invalid_argument("coherent_cohomology: characteristic must be 0 or prime");

    DeltaComplex gamma = dual_graph(c);
    StratumTables tables = stratum_tables(c);

    const std::size_t nV = c.components.size();
    const std::size_t nE = c.double_curves.size();
    const std::size_t nT = c.triple_points.size();

    QMatrix delta0 = to_rational(gamma.boundary_matrix(1).transpose()); // E x V
    QMatrix delta1 = to_rational(gamma.boundary_matrix(2).transpose()); // T x E

    std::vector<std::size_t> h1_sizes;
    for (const auto& h : tables.component_coherent) h1_sizes.push_back(h[1]);
    auto h1_off = detail::offsets(h1_sizes);
    std::size_t h1_comp = h1_off.back();

    std::vector<std::size_t> g_sizes;
    for (const auto& curve : c.double_curves) g_sizes.push_back(curve.genus);
    auto g_off = detail::offsets(g_sizes);
    std::size_t h1_curve = g_off.back();

    std::size_t h2_comp = 0;
    for (const auto& h : tables.component_coherent) h2_comp += h[2];

    // h^1(O) transfer map with cochain signs
    QMatrix h1_map(h1_curve, h1_comp);
    for (std::size_t e = 0; e < nE; ++e) {
        const auto& curve = c.double_curves[e];
        if (curve.genus == 0) continue;
        std::size_t lo = std::min(curve.left.component, curve.right.component);
        for (int side = 0; side < 2; ++side) {
            std::size_t comp = side == 0 ? curve.left.component : curve.right.component;
            if (h1_sizes[comp] == 0) continue;
            if (h1_sizes[comp] != 1)
                throw std::invalid_argument("coherent_cohomology: no template for component " +
                                            c.components[comp].id);
            Rat scalar = transfers.coherent_scalar(c, e, side);
            Rat sign = comp == lo ? Rat(-1) : Rat(1);
            h1_map(g_off[e], h1_off[comp]) += sign * scalar;
        }
    }

    CoherentPage page;
    page.field_char = c.field_char;
    auto rk = [&](const QMatrix& m) {
        return c.field_char == 0 ? rank(m) : rank_mod_p(m, c.field_char);
    };

    auto set_dims = [&](int s, int t, std::size_t d) {
        if (d > 0) page.e1_dims[{s, t}] = d;
    };
    set_dims(0, 0, nV);
    set_dims(1, 0, nE);
    set_dims(2, 0, nT);
    set_dims(0, 1, h1_comp);
    set_dims(1, 1, h1_curve);
    set_dims(0, 2, h2_comp);

    // t = 0 row: cochain complex of the dual complex
    std::size_t r0 = rk(delta0);
    std::size_t r1 = rk(delta1);
    if (!(delta1 * delta0).is_zero())
        throw std::invalid_argument("coherent_cohomology: cochain d∘d != 0");
    auto set_e2 = [&](int s, int t, std::size_t d) {
        if (d > 0) page.e2_dims[{s, t}] = d;
    };
    set_e2(0, 0, nV - r0);
    set_e2(1, 0, nE - r0 - r1);
    set_e2(2, 0, nT - r1);

    // t = 1 row: kernel and cokernel of the template map
    std::size_t rh = rk(h1_map);
    set_e2(0, 1, h1_comp - rh);
    set_e2(1, 1, h1_curve - rh);

    // t = 2 row: no maps in or out
    set_e2(0, 2, h2_comp);

    page.result = {page.e2(0, 0), page.e2(0, 1) + page.e2(1, 0),
                   page.e2(0, 2) + page.e2(1, 1) + page.e2(2, 0)};
    return page;
}

struct LogClassVerdict {
    bool pass = false;
    std::size_t h1_found = 0;
    std::size_t h1_expected = 0;
    bool omega_ok = false;
    OmegaClass omega_declared = OmegaClass::Trivial;
    std::string message;
};

// h^1(Y, O) against the class table (K3: 0, Enriques: 0, abelian: 2,
// bielliptic: 1). Omega triviality/torsion is a declared flag, recorded
// but never computed.
inline LogClassVerdict check_logarithmic_class(const Configuration& c, const CoherentPage& page) {
    LogClassVerdict v;
    switch (c.surface_class) {
    case FibreClass::K3: v.h1_expected = 0; break;
    case FibreClass::Enriques: v.h1_expected = 0; break;
    case FibreClass::Abelian: v.h1_expected = 2; break;
    case FibreClass::Bielliptic: v.h1_expected = 1; break;
    }
    v.h1_found = page.result[1];
    v.omega_declared = c.omega;
    bool needs_trivial =
        c.surface_class == FibreClass::K3 || c.surface_class == FibreClass::Abelian;
    v.omega_ok = needs_trivial ? c.omega == OmegaClass::Trivial : c.omega == OmegaClass::Torsion;
    v.pass = v.h1_found == v.h1_expected && v.omega_ok;
    v.message = "h1(Y,O) = " + std::to_string(v.h1_found) + ", class " +
                to_string(c.surface_class) + " expects " + std::to_string(v.h1_expected) +
                (v.omega_ok ? "" : "; declared omega class does not match");
    return v;
}

struct ChiFlatnessVerdict {
    bool pass = false;
    long long chi_found = 0;
    long long chi_expected = 0;
};

// chi(Y, O) = sum_s (-1)^s chi(Y^(s), O) against the class value
// (K3: 2, Enriques: 1, abelian: 0, bielliptic: 0). Needs only the
// stratum tables, not a validated configuration.
inline ChiFlatnessVerdict check_chi_flatness(const Configuration& c) {
    ChiFlatnessVerdict v;
    switch (c.surface_class) {
    case FibreClass::K3: v.chi_expected = 2; break;
    case FibreClass::Enriques: v.chi_expected = 1; break;
    case FibreClass::Abelian: v.chi_expected = 0; break;
    case FibreClass::Bielliptic: v.chi_expected = 0; break;
    }
    for (const auto& comp : c.components) v.chi_found += comp.kind.coherent_chi();
    for (const auto& curve : c.double_curves)
        v.chi_found -= 1 - static_cast<long long>(curve.genus);
    v.chi_found += static_cast<long long>(c.triple_points.size());
    v.pass = v.chi_found == v.chi_expected;
    return v;
}

} // namespace degen
