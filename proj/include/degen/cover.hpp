#pragma once

// Combinatorial finite etale covers of configurations. A cover map sends
// every total component to a base component, either as one of several
// isomorphic copies (SplitCopies, degree 1) or as an irreducible cover of
// degree >= 2; per base component the preimage degrees sum to the cover
// degree. Rational base components only ever split, since rational
// surfaces carry no nontrivial finite etale covers.
//
// canonical_cover builds the K3-over-Enriques and abelian-over-bielliptic
// covers from a classified base configuration: smooth covers for Type I,
// chain unwrapping (Type II chains), cycle unrolling (Type II cycles) and
// the orientation double cover of the dual complex for Type III.

#include <degen/complexes.hpp>
#include <degen/config.hpp>
#include <degen/fixtures.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace degen {

enum class FibreBehavior { IrreducibleCover, SplitCopies };

inline std::string to_string(FibreBehavior b) {
    return b == FibreBehavior::IrreducibleCover ? "IrreducibleCover" : "SplitCopies";
}

struct ComponentCover {
    std::size_t base = 0;
    FibreBehavior behavior = FibreBehavior::SplitCopies;
    std::size_t degree = 1; // 1 for SplitCopies, >= 2 for IrreducibleCover

    bool operator==(const ComponentCover&) const = default;
};

struct CoverMap {
    std::size_t degree = 2;
    Configuration total;
    Configuration base;
    std::vector<ComponentCover> component_map; // indexed by total component
    std::vector<std::size_t> curve_map;        // total curve -> base curve
    TransferTemplate base_transfers;           // carried along for reports

    bool operator==(const CoverMap&) const = default;
};

struct CoverVerdict {
    bool pass = false;
    std::vector<Violation> violations;
};

inline CoverVerdict validate_cover(const CoverMap& m) {
    CoverVerdict verdict;
    auto bad = [&](std::string where, std::string clause, std::string msg) {
        verdict.violations.push_back({std::move(where), std::move(clause), std::move(msg)});
    };
    if (m.degree < 2) bad("cover", "degree", "cover degree must be at least 2");
    for (const auto* side : {&m.total, &m.base}) {
        auto report = validate_local(*side);
        if (!report.pass)
            for (const auto& v : report.violations) verdict.violations.push_back(v);
    }
    if (m.component_map.size() != m.total.components.size() ||
        m.curve_map.size() != m.total.double_curves.size()) {
        bad("cover", "shape", "component or curve map has the wrong length");
        return verdict;
    }
    for (const auto& cc : m.component_map)
        if (cc.base >= m.base.components.size()) {
            bad("cover", "reference", "component map target out of range");
            return verdict;
        }
    for (auto cb : m.curve_map)
        if (cb >= m.base.double_curves.size()) {
            bad("cover", "reference", "curve map target out of range");
            return verdict;
        }

    // fibre degrees per base component
    std::vector<std::size_t> fibre_degree(m.base.components.size(), 0);
    for (std::size_t i = 0; i < m.component_map.size(); ++i) {
        const auto& cc = m.component_map[i];
        const auto& total_comp = m.total.components[i];
        const auto& base_comp = m.base.components[cc.base];
        if (cc.behavior == FibreBehavior::SplitCopies) {
            if (cc.degree != 1)
                bad(total_comp.id, "degree", "a split copy maps with degree 1");
            if (total_comp.kind.type != base_comp.kind.type)
                bad(total_comp.id, "split-kind", "a split copy must have the base component's kind");
        } else {
            if (cc.degree < 2)
                bad(total_comp.id, "degree", "an irreducible cover has degree at least 2");
            if (base_comp.kind.type == ComponentType::Rational)
                bad(base_comp.id, "simply-connected",
                    "rational components are simply connected and admit no irreducible cover");
            if (total_comp.kind.type == ComponentType::Rational &&
                base_comp.kind.type == ComponentType::EllipticRuled)
                bad(total_comp.id, "cover-kind",
                    "a rational surface cannot cover an elliptic ruled surface");
        }
        fibre_degree[cc.base] += cc.degree;
    }
    for (std::size_t b = 0; b < fibre_degree.size(); ++b)
        if (fibre_degree[b] != m.degree)
            bad(m.base.components[b].id, "fibre-degree",
                "preimage degrees sum to " + std::to_string(fibre_degree[b]) + ", expected " +
                    std::to_string(m.degree));

    // curve incidences commute with the component map
    std::vector<std::size_t> curve_fibre(m.base.double_curves.size(), 0);
    for (std::size_t ci = 0; ci < m.curve_map.size(); ++ci) {
        const auto& tc = m.total.double_curves[ci];
        const auto& bc = m.base.double_curves[m.curve_map[ci]];
        std::multiset<std::size_t> mapped{m.component_map[tc.left.component].base,
                                          m.component_map[tc.right.component].base};
        std::multiset<std::size_t> expected{bc.left.component, bc.right.component};
        if (mapped != expected)
            bad(tc.id, "incidence", "curve endpoints do not commute with the component map");
        if (tc.genus != bc.genus)
            bad(tc.id, "genus", "an etale cover preserves the genus of a double curve");
        ++curve_fibre[m.curve_map[ci]];
    }
    for (std::size_t b = 0; b < curve_fibre.size(); ++b) {
        if (curve_fibre[b] == 0)
            bad(m.base.double_curves[b].id, "surjective", "base curve has no preimage");
        if (curve_fibre[b] > m.degree)
            bad(m.base.double_curves[b].id, "fibre-degree",
                "base curve has more preimages than the cover degree");
    }

    // triple points map to triple points
    auto base_triples = [&]() {
        std::set<std::array<std::size_t, 3>> keys;
        for (const auto& tp : m.base.triple_points) {
            std::array<std::size_t, 3> k = tp.components;
            std::sort(k.begin(), k.end());
            keys.insert(k);
        }
        return keys;
    }();
    for (const auto& tp : m.total.triple_points) {
        std::array<std::size_t, 3> k{m.component_map[tp.components[0]].base,
                                     m.component_map[tp.components[1]].base,
                                     m.component_map[tp.components[2]].base};
        std::sort(k.begin(), k.end());
        if (!base_triples.count(k))
            bad(tp.id, "incidence", "triple point has no image triple point in the base");
    }

    verdict.pass = verdict.violations.empty();
    return verdict;
}

struct TypeTransferVerdict {
    bool pass = false;
    TypeVerdict total_verdict;
    TypeVerdict base_verdict;
};

// The type of the total configuration equals the type of the base.
inline TypeTransferVerdict check_type_transfer(const CoverMap& m) {
    TypeTransferVerdict v;
    v.total_verdict = classify(m.total);
    v.base_verdict = classify(m.base);
    v.pass = v.total_verdict.accepted() && v.base_verdict.accepted() &&
             *v.total_verdict.type == *v.base_verdict.type;
    return v;
}

namespace covers {

// K3 chain of length 2n-1 over an Enriques chain: the covering chain
// folds onto the base, and the middle component double-covers the
// 2-ruling end. comp_order / curve_order give the base chain in walk
// order starting at the rational end.
inline CoverMap k3_over_enriques_chain_of(const Configuration& base,
                                          std::vector<std::size_t> comp_order,
                                          std::vector<std::size_t> curve_order) {
    const std::size_t n = comp_order.size();
    if (base.components[comp_order.front()].kind.type != ComponentType::Rational) {
        std::reverse(comp_order.begin(), comp_order.end());
        std::reverse(curve_order.begin(), curve_order.end());
    }
    CoverMap m;
    m.degree = 2;
    m.base = base;
    m.total = fixtures::k3_chain(2 * n - 1).config;
    for (std::size_t i = 0; i < 2 * n - 1; ++i) {
        ComponentCover cc;
        cc.base = comp_order[std::min(i, 2 * n - 2 - i)];
        bool middle = i == n - 1;
        cc.behavior = middle ? FibreBehavior::IrreducibleCover : FibreBehavior::SplitCopies;
        cc.degree = middle ? 2 : 1;
        m.component_map.push_back(cc);
    }
    for (std::size_t j = 0; j + 1 < 2 * n - 1; ++j)
        m.curve_map.push_back(curve_order[std::min(j, 2 * n - 3 - j)]);
    return m;
}

// Abelian cycle of length k*n over a bielliptic cycle of length n, deck
// rotation by n.
inline CoverMap abelian_over_bielliptic_cycle_of(const Configuration& base,
                                                 const std::vector<std::size_t>& comp_order,
                                                 const std::vector<std::size_t>& curve_order,
                                                 std::size_t k) {
    if (k < 2) throw std::invalid_argument("cover degree must be >= 2");
    const std::size_t n = comp_order.size();
    CoverMap m;
    m.degree = k;
    m.base = base;
    m.total = fixtures::abelian_cycle(k * n).config;
    for (std::size_t i = 0; i < k * n; ++i)
        m.component_map.push_back({comp_order[i % n], FibreBehavior::SplitCopies, 1});
    for (std::size_t i = 0; i < k * n; ++i) m.curve_map.push_back(curve_order[i % n]);
    return m;
}

// Abelian cycle of length 2n-2 over a bielliptic chain of length n; the
// reflection fixes the two components covering the 2-ruling ends.
inline CoverMap abelian_over_bielliptic_chain_of(const Configuration& base,
                                                 const std::vector<std::size_t>& comp_order,
                                                 const std::vector<std::size_t>& curve_order) {
    const std::size_t n = comp_order.size();
    CoverMap m;
    m.degree = 2;
    m.base = base;
    m.total = fixtures::abelian_cycle(2 * n - 2).config;
    for (std::size_t i = 0; i < 2 * n - 2; ++i) {
        ComponentCover cc;
        cc.base = comp_order[std::min(i, 2 * n - 2 - i)];
        bool fixed = i == 0 || i == n - 1;
        cc.behavior = fixed ? FibreBehavior::IrreducibleCover : FibreBehavior::SplitCopies;
        cc.degree = fixed ? 2 : 1;
        m.component_map.push_back(cc);
    }
    for (std::size_t i = 0; i < 2 * n - 2; ++i)
        m.curve_map.push_back(curve_order[std::min(i, 2 * n - 3 - i)]);
    return m;
}

// Type III cover along the orientation double cover of the dual complex.
// The cells of dual_graph(base) are indexed like the components and
// curves of the base, so the cover projections restrict directly.
inline CoverMap type3_orientation_cover(FibreClass total_class, const Configuration& base) {
    SurfaceCover sc = orientation_double_cover(dual_graph(base));
    CoverMap m;
    m.degree = 2;
    m.base = base;
    m.total = fixtures::type3_from_surface(total_class, sc.total).config;
    for (std::size_t v = 0; v < sc.total.size(0); ++v)
        m.component_map.push_back({sc.vertex_to_base[v], FibreBehavior::SplitCopies, 1});
    m.curve_map = sc.edge_to_base;
    return m;
}

inline CoverMap smooth_cover(FibreClass total_class, const Configuration& base) {
    CoverMap m;
    m.degree = 2;
    m.base = base;
    m.total = fixtures::smooth_fibre(total_class).config;
    m.component_map.push_back({0, FibreBehavior::IrreducibleCover, 2});
    return m;
}

} // namespace covers

// The canonical K3 or abelian cover of a classified Enriques or
// bielliptic configuration; nullopt for K3/abelian inputs and for
// configurations that do not classify.
inline std::optional<CoverMap> canonical_cover(const Configuration& c,
                                               const TransferTemplate& transfers = {}) {
    if (c.surface_class == FibreClass::K3 || c.surface_class == FibreClass::Abelian)
        return std::nullopt;
    TypeVerdict verdict = classify(c);
    if (!verdict.accepted()) return std::nullopt;
    FibreClass total_class =
        c.surface_class == FibreClass::Enriques ? FibreClass::K3 : FibreClass::Abelian;
    std::optional<CoverMap> m;
    switch (*verdict.type) {
    case DegenerationType::I:
        m = covers::smooth_cover(total_class, c);
        break;
    case DegenerationType::II:
        if (c.surface_class == FibreClass::Enriques)
            m = covers::k3_over_enriques_chain_of(c, verdict.component_order, verdict.curve_order);
        else if (verdict.shape == "cycle")
            m = covers::abelian_over_bielliptic_cycle_of(c, verdict.component_order,
                                                         verdict.curve_order, 2);
        else
            m = covers::abelian_over_bielliptic_chain_of(c, verdict.component_order,
                                                         verdict.curve_order);
        break;
    case DegenerationType::III:
        m = covers::type3_orientation_cover(total_class, c);
        break;
    }
    if (m) m->base_transfers = transfers;
    return m;
}

namespace covers {

// fixture pairs

inline CoverMap k3_over_enriques_chain(std::size_t n) {
    return *canonical_cover(fixtures::enriques_chain(n).config);
}

inline CoverMap abelian_over_bielliptic_cycle(std::size_t n, std::size_t k = 2) {
    auto f = fixtures::bielliptic_cycle(n);
    auto verdict = classify(f.config);
    auto m = abelian_over_bielliptic_cycle_of(f.config, verdict.component_order,
                                              verdict.curve_order, k);
    m.base_transfers = f.transfers;
    return m;
}

inline CoverMap abelian_over_bielliptic_chain(std::size_t n) {
    return *canonical_cover(fixtures::bielliptic_chain(n).config);
}

inline CoverMap k3_over_enriques_rp2() {
    return *canonical_cover(fixtures::enriques_rp2().config);
}

inline CoverMap abelian_over_bielliptic_klein() {
    return *canonical_cover(fixtures::bielliptic_klein().config);
}

} // namespace covers

} // namespace degen
