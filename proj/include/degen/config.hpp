#pragma once

// The configuration model for degenerate fibres: components with their
// cohomology tables, double curves with per-side roles, triple points,
// local anticanonical validation, the dual complex, and the chain /
// cycle / triangulated-surface classification into Types I, II, III.
//
// Local validation enforces, per component V with boundary divisor
// D = sum of its double curves, exactly one of:
//   (1a) elliptic ruled with two disjoint genus-1 rulings,
//   (1b) elliptic ruled with a single genus-1 2-ruling,
//   (2a) rational with a single genus-1 boundary curve,
//   (2b) rational with a cycle of genus-0 curves (length 2 meeting twice,
//        or length >= 3 meeting consecutively),
// together with the genus formula T_C = 2 - 2g on every curve and
// connectedness of the dual complex.

#include <degen/delta.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace degen {

enum class FibreClass { K3, Enriques, Abelian, Bielliptic };

inline std::string to_string(FibreClass c) {
    switch (c) {
    case FibreClass::K3: return "K3";
    case FibreClass::Enriques: return "Enriques";
    case FibreClass::Abelian: return "Abelian";
    case FibreClass::Bielliptic: return "Bielliptic";
    }
    return "?";
}

enum class ComponentType { K3, Enriques, Abelian, Bielliptic, Rational, EllipticRuled };

inline std::string to_string(ComponentType t) {
    switch (t) {
    case ComponentType::K3: return "K3";
    case ComponentType::Enriques: return "Enriques";
    case ComponentType::Abelian: return "Abelian";
    case ComponentType::Bielliptic: return "Bielliptic";
    case ComponentType::Rational: return "Rational";
    case ComponentType::EllipticRuled: return "EllipticRuled";
    }
    return "?";
}

inline bool is_smooth_class(ComponentType t) {
    return t == ComponentType::K3 || t == ComponentType::Enriques ||
           t == ComponentType::Abelian || t == ComponentType::Bielliptic;
}

// Surface kind plus its Betti and coherent tables. b2 is free for the
// ruled/rational kinds (minimal defaults 1 and 2); abutment rows that
// depend on it are flagged opt-in downstream unless user-supplied.
struct ComponentKind {
    ComponentType type = ComponentType::Rational;
    std::size_t b2 = 1;
    bool b2_defaulted = true;

    bool operator==(const ComponentKind&) const = default;

    static ComponentKind of(ComponentType t, std::optional<std::size_t> user_b2 = std::nullopt) {
        ComponentKind k;
        k.type = t;
        switch (t) {
        case ComponentType::K3: k.b2 = 22; break;
        case ComponentType::Enriques: k.b2 = 10; break;
        case ComponentType::Abelian: k.b2 = 6; break;
        case ComponentType::Bielliptic: k.b2 = 2; break;
        case ComponentType::Rational: k.b2 = 1; break;
        case ComponentType::EllipticRuled: k.b2 = 2; break;
        }
        if (user_b2) {
            if (is_smooth_class(t) && *user_b2 != k.b2)
                throw std::invalid_argument("ComponentKind: b2 of a smooth class is fixed");
            std::size_t min_b2 = t == ComponentType::Rational ? 1 : 2;
            if (!is_smooth_class(t) && *user_b2 < min_b2)
                throw std::invalid_argument("ComponentKind: b2 below minimum for " + to_string(t));
            k.b2 = *user_b2;
            k.b2_defaulted = false;
        }
        return k;
    }

    std::array<std::size_t, 5> betti() const {
        switch (type) {
        case ComponentType::K3: return {1, 0, 22, 0, 1};
        case ComponentType::Enriques: return {1, 0, 10, 0, 1};
        case ComponentType::Abelian: return {1, 4, 6, 4, 1};
        case ComponentType::Bielliptic: return {1, 2, 2, 2, 1};
        case ComponentType::Rational: return {1, 0, b2, 0, 1};
        case ComponentType::EllipticRuled: return {1, 2, b2, 2, 1};
        }
        return {};
    }

    std::array<std::size_t, 3> coherent() const {
        switch (type) {
        case ComponentType::K3: return {1, 0, 1};
        case ComponentType::Enriques: return {1, 0, 0};
        case ComponentType::Abelian: return {1, 2, 1};
        case ComponentType::Bielliptic: return {1, 1, 0};
        case ComponentType::Rational: return {1, 0, 0};
        case ComponentType::EllipticRuled: return {1, 1, 0};
        }
        return {};
    }

    long long coherent_chi() const {
        auto h = coherent();
        return static_cast<long long>(h[0]) - static_cast<long long>(h[1]) +
               static_cast<long long>(h[2]);
    }
};

enum class CurveRole { Ruling, TwoRuling, CycleMember, EllipticOnRational };

inline std::string to_string(CurveRole r) {
    switch (r) {
    case CurveRole::Ruling: return "Ruling";
    case CurveRole::TwoRuling: return "TwoRuling";
    case CurveRole::CycleMember: return "CycleMember";
    case CurveRole::EllipticOnRational: return "EllipticOnRational";
    }
    return "?";
}

struct CurveSide {
    std::size_t component = 0;
    CurveRole role = CurveRole::CycleMember;

    bool operator==(const CurveSide&) const = default;
};

struct DoubleCurve {
    std::string id;
    unsigned genus = 0; // 0 or 1
    CurveSide left, right;
    std::size_t triple_point_count = 0;

    bool operator==(const DoubleCurve&) const = default;

    bool touches(std::size_t comp) const {
        return left.component == comp || right.component == comp;
    }
    const CurveSide& side_on(std::size_t comp) const {
        if (left.component == comp) return left;
        if (right.component == comp) return right;
        throw std::invalid_argument("DoubleCurve: component " + std::to_string(comp) +
                                    " is not a side of " + id);
    }
    std::size_t other_component(std::size_t comp) const {
        return left.component == comp ? right.component : left.component;
    }
};

struct TriplePoint {
    std::string id;
    std::array<std::size_t, 3> curves;     // indices into double_curves
    std::array<std::size_t, 3> components; // indices into components

    bool operator==(const TriplePoint&) const = default;
};

struct Component {
    std::string id;
    ComponentKind kind;

    bool operator==(const Component&) const = default;
};

enum class OmegaClass { Trivial, Torsion };

struct Configuration {
    FibreClass surface_class = FibreClass::K3;
    unsigned field_char = 0;
    OmegaClass omega = OmegaClass::Trivial; // declared, never computed
    std::vector<Component> components;
    std::vector<DoubleCurve> double_curves;
    std::vector<TriplePoint> triple_points;

    bool operator==(const Configuration&) const = default;

    std::vector<std::size_t> boundary_curves(std::size_t comp) const {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < double_curves.size(); ++c)
            if (double_curves[c].touches(comp)) out.push_back(c);
        return out;
    }

    std::vector<std::size_t> triples_on(std::size_t comp) const {
        std::vector<std::size_t> out;
        for (std::size_t t = 0; t < triple_points.size(); ++t) {
            const auto& p = triple_points[t].components;
            if (std::find(p.begin(), p.end(), comp) != p.end()) out.push_back(t);
        }
        return out;
    }
};

struct Violation {
    std::string where;  // component / curve / triple id, or "configuration"
    std::string clause; // short machine tag
    std::string message;
};

// Structural consistency: index ranges, distinct endpoints, triple points
// referencing three mutually intersecting curves, role/genus coherence,
// stored triple counts matching the list.
inline std::vector<Violation> validate_structure(const Configuration& c) {
    std::vector<Violation> v;
    auto bad = [&](std::string where, std::string clause, std::string msg) {
        v.push_back({std::move(where), std::move(clause), std::move(msg)});
    };
    const std::size_t nc = c.components.size();
    if (nc == 0) bad("configuration", "nonempty", "configuration has no components");

    std::set<std::string> ids;
    for (const auto& comp : c.components)
        if (!ids.insert(comp.id).second) bad(comp.id, "unique-id", "duplicate component id");
    for (const auto& curve : c.double_curves)
        if (!ids.insert(curve.id).second) bad(curve.id, "unique-id", "duplicate curve id");
    for (const auto& tp : c.triple_points)
        if (!ids.insert(tp.id).second) bad(tp.id, "unique-id", "duplicate triple point id");

    std::vector<std::size_t> triple_counts(c.double_curves.size(), 0);
    for (std::size_t ci = 0; ci < c.double_curves.size(); ++ci) {
        const auto& curve = c.double_curves[ci];
        if (curve.genus > 1) bad(curve.id, "genus", "curve genus must be 0 or 1");
        if (curve.left.component >= nc || curve.right.component >= nc) {
            bad(curve.id, "reference", "curve side references a missing component");
            continue;
        }
        if (curve.left.component == curve.right.component)
            bad(curve.id, "distinct-sides", "a smooth component cannot meet itself");
        for (const CurveSide* side : {&curve.left, &curve.right}) {
            ComponentType t = c.components[side->component].kind.type;
            switch (side->role) {
            case CurveRole::Ruling:
            case CurveRole::TwoRuling:
                if (t != ComponentType::EllipticRuled || curve.genus != 1)
                    bad(curve.id, "role",
                        to_string(side->role) + " requires an elliptic ruled side and genus 1");
                break;
            case CurveRole::CycleMember:
                if (curve.genus != 0) bad(curve.id, "role", "CycleMember requires genus 0");
                break;
            case CurveRole::EllipticOnRational:
                if (t != ComponentType::Rational || curve.genus != 1)
                    bad(curve.id, "role", "EllipticOnRational requires a rational side and genus 1");
                break;
            }
        }
    }

    for (const auto& tp : c.triple_points) {
        bool refs_ok = true;
        for (auto ci : tp.curves)
            if (ci >= c.double_curves.size()) refs_ok = false;
        for (auto pi : tp.components)
            if (pi >= nc) refs_ok = false;
        if (!refs_ok) {
            bad(tp.id, "reference", "triple point references a missing curve or component");
            continue;
        }
        std::set<std::size_t> comps(tp.components.begin(), tp.components.end());
        std::set<std::size_t> curves(tp.curves.begin(), tp.curves.end());
        if (comps.size() != 3 || curves.size() != 3) {
            bad(tp.id, "distinct", "triple point needs three distinct components and curves");
            continue;
        }
        // the three curves must realise the three component pairs
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        bool pair_ok = true;
        for (auto ci : tp.curves) {
            const auto& curve = c.double_curves[ci];
            std::size_t a = curve.left.component, b = curve.right.component;
            if (!comps.count(a) || !comps.count(b)) pair_ok = false;
            pairs.insert({std::min(a, b), std::max(a, b)});
        }
        if (!pair_ok || pairs.size() != 3)
            bad(tp.id, "incidence", "triple point curves do not pair up its components");
        for (auto ci : tp.curves) ++triple_counts[ci];
    }

    for (std::size_t ci = 0; ci < c.double_curves.size(); ++ci)
        if (c.double_curves[ci].triple_point_count != triple_counts[ci])
            bad(c.double_curves[ci].id, "triple-count",
                "stored triple_point_count " +
                    std::to_string(c.double_curves[ci].triple_point_count) + " but " +
                    std::to_string(triple_counts[ci]) + " triple points listed");
    return v;
}

enum class LocalCase { Smooth, TwoDisjointRulings, SingleTwoRuling, EllipticBoundary, RationalCycle };

inline std::string to_string(LocalCase lc) {
    switch (lc) {
    case LocalCase::Smooth: return "smooth";
    case LocalCase::TwoDisjointRulings: return "1a: two disjoint rulings";
    case LocalCase::SingleTwoRuling: return "1b: single 2-ruling";
    case LocalCase::EllipticBoundary: return "2a: elliptic curve on rational";
    case LocalCase::RationalCycle: return "2b: cycle of rational curves";
    }
    return "?";
}

struct ComponentVerdict {
    std::size_t component = 0;
    std::optional<LocalCase> matched;
    std::vector<std::string> violations;
};

struct LocalReport {
    bool pass = false;
    std::vector<ComponentVerdict> components;
    std::vector<Violation> violations; // structural + global

    std::optional<LocalCase> case_of(std::size_t comp) const { return components[comp].matched; }
};

namespace detail {

// nodes = boundary curves of the component, edges = triple points on it.
inline bool boundary_is_single_cycle(const Configuration& c, std::size_t comp,
                                     const std::vector<std::size_t>& boundary) {
    std::map<std::size_t, std::size_t> node;
    for (std::size_t k = 0; k < boundary.size(); ++k) node[boundary[k]] = k;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto ti : c.triples_on(comp)) {
        std::vector<std::size_t> on_comp;
        for (auto ci : c.triple_points[ti].curves)
            if (c.double_curves[ci].touches(comp)) on_comp.push_back(ci);
        if (on_comp.size() != 2) return false;
        edges.push_back({node.at(on_comp[0]), node.at(on_comp[1])});
    }
    return is_single_circle(boundary.size(), edges);
}

} // namespace detail

// Per-component anticanonical boundary cases plus the genus formula and
// global connectedness.
inline LocalReport validate_local(const Configuration& c) {
    LocalReport report;
    report.violations = validate_structure(c);
    if (!report.violations.empty()) return report;

    for (std::size_t ci = 0; ci < c.double_curves.size(); ++ci) {
        const auto& curve = c.double_curves[ci];
        std::size_t expected = curve.genus == 0 ? 2 : 0; // T_C = 2 - 2g
        if (curve.triple_point_count != expected)
            report.violations.push_back(
                {curve.id, "genus-formula",
                 "genus " + std::to_string(curve.genus) + " curve must carry " +
                     std::to_string(expected) + " triple points, has " +
                     std::to_string(curve.triple_point_count)});
    }

    for (std::size_t v = 0; v < c.components.size(); ++v) {
        ComponentVerdict cv;
        cv.component = v;
        const ComponentKind& kind = c.components[v].kind;
        auto boundary = c.boundary_curves(v);
        auto role_on = [&](std::size_t ci) { return c.double_curves[ci].side_on(v).role; };
        auto genus_of = [&](std::size_t ci) { return c.double_curves[ci].genus; };

        if (is_smooth_class(kind.type)) {
            if (boundary.empty())
                cv.matched = LocalCase::Smooth;
            else
                cv.violations.push_back("smooth component carries boundary curves");
        } else if (kind.type == ComponentType::EllipticRuled) {
            if (boundary.size() == 2 && genus_of(boundary[0]) == 1 && genus_of(boundary[1]) == 1 &&
                role_on(boundary[0]) == CurveRole::Ruling && role_on(boundary[1]) == CurveRole::Ruling)
                cv.matched = LocalCase::TwoDisjointRulings;
            else if (boundary.size() == 1 && genus_of(boundary[0]) == 1 &&
                     role_on(boundary[0]) == CurveRole::TwoRuling)
                cv.matched = LocalCase::SingleTwoRuling;
            else
                cv.violations.push_back(
                    "elliptic ruled boundary is neither two disjoint rulings nor one 2-ruling");
        } else { // Rational
            bool all_cycle = !boundary.empty();
            for (auto ci : boundary)
                if (genus_of(ci) != 0 || role_on(ci) != CurveRole::CycleMember) all_cycle = false;
            if (boundary.size() == 1 && genus_of(boundary[0]) == 1 &&
                role_on(boundary[0]) == CurveRole::EllipticOnRational) {
                cv.matched = LocalCase::EllipticBoundary;
            } else if (all_cycle && boundary.size() >= 2 &&
                       detail::boundary_is_single_cycle(c, v, boundary)) {
                cv.matched = LocalCase::RationalCycle;
            } else if (boundary.empty()) {
                cv.violations.push_back("rational component has empty boundary");
            } else {
                cv.violations.push_back(
                    "rational boundary is neither a single elliptic curve nor a cycle of rational curves");
            }
        }
        if (!cv.matched)
            report.violations.push_back({c.components[v].id, "anticanonical",
                                         cv.violations.empty() ? "no case matched"
                                                               : cv.violations.front()});
        report.components.push_back(std::move(cv));
    }

    report.pass = report.violations.empty();
    if (report.pass) {
        // connectedness of the special fibre
        std::vector<std::size_t> parent(c.components.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& curve : c.double_curves)
            parent[find(curve.left.component)] = find(curve.right.component);
        for (std::size_t v = 1; v < c.components.size(); ++v)
            if (find(v) != find(0)) {
                report.violations.push_back(
                    {"configuration", "connected", "special fibre is disconnected"});
                report.pass = false;
                break;
            }
    }
    return report;
}

// Dual complex: vertices = components, edges = double curves, triangles =
// triple points, with ascending component order inside each cell.
inline DeltaComplex dual_graph(const Configuration& c) {
    DeltaComplex g;
    for (std::size_t v = 0; v < c.components.size(); ++v) g.add_vertex();
    for (const auto& curve : c.double_curves) {
        std::size_t a = std::min(curve.left.component, curve.right.component);
        std::size_t b = std::max(curve.left.component, curve.right.component);
        if (a == b) throw std::invalid_argument("dual_graph: curve " + curve.id + " is a loop");
        g.add_cell(1, {b, a});
    }
    for (const auto& tp : c.triple_points) {
        std::array<std::size_t, 3> comps = tp.components;
        std::sort(comps.begin(), comps.end());
        auto curve_between = [&](std::size_t x, std::size_t y) -> std::size_t {
            for (auto ci : tp.curves) {
                const auto& curve = c.double_curves[ci];
                std::size_t a = std::min(curve.left.component, curve.right.component);
                std::size_t b = std::max(curve.left.component, curve.right.component);
                if (a == x && b == y) return ci;
            }
            throw std::invalid_argument("dual_graph: triple point " + tp.id +
                                        " has no curve between its components");
        };
        g.add_cell(2, {curve_between(comps[1], comps[2]), curve_between(comps[0], comps[2]),
                       curve_between(comps[0], comps[1])});
    }
    if (!g.connected()) throw std::invalid_argument("dual_graph: dual complex is disconnected");
    g.validate();
    return g;
}

// Per-stratum dimension tables feeding both spectral sequences.
struct StratumTables {
    std::vector<std::array<std::size_t, 5>> component_betti;
    std::vector<std::array<std::size_t, 3>> component_coherent;
    std::vector<std::array<std::size_t, 3>> curve_betti;    // (1, 2g, 1)
    std::vector<std::array<std::size_t, 2>> curve_coherent; // (1, g)
    std::size_t triple_count = 0;                           // each point: Betti (1), coherent (1)
    bool any_b2_defaulted = false;
};

inline StratumTables stratum_tables(const Configuration& c) {
    StratumTables t;
    for (const auto& comp : c.components) {
        t.component_betti.push_back(comp.kind.betti());
        t.component_coherent.push_back(comp.kind.coherent());
        if (!is_smooth_class(comp.kind.type) && comp.kind.b2_defaulted) t.any_b2_defaulted = true;
    }
    for (const auto& curve : c.double_curves) {
        t.curve_betti.push_back({1, 2 * static_cast<std::size_t>(curve.genus), 1});
        t.curve_coherent.push_back({1, curve.genus});
    }
    t.triple_count = c.triple_points.size();
    return t;
}

enum class DegenerationType { I = 1, II = 2, III = 3 };

inline std::string to_string(DegenerationType t) {
    switch (t) {
    case DegenerationType::I: return "I";
    case DegenerationType::II: return "II";
    case DegenerationType::III: return "III";
    }
    return "?";
}

struct TypeVerdict {
    FibreClass surface_class = FibreClass::K3;
    std::optional<DegenerationType> type;
    std::string shape; // "smooth", "chain", "cycle", "triangulation"
    std::optional<SurfaceClass> gamma_class;
    std::vector<std::string> diagnostics;
    // for chains and cycles: components and curves in walk order
    std::vector<std::size_t> component_order;
    std::vector<std::size_t> curve_order;

    bool accepted() const { return type.has_value(); }
};

namespace detail {

struct GraphShape {
    bool is_path = false;
    bool is_cycle = false;
    std::vector<std::size_t> order;  // component order along the path / cycle
    std::vector<std::size_t> curves; // curves[k] joins order[k] and order[k+1 (mod n)]
};

// Path or cycle structure of a configuration without triple points.
inline GraphShape chain_or_cycle(const Configuration& c) {
    GraphShape shape;
    const std::size_t n = c.components.size();
    std::vector<std::vector<std::size_t>> adjacent(n); // by curve
    for (std::size_t ci = 0; ci < c.double_curves.size(); ++ci) {
        adjacent[c.double_curves[ci].left.component].push_back(ci);
        adjacent[c.double_curves[ci].right.component].push_back(ci);
    }
    std::vector<std::size_t> ends;
    for (std::size_t v = 0; v < n; ++v) {
        if (adjacent[v].size() == 1) ends.push_back(v);
        else if (adjacent[v].size() != 2) return shape;
    }
    std::vector<std::size_t> used_curves;
    auto walk = [&](std::size_t start) {
        std::vector<std::size_t> order{start};
        used_curves.clear();
        std::set<std::size_t> used;
        std::size_t cur = start;
        for (;;) {
            std::size_t next_curve = SIZE_MAX;
            for (auto ci : adjacent[cur])
                if (!used.count(ci)) {
                    next_curve = ci;
                    break;
                }
            if (next_curve == SIZE_MAX) break;
            used.insert(next_curve);
            used_curves.push_back(next_curve);
            cur = c.double_curves[next_curve].other_component(cur);
            if (cur == start) break;
            order.push_back(cur);
        }
        return order;
    };
    if (ends.size() == 2) {
        auto order = walk(ends[0]);
        if (order.size() == n && order.back() == ends[1] && c.double_curves.size() == n - 1 &&
            used_curves.size() == n - 1) {
            shape.is_path = true;
            shape.order = order;
            shape.curves = used_curves;
        }
    } else if (ends.empty() && n >= 2 && c.double_curves.size() == n) {
        auto order = walk(0);
        if (order.size() == n && used_curves.size() == n) {
            shape.is_cycle = true;
            shape.order = order;
            shape.curves = used_curves;
        }
    }
    return shape;
}

} // namespace detail

// Matches a validated configuration against the case list for its class.
inline TypeVerdict classify(const Configuration& c) {
    TypeVerdict verdict;
    verdict.surface_class = c.surface_class;
    auto reject = [&](std::string why) { verdict.diagnostics.push_back(std::move(why)); };

    LocalReport local = validate_local(c);
    if (!local.pass) {
        for (const auto& v : local.violations)
            reject(v.where + ": " + v.clause + ": " + v.message);
        return verdict;
    }

    const std::size_t n = c.components.size();
    auto case_of = [&](std::size_t v) { return *local.case_of(v); };
    auto type_of = [&](std::size_t v) { return c.components[v].kind.type; };

    // Type I: a single smooth component of the right class
    if (n == 1 && c.double_curves.empty()) {
        static const std::map<FibreClass, ComponentType> smooth = {
            {FibreClass::K3, ComponentType::K3},
            {FibreClass::Enriques, ComponentType::Enriques},
            {FibreClass::Abelian, ComponentType::Abelian},
            {FibreClass::Bielliptic, ComponentType::Bielliptic}};
        if (type_of(0) == smooth.at(c.surface_class)) {
            verdict.type = DegenerationType::I;
            verdict.shape = "smooth";
            verdict.diagnostics.push_back("single smooth " + to_string(type_of(0)) + " component");
            return verdict;
        }
        reject("single component is " + to_string(type_of(0)) + ", expected " +
               to_string(smooth.at(c.surface_class)) + " for class " + to_string(c.surface_class));
        return verdict;
    }
    if (n == 1) {
        reject("one component with boundary curves matches no case");
        return verdict;
    }

    if (c.triple_points.empty()) {
        auto shape = detail::chain_or_cycle(c);
        verdict.component_order = shape.order;
        verdict.curve_order = shape.curves;
        if (shape.is_path) {
            verdict.shape = "chain";
            const auto& ord = shape.order;
            bool inner_ok = true;
            for (std::size_t k = 1; k + 1 < ord.size(); ++k)
                if (case_of(ord[k]) != LocalCase::TwoDisjointRulings) inner_ok = false;
            auto end_case = [&](std::size_t k) { return case_of(ord[k]); };
            switch (c.surface_class) {
            case FibreClass::K3:
                if (inner_ok && end_case(0) == LocalCase::EllipticBoundary &&
                    end_case(ord.size() - 1) == LocalCase::EllipticBoundary) {
                    verdict.type = DegenerationType::II;
                    verdict.diagnostics.push_back(
                        "chain with rational ends and elliptic ruled interior");
                    return verdict;
                }
                reject("K3 Type II needs a chain with rational ends carrying elliptic curves");
                break;
            case FibreClass::Enriques: {
                bool front_rational = end_case(0) == LocalCase::EllipticBoundary &&
                                      end_case(ord.size() - 1) == LocalCase::SingleTwoRuling;
                bool back_rational = end_case(0) == LocalCase::SingleTwoRuling &&
                                     end_case(ord.size() - 1) == LocalCase::EllipticBoundary;
                if (inner_ok && (front_rational || back_rational)) {
                    verdict.type = DegenerationType::II;
                    verdict.diagnostics.push_back("chain with one rational end and one 2-ruling end");
                    return verdict;
                }
                reject("Enriques Type II needs a chain with a rational end and a 2-ruling end");
                break;
            }
            case FibreClass::Bielliptic:
                if (inner_ok && end_case(0) == LocalCase::SingleTwoRuling &&
                    end_case(ord.size() - 1) == LocalCase::SingleTwoRuling) {
                    verdict.type = DegenerationType::II;
                    verdict.diagnostics.push_back("chain of elliptic ruled surfaces with 2-ruling ends");
                    return verdict;
                }
                reject("bielliptic Type II chains need 2-ruling ends and ruled interior");
                break;
            case FibreClass::Abelian:
                reject("abelian Type II must be a cycle, found a chain");
                break;
            }
            return verdict;
        }
        if (shape.is_cycle) {
            verdict.shape = "cycle";
            bool all_ruled = true;
            for (std::size_t v = 0; v < n; ++v)
                if (case_of(v) != LocalCase::TwoDisjointRulings) all_ruled = false;
            if (!all_ruled) {
                reject("cycle components must all be elliptic ruled with two rulings");
                return verdict;
            }
            if (c.surface_class == FibreClass::Abelian || c.surface_class == FibreClass::Bielliptic) {
                verdict.type = DegenerationType::II;
                verdict.diagnostics.push_back("cycle of elliptic ruled surfaces");
                return verdict;
            }
            reject("a cycle of elliptic ruled surfaces is abelian or bielliptic, not " +
                   to_string(c.surface_class));
            return verdict;
        }
        reject("dual graph without triple points is neither a chain nor a cycle");
        return verdict;
    }

    // Type III: every component rational with a cycle boundary, dual
    // complex a closed surface of the class-specific type
    bool all_cycle_case = true;
    for (std::size_t v = 0; v < n; ++v)
        if (case_of(v) != LocalCase::RationalCycle) all_cycle_case = false;
    if (!all_cycle_case) {
        reject("triple points present but not all components are rational with cycle boundaries");
        return verdict;
    }
    verdict.shape = "triangulation";
    DeltaComplex gamma = dual_graph(c);
    SurfaceClass gamma_class = classify_surface(gamma);
    verdict.gamma_class = gamma_class;
    if (!gamma_class.is_closed_surface()) {
        reject("dual complex is not a closed surface: " + gamma_class.diagnostic);
        return verdict;
    }
    static const std::map<FibreClass, SurfaceClass::Tag> expected = {
        {FibreClass::K3, SurfaceClass::Tag::Sphere},
        {FibreClass::Enriques, SurfaceClass::Tag::RealProjectivePlane},
        {FibreClass::Abelian, SurfaceClass::Tag::Torus},
        {FibreClass::Bielliptic, SurfaceClass::Tag::KleinBottle}};
    if (gamma_class.tag == expected.at(c.surface_class)) {
        verdict.type = DegenerationType::III;
        verdict.diagnostics.push_back("dual complex is a " + gamma_class.str());
        return verdict;
    }
    reject("dual complex is a " + gamma_class.str() + ", class " + to_string(c.surface_class) +
           " needs a " +
           SurfaceClass{expected.at(c.surface_class), 0, ""}.str());
    for (const auto& [cls, tag] : expected)
        if (tag == gamma_class.tag)
            reject("shape would pass as (" + to_string(cls) + ", Type III)");
    return verdict;
}

} // namespace degen
