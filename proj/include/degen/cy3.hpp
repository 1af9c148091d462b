#pragma once

// Threefold configurations and the Type IV verification: components with
// declared Mori-fibre / unirational-base flags, double surfaces and
// triple curves with declared rationality, quadruple points, and the
// dual complex in dimension 3. Geometric properties with no
// combinatorial shadow are boolean inputs; the checks cover their
// logical interaction, the manifold conditions on the dual complex, the
// homology-sphere certificate (never simple-connectedness), maximal
// intersection, and the identification of E_2^{3,0} with H^3 of the
// dual complex.

#include <degen/config.hpp>
#include <degen/delta.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace degen {

struct Component3 {
    std::string id;
    bool mori_fibre_birational = true;
    bool base_unirational = true;

    bool operator==(const Component3&) const = default;
};

struct DoubleSurface {
    std::string id;
    std::array<std::size_t, 2> components{};
    bool rational = true;

    bool operator==(const DoubleSurface&) const = default;
};

struct TripleCurve {
    std::string id;
    std::array<std::size_t, 3> components{};
    std::array<std::size_t, 3> surfaces{};
    bool rational = true;

    bool operator==(const TripleCurve&) const = default;
};

struct QuadruplePoint {
    std::string id;
    std::array<std::size_t, 4> components{};
    std::array<std::size_t, 4> curves{};

    bool operator==(const QuadruplePoint&) const = default;
};

struct Configuration3 {
    bool wmc_assumed = false;
    std::vector<Component3> components;
    std::vector<DoubleSurface> double_surfaces;
    std::vector<TripleCurve> triple_curves;
    std::vector<QuadruplePoint> quadruple_points;

    bool operator==(const Configuration3&) const = default;

    std::vector<std::size_t> surfaces_at(std::size_t comp) const {
        std::vector<std::size_t> out;
        for (std::size_t s = 0; s < double_surfaces.size(); ++s) {
            const auto& cs = double_surfaces[s].components;
            if (cs[0] == comp || cs[1] == comp) out.push_back(s);
        }
        return out;
    }
    std::vector<std::size_t> curves_at(std::size_t comp) const {
        std::vector<std::size_t> out;
        for (std::size_t t = 0; t < triple_curves.size(); ++t) {
            const auto& cs = triple_curves[t].components;
            if (std::find(cs.begin(), cs.end(), comp) != cs.end()) out.push_back(t);
        }
        return out;
    }
    std::vector<std::size_t> quads_at(std::size_t comp) const {
        std::vector<std::size_t> out;
        for (std::size_t q = 0; q < quadruple_points.size(); ++q) {
            const auto& cs = quadruple_points[q].components;
            if (std::find(cs.begin(), cs.end(), comp) != cs.end()) out.push_back(q);
        }
        return out;
    }
};

inline std::vector<Violation> validate_structure(const Configuration3& c) {
    std::vector<Violation> v;
    auto bad = [&](std::string where, std::string clause, std::string msg) {
        v.push_back({std::move(where), std::move(clause), std::move(msg)});
    };
    const std::size_t nc = c.components.size();
    if (nc == 0) bad("configuration", "nonempty", "no components");

    std::set<std::string> ids;
    for (const auto& x : c.components)
        if (!ids.insert(x.id).second) bad(x.id, "unique-id", "duplicate id");
    for (const auto& x : c.double_surfaces)
        if (!ids.insert(x.id).second) bad(x.id, "unique-id", "duplicate id");
    for (const auto& x : c.triple_curves)
        if (!ids.insert(x.id).second) bad(x.id, "unique-id", "duplicate id");
    for (const auto& x : c.quadruple_points)
        if (!ids.insert(x.id).second) bad(x.id, "unique-id", "duplicate id");

    for (const auto& s : c.double_surfaces) {
        if (s.components[0] >= nc || s.components[1] >= nc) {
            bad(s.id, "reference", "surface references a missing component");
            continue;
        }
        if (s.components[0] == s.components[1])
            bad(s.id, "distinct-sides", "a smooth component cannot meet itself");
    }
    for (const auto& t : c.triple_curves) {
        bool refs = true;
        for (auto x : t.components)
            if (x >= nc) refs = false;
        for (auto x : t.surfaces)
            if (x >= c.double_surfaces.size()) refs = false;
        if (!refs) {
            bad(t.id, "reference", "triple curve references missing cells");
            continue;
        }
        std::set<std::size_t> comps(t.components.begin(), t.components.end());
        if (comps.size() != 3) {
            bad(t.id, "distinct", "triple curve needs three distinct components");
            continue;
        }
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        for (auto si : t.surfaces) {
            const auto& sc = c.double_surfaces[si].components;
            if (!comps.count(sc[0]) || !comps.count(sc[1])) {
                bad(t.id, "incidence", "triple curve surface lies outside its components");
                break;
            }
            pairs.insert({std::min(sc[0], sc[1]), std::max(sc[0], sc[1])});
        }
        if (pairs.size() != 3) bad(t.id, "incidence", "surfaces do not pair up the components");
    }
    for (const auto& q : c.quadruple_points) {
        bool refs = true;
        for (auto x : q.components)
            if (x >= nc) refs = false;
        for (auto x : q.curves)
            if (x >= c.triple_curves.size()) refs = false;
        if (!refs) {
            bad(q.id, "reference", "quadruple point references missing cells");
            continue;
        }
        std::set<std::size_t> comps(q.components.begin(), q.components.end());
        if (comps.size() != 4) {
            bad(q.id, "distinct", "quadruple point needs four distinct components");
            continue;
        }
        std::set<std::set<std::size_t>> triples;
        for (auto ti : q.curves) {
            const auto& tc = c.triple_curves[ti].components;
            std::set<std::size_t> key(tc.begin(), tc.end());
            bool inside = true;
            for (auto x : key)
                if (!comps.count(x)) inside = false;
            if (!inside) {
                bad(q.id, "incidence", "quadruple point curve lies outside its components");
                break;
            }
            triples.insert(key);
        }
        if (triples.size() != 4) bad(q.id, "incidence", "curves do not triple up the components");
    }
    return v;
}

// Dual complex: vertices = components, edges = double surfaces, triangles
// = triple curves, tetrahedra = quadruple points; ascending component
// order within each cell.
inline DeltaComplex dual_complex(const Configuration3& c) {
    auto structural = validate_structure(c);
    if (!structural.empty())
        throw std::invalid_argument("dual_complex: " + structural.front().message);
    DeltaComplex g;
    for (std::size_t v = 0; v < c.components.size(); ++v) g.add_vertex();
    for (const auto& s : c.double_surfaces) {
        std::size_t a = std::min(s.components[0], s.components[1]);
        std::size_t b = std::max(s.components[0], s.components[1]);
        g.add_cell(1, {b, a});
    }
    auto surface_between = [&](const std::array<std::size_t, 3>& pool, std::size_t x,
                               std::size_t y, const std::string& id) {
        for (auto si : pool) {
            const auto& sc = c.double_surfaces[si].components;
            if (std::min(sc[0], sc[1]) == x && std::max(sc[0], sc[1]) == y) return si;
        }
        throw std::invalid_argument("dual_complex: no surface between components in " + id);
    };
    for (const auto& t : c.triple_curves) {
        std::array<std::size_t, 3> comps = t.components;
        std::sort(comps.begin(), comps.end());
        g.add_cell(2, {surface_between(t.surfaces, comps[1], comps[2], t.id),
                       surface_between(t.surfaces, comps[0], comps[2], t.id),
                       surface_between(t.surfaces, comps[0], comps[1], t.id)});
    }
    auto curve_of = [&](const std::array<std::size_t, 4>& pool, std::set<std::size_t> key,
                        const std::string& id) {
        for (auto ti : pool) {
            const auto& tc = c.triple_curves[ti].components;
            if (std::set<std::size_t>(tc.begin(), tc.end()) == key) return ti;
        }
        throw std::invalid_argument("dual_complex: no curve between components in " + id);
    };
    for (const auto& q : c.quadruple_points) {
        std::array<std::size_t, 4> comps = q.components;
        std::sort(comps.begin(), comps.end());
        std::vector<std::size_t> faces;
        for (std::size_t omit = 0; omit < 4; ++omit) {
            std::set<std::size_t> key;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != omit) key.insert(comps[i]);
            faces.push_back(curve_of(q.curves, key, q.id));
        }
        g.add_cell(3, std::move(faces));
    }
    g.validate();
    return g;
}

struct MaximalIntersectionVerdict {
    bool has_quadruple_point = false;
    bool every_component = false; // extended check
    std::vector<std::size_t> components_without;
};

inline MaximalIntersectionVerdict check_maximal_intersection(const Configuration3& c) {
    MaximalIntersectionVerdict v;
    v.has_quadruple_point = !c.quadruple_points.empty();
    for (std::size_t i = 0; i < c.components.size(); ++i)
        if (c.quads_at(i).empty()) v.components_without.push_back(i);
    v.every_component = v.has_quadruple_point && v.components_without.empty();
    return v;
}

struct BoundaryConnectednessVerdict {
    std::size_t component = 0;
    std::size_t pieces = 0;
    bool all_pieces_irreducible = false;
    bool pass = false;
};

// The boundary divisor of each component is connected, or consists of
// exactly two pieces each a single irreducible surface.
inline std::vector<BoundaryConnectednessVerdict>
check_anticanonical_connectedness(const Configuration3& c) {
    std::vector<BoundaryConnectednessVerdict> out;
    for (std::size_t i = 0; i < c.components.size(); ++i) {
        BoundaryConnectednessVerdict v;
        v.component = i;
        auto surfaces = c.surfaces_at(i);
        std::map<std::size_t, std::size_t> index;
        for (std::size_t k = 0; k < surfaces.size(); ++k) index[surfaces[k]] = k;
        std::vector<std::size_t> parent(surfaces.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto ti : c.curves_at(i)) {
            std::vector<std::size_t> here;
            for (auto si : c.triple_curves[ti].surfaces)
                if (index.count(si)) here.push_back(index.at(si));
            for (std::size_t k = 1; k < here.size(); ++k) parent[find(here[0])] = find(here[k]);
        }
        std::map<std::size_t, std::size_t> piece_size;
        for (std::size_t k = 0; k < surfaces.size(); ++k) ++piece_size[find(k)];
        v.pieces = piece_size.size();
        v.all_pieces_irreducible = true;
        for (const auto& [root, size] : piece_size)
            if (size != 1) v.all_pieces_irreducible = false;
        v.pass = v.pieces == 1 || (v.pieces == 2 && v.all_pieces_irreducible);
        out.push_back(v);
    }
    return out;
}

struct Cy3Verdict {
    bool accepted = false;
    std::vector<std::string> diagnostics;
    ManifoldVerdict manifold;
    std::optional<HomologySphereReport> sphere;
    MaximalIntersectionVerdict maximal;
    bool simplicial_input = false; // recorded: simplicial vs general Delta-complex
    std::string caveat = "3-sphere recognised at the homology + closed-manifold level only; "
                         "simple-connectedness is not checked";
};

inline Cy3Verdict classify_cy4(const Configuration3& c) {
    Cy3Verdict verdict;
    auto reject = [&](std::string why) { verdict.diagnostics.push_back(std::move(why)); };

    auto structural = validate_structure(c);
    if (!structural.empty()) {
        for (const auto& s : structural) reject(s.where + ": " + s.message);
        return verdict;
    }
    for (const auto& comp : c.components) {
        if (!comp.mori_fibre_birational)
            reject(comp.id + ": not declared birational to a Mori fibre space");
        if (!comp.base_unirational) reject(comp.id + ": base not declared unirational");
    }
    for (const auto& s : c.double_surfaces)
        if (!s.rational) reject(s.id + ": double surface not declared rational");
    for (const auto& t : c.triple_curves)
        if (!t.rational) reject(t.id + ": triple curve not declared rational");

    verdict.maximal = check_maximal_intersection(c);
    if (!verdict.maximal.has_quadruple_point) reject("no quadruple point (maximal intersection fails)");
    else if (!verdict.maximal.every_component)
        reject("a component contains no quadruple point");

    DeltaComplex gamma = dual_complex(c);
    verdict.simplicial_input = is_simplicial(gamma);
    verdict.manifold = check_closed_3_manifold(gamma);
    if (!verdict.manifold.pass) {
        reject("dual complex is not a closed 3-manifold: " + verdict.manifold.failure);
        return verdict;
    }
    verdict.sphere = is_homology_3_sphere(gamma);
    if (!verdict.sphere->is_homology_sphere) {
        std::string h1 = "H1 invariant factors:";
        if (verdict.sphere->h1_invariant_factors.empty())
            h1 += " none, rank " + std::to_string(verdict.sphere->betti[1]);
        else
            for (const auto& f : verdict.sphere->h1_invariant_factors) h1 += " " + f.str();
        reject("dual complex is not a homology 3-sphere (" + h1 + ")");
    }
    verdict.accepted = verdict.diagnostics.empty();
    return verdict;
}

struct E230Report {
    std::size_t dim = 0; // dim H^3(Gamma; Q) = dim E_2^{3,0}
    bool wmc_assumed = false;
    bool n3_nonzero = false; // meaningful only under the assumption
};

// dim E_2^{3,0} via the identification with H^3 of the dual complex;
// together with the weight-monodromy assumption a nonzero value certifies
// N^3 != 0.
inline E230Report e2_30(const Configuration3& c) {
    DeltaComplex gamma = dual_complex(c);
    auto manifold = check_closed_3_manifold(gamma);
    if (!manifold.pass)
        throw std::invalid_argument("e2_30: dual complex is not a closed 3-manifold (" +
                                    manifold.failure + ")");
    auto betti = gamma.homology(0);
    E230Report rep;
    rep.dim = betti.size() > 3 ? betti[3] : 0;
    rep.wmc_assumed = c.wmc_assumed;
    rep.n3_nonzero = rep.wmc_assumed && rep.dim > 0;
    return rep;
}

// The link of each vertex of the dual complex equals the dual complex of
// that component's boundary divisor, under the canonical bijections
// (surface incidences at the component in index order, then triple
// curves, then quadruple points).
inline bool vertex_link_matches_divisor_dual(const Configuration3& c, std::size_t comp,
                                             const DeltaComplex& gamma) {
    DeltaComplex link = gamma.vertex_link(comp);

    DeltaComplex divisor;
    auto surfaces = c.surfaces_at(comp);
    std::map<std::size_t, std::size_t> vertex_of_surface;
    for (auto si : surfaces) {
        vertex_of_surface[si] = divisor.add_vertex();
    }
    auto curves = c.curves_at(comp);
    std::map<std::size_t, std::size_t> edge_of_curve;
    for (auto ti : curves) {
        const auto& tc = c.triple_curves[ti];
        std::vector<std::size_t> others;
        for (auto x : tc.components)
            if (x != comp) others.push_back(x);
        std::sort(others.begin(), others.end());
        auto surface_with = [&](std::size_t other) -> std::size_t {
            for (auto si : tc.surfaces) {
                const auto& sc = c.double_surfaces[si].components;
                if ((sc[0] == comp && sc[1] == other) || (sc[1] == comp && sc[0] == other))
                    return si;
            }
            throw std::invalid_argument("vertex_link_matches_divisor_dual: missing surface");
        };
        std::size_t lo = vertex_of_surface.at(surface_with(others[0]));
        std::size_t hi = vertex_of_surface.at(surface_with(others[1]));
        edge_of_curve[ti] = divisor.add_cell(1, {hi, lo});
    }
    for (auto qi : c.quads_at(comp)) {
        const auto& q = c.quadruple_points[qi];
        std::vector<std::size_t> others;
        for (auto x : q.components)
            if (x != comp) others.push_back(x);
        std::sort(others.begin(), others.end());
        auto curve_with = [&](std::size_t skip) -> std::size_t {
            std::set<std::size_t> key{comp};
            for (auto x : others)
                if (x != skip) key.insert(x);
            for (auto ti : q.curves) {
                const auto& tc = c.triple_curves[ti].components;
                if (std::set<std::size_t>(tc.begin(), tc.end()) == key) return ti;
            }
            throw std::invalid_argument("vertex_link_matches_divisor_dual: missing curve");
        };
        divisor.add_cell(2, {edge_of_curve.at(curve_with(others[0])),
                             edge_of_curve.at(curve_with(others[1])),
                             edge_of_curve.at(curve_with(others[2]))});
    }

    return link.cells == divisor.cells;
}

} // namespace degen
