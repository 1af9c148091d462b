#pragma once

// Delta-complexes in dimensions <= 3: cells carry ordered face tuples
// into the dimension below, so multi-edges and repeated vertex sets are
// allowed (dual complexes of strictly semistable models need them).
// Face convention: an n-cell abstractly has vertices 0..n; faces[i] is
// the (n-1)-cell obtained by deleting vertex i, and the simplicial
// identity  face_i ∘ face_j = face_{j-1} ∘ face_i  (i < j) must hold.
//
// Links are computed combinatorially: the link of a vertex in a
// d-complex is a (d-1)-complex whose k-cells are corners of (k+1)-cells
// at that vertex. A closed surface is recognised by the edge-pairing and
// link-circle conditions and classified by (orientability, Euler
// characteristic); orientability is read off H_2(Z).

#include <degen/exact.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace degen {

struct DeltaComplex {
    // cells[n][c] = ordered face references of the c-th n-cell; 0-cells
    // store empty lists.
    std::array<std::vector<std::vector<std::size_t>>, 4> cells;

    std::size_t size(std::size_t dim) const { return dim < 4 ? cells[dim].size() : 0; }

    int top_dimension() const {
        for (int n = 3; n >= 0; --n)
            if (!cells[n].empty()) return n;
        return -1;
    }

    bool empty() const { return top_dimension() < 0; }

    std::size_t add_vertex() {
        cells[0].push_back({});
        return cells[0].size() - 1;
    }

    std::size_t add_cell(std::size_t dim, std::vector<std::size_t> faces) {
        if (dim == 0 || dim > 3 || faces.size() != dim + 1)
            throw std::invalid_argument("DeltaComplex: bad cell arity");
        cells[dim].push_back(std::move(faces));
        return cells[dim].size() - 1;
    }

    void validate() const {
        for (std::size_t n = 1; n < 4; ++n) {
            for (std::size_t c = 0; c < cells[n].size(); ++c) {
                const auto& f = cells[n][c];
                if (f.size() != n + 1)
                    throw std::invalid_argument("DeltaComplex: cell arity mismatch in dim " +
                                                std::to_string(n));
                for (auto ref : f)
                    if (ref >= cells[n - 1].size())
                        throw std::invalid_argument("DeltaComplex: face reference out of range");
                // simplicial identity against the dimension below
                if (n >= 2) {
                    for (std::size_t i = 0; i < f.size(); ++i)
                        for (std::size_t j = i + 1; j < f.size(); ++j) {
                            // face_i of face_j vs face_{j-1} of face_i
                            if (cells[n - 1][f[j]][i] != cells[n - 1][f[i]][j - 1])
                                throw std::invalid_argument(
                                    "DeltaComplex: simplicial identity fails on cell " +
                                    std::to_string(c) + " in dim " + std::to_string(n));
                        }
                }
            }
        }
    }

    // Vertex of an n-cell sitting at the given slot (0..n).
    std::size_t vertex_at(std::size_t dim, std::size_t cell, std::size_t slot) const {
        if (dim == 0) return cell;
        std::size_t j = slot == 0 ? 1 : 0;
        return vertex_at(dim - 1, cells[dim][cell][j], slot > j ? slot - 1 : slot);
    }

    // Subcell spanned by the given ascending vertex slots.
    std::size_t subcell(std::size_t dim, std::size_t cell, std::vector<std::size_t> keep) const {
        std::size_t cur_dim = dim, cur = cell;
        while (keep.size() < cur_dim + 1) {
            // delete the largest slot not kept
            std::size_t del = cur_dim + 1;
            for (std::size_t s = cur_dim + 1; s-- > 0;) {
                if (std::find(keep.begin(), keep.end(), s) == keep.end()) {
                    del = s;
                    break;
                }
            }
            cur = cells[cur_dim][cur][del];
            --cur_dim;
            for (auto& s : keep)
                if (s > del) --s;
        }
        return cur;
    }

    ZMatrix boundary_matrix(std::size_t dim) const {
        if (dim == 0 || dim > 3) return ZMatrix(0, size(0));
        ZMatrix d(size(dim - 1), size(dim));
        for (std::size_t c = 0; c < cells[dim].size(); ++c) {
            const auto& f = cells[dim][c];
            for (std::size_t i = 0; i < f.size(); ++i) d(f[i], c) += (i % 2 == 0) ? 1 : -1;
        }
        return d;
    }

    ZChainComplex chain_complex() const {
        int top = top_dimension();
        ZChainComplex c;
        c.lowest = 0;
        if (top < 0) {
            c.dims = {0};
            c.differentials = {ZMatrix(0, 0)};
            return c;
        }
        for (int n = 0; n <= top; ++n) {
            c.dims.push_back(size(n));
            c.differentials.push_back(n == 0 ? ZMatrix(0, size(0)) : boundary_matrix(n));
        }
        return c;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (int n = 0; n < 4; ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(size(n));
        return chi;
    }

    bool connected() const {
        std::size_t nv = size(0);
        if (nv == 0) return false;
        std::vector<std::size_t> parent(nv);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& e : cells[1]) parent[find(e[0])] = find(e[1]);
        std::size_t root = find(0);
        for (std::size_t v = 1; v < nv; ++v)
            if (find(v) != root) return false;
        return true;
    }

    std::vector<std::size_t> homology(unsigned field_char) const {
        auto h = homology_dims(chain_complex(), field_char);
        std::vector<std::size_t> out;
        for (const auto& [deg, dim] : h) out.push_back(dim);
        return out;
    }

    std::map<int, IntegerHomology> homology_z() const { return integer_homology(chain_complex()); }

    // Link of a vertex: k-cells are corners of (k+1)-cells at v, faces
    // induced by deleting the other slots in ascending order.
    DeltaComplex vertex_link(std::size_t v) const;
};

inline DeltaComplex DeltaComplex::vertex_link(std::size_t v) const {
    DeltaComplex link;
    // link vertices: (edge, vertex-slot) pairs at v
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> node;
    for (std::size_t e = 0; e < cells[1].size(); ++e)
        for (std::size_t s = 0; s < 2; ++s)
            if (vertex_at(1, e, s) == v) {
                node[{e, s}] = link.add_vertex();
            }
    // link edges: triangle corners at v
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> corner_edge;
    for (std::size_t t = 0; t < cells[2].size(); ++t)
        for (std::size_t i = 0; i < 3; ++i) {
            if (vertex_at(2, t, i) != v) continue;
            std::vector<std::size_t> others;
            for (std::size_t j = 0; j < 3; ++j)
                if (j != i) others.push_back(j);
            // endpoint towards slot others[k] lies on the edge omitting the
            // other one of the two remaining slots
            std::vector<std::size_t> ends(2);
            for (std::size_t k = 0; k < 2; ++k) {
                std::size_t third = others[1 - k];
                std::size_t edge_cell = cells[2][t][third];
                std::size_t slot = i > third ? i - 1 : i;
                ends[k] = node.at({edge_cell, slot});
            }
            // faces[0] deletes endpoint 0
            corner_edge[{t, i}] = link.add_cell(1, {ends[1], ends[0]});
        }
    // link triangles: tetrahedron corners at v
    for (std::size_t s = 0; s < cells[3].size(); ++s)
        for (std::size_t i = 0; i < 4; ++i) {
            if (vertex_at(3, s, i) != v) continue;
            std::vector<std::size_t> others;
            for (std::size_t j = 0; j < 4; ++j)
                if (j != i) others.push_back(j);
            std::vector<std::size_t> faces(3);
            for (std::size_t m = 0; m < 3; ++m) {
                std::size_t jm = others[m];
                std::size_t tri_cell = cells[3][s][jm];
                std::size_t slot = i > jm ? i - 1 : i;
                faces[m] = corner_edge.at({tri_cell, slot});
            }
            link.add_cell(2, std::move(faces));
        }
    return link;
}

struct SurfaceClass {
    enum class Tag {
        Sphere,
        RealProjectivePlane,
        Torus,
        KleinBottle,
        OrientableGenus,
        NonorientableGenus,
        NotAClosedSurface
    };
    Tag tag = Tag::NotAClosedSurface;
    std::size_t genus = 0;
    std::string diagnostic;

    bool is_closed_surface() const { return tag != Tag::NotAClosedSurface; }

    std::string str() const {
        switch (tag) {
        case Tag::Sphere: return "Sphere";
        case Tag::RealProjectivePlane: return "RealProjectivePlane";
        case Tag::Torus: return "Torus";
        case Tag::KleinBottle: return "KleinBottle";
        case Tag::OrientableGenus: return "OrientableGenus(" + std::to_string(genus) + ")";
        case Tag::NonorientableGenus: return "NonorientableGenus(" + std::to_string(genus) + ")";
        case Tag::NotAClosedSurface: return "NotAClosedSurface(" + diagnostic + ")";
        }
        return "?";
    }

    friend bool operator==(const SurfaceClass& a, const SurfaceClass& b) {
        return a.tag == b.tag && a.genus == b.genus;
    }
};

namespace detail {

// A graph given by node count and edges is a single circle: nonempty,
// connected, every node of degree exactly 2.
inline bool is_single_circle(std::size_t nodes,
                             const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                             std::string* why = nullptr) {
    if (nodes == 0) {
        if (why) *why = "empty link";
        return false;
    }
    std::vector<std::size_t> degree(nodes, 0);
    std::vector<std::size_t> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : edges) {
        ++degree[a];
        ++degree[b];
        parent[find(a)] = find(b);
    }
    for (std::size_t n = 0; n < nodes; ++n)
        if (degree[n] != 2) {
            if (why) *why = "link node of degree " + std::to_string(degree[n]);
            return false;
        }
    std::size_t root = find(0);
    for (std::size_t n = 1; n < nodes; ++n)
        if (find(n) != root) {
            if (why) *why = "link is disconnected";
            return false;
        }
    return true;
}

} // namespace detail

// Closed-surface recognition and classification. Checks the two-coface
// condition on edges and the circle condition on vertex links, then
// classifies by orientability (H_2(Z) = Z) and Euler characteristic.
inline SurfaceClass classify_surface(const DeltaComplex& g) {
    auto fail = [](std::string why) {
        SurfaceClass s;
        s.tag = SurfaceClass::Tag::NotAClosedSurface;
        s.diagnostic = std::move(why);
        return s;
    };
    if (g.size(3) > 0) return fail("has 3-cells");
    if (g.size(2) == 0) return fail("no 2-cells");
    if (!g.connected()) return fail("not connected");

    std::vector<std::size_t> cofaces(g.size(1), 0);
    for (const auto& t : g.cells[2])
        for (auto e : t) ++cofaces[e];
    for (std::size_t e = 0; e < cofaces.size(); ++e)
        if (cofaces[e] != 2)
            return fail("edge " + std::to_string(e) + " lies in " + std::to_string(cofaces[e]) +
                        " triangles");

    for (std::size_t v = 0; v < g.size(0); ++v) {
        DeltaComplex link = g.vertex_link(v);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& e : link.cells[1]) edges.push_back({e[0], e[1]});
        std::string why;
        if (!detail::is_single_circle(link.size(0), edges, &why))
            return fail("vertex " + std::to_string(v) + ": " + why);
    }

    auto hz = g.homology_z();
    bool orientable = hz.at(2).free_rank == 1;
    long long chi = g.euler_characteristic();
    SurfaceClass s;
    if (orientable) {
        // chi = 2 - 2g
        std::size_t genus = static_cast<std::size_t>((2 - chi) / 2);
        s.tag = genus == 0   ? SurfaceClass::Tag::Sphere
                : genus == 1 ? SurfaceClass::Tag::Torus
                             : SurfaceClass::Tag::OrientableGenus;
        s.genus = genus >= 2 ? genus : 0;
    } else {
        // chi = 2 - k
        std::size_t k = static_cast<std::size_t>(2 - chi);
        s.tag = k == 1   ? SurfaceClass::Tag::RealProjectivePlane
                : k == 2 ? SurfaceClass::Tag::KleinBottle
                         : SurfaceClass::Tag::NonorientableGenus;
        s.genus = k >= 3 ? k : 0;
    }
    return s;
}

struct ManifoldVerdict {
    bool pass = false;
    std::string failure;
};

// Closed 3-manifold conditions: every triangle in exactly two
// tetrahedron incidences, every edge link a circle, every vertex link a
// 2-sphere.
inline ManifoldVerdict check_closed_3_manifold(const DeltaComplex& g) {
    auto fail = [](std::string why) { return ManifoldVerdict{false, std::move(why)}; };
    if (g.size(3) == 0) return fail("no 3-cells");
    if (!g.connected()) return fail("not connected");

    std::vector<std::size_t> cofaces(g.size(2), 0);
    for (const auto& s : g.cells[3])
        for (auto t : s) ++cofaces[t];
    for (std::size_t t = 0; t < cofaces.size(); ++t)
        if (cofaces[t] != 2)
            return fail("triangle " + std::to_string(t) + " lies in " + std::to_string(cofaces[t]) +
                        " tetrahedra");

    // edge links: nodes are triangle-side incidences on the edge, one
    // link edge per tetrahedron pair-slot mapping to it
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> tri_side;
    std::vector<std::size_t> node_count(g.size(1), 0);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> link_edges(g.size(1));
    for (std::size_t t = 0; t < g.cells[2].size(); ++t)
        for (std::size_t m = 0; m < 3; ++m) {
            std::size_t e = g.cells[2][t][m];
            tri_side[{t, m}] = node_count[e]++;
        }
    for (std::size_t s = 0; s < g.cells[3].size(); ++s)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                std::size_t e = g.subcell(3, s, {i, j});
                std::array<std::size_t, 2> ks{};
                std::size_t n = 0;
                for (std::size_t k = 0; k < 4; ++k)
                    if (k != i && k != j) ks[n++] = k;
                std::array<std::size_t, 2> nodes{};
                for (std::size_t a = 0; a < 2; ++a) {
                    std::size_t k = ks[a], l = ks[1 - a];
                    std::size_t tri = g.cells[3][s][k];
                    std::size_t slot = l > k ? l - 1 : l;
                    nodes[a] = tri_side.at({tri, slot});
                }
                link_edges[e].push_back({nodes[0], nodes[1]});
            }
    for (std::size_t e = 0; e < g.size(1); ++e) {
        std::string why;
        if (!detail::is_single_circle(node_count[e], link_edges[e], &why))
            return fail("edge " + std::to_string(e) + ": " + why);
    }

    for (std::size_t v = 0; v < g.size(0); ++v) {
        SurfaceClass link_class = classify_surface(g.vertex_link(v));
        if (!(link_class == SurfaceClass{SurfaceClass::Tag::Sphere, 0, ""}))
            return fail("vertex " + std::to_string(v) + ": link is " + link_class.str());
    }
    return ManifoldVerdict{true, ""};
}

// Homology-sphere certificate: integral homology (Z, 0, 0, Z). The
// certificate is explicitly about homology; simple-connectedness is
// never claimed.
struct HomologySphereReport {
    bool is_homology_sphere = false;
    std::array<std::size_t, 4> betti{};
    std::vector<Int> h1_invariant_factors;
    std::string caveat = "homology certificate only; pi_1 is not computed";
};

// True when every cell has distinct vertices and no two cells of the
// same dimension span the same vertex set; general Delta-complexes
// (multi-edges, repeated vertex sets) return false.
inline bool is_simplicial(const DeltaComplex& g) {
    for (std::size_t n = 1; n < 4; ++n) {
        std::vector<std::vector<std::size_t>> seen;
        for (std::size_t c = 0; c < g.size(n); ++c) {
            std::vector<std::size_t> vertices;
            for (std::size_t s = 0; s <= n; ++s) vertices.push_back(g.vertex_at(n, c, s));
            std::sort(vertices.begin(), vertices.end());
            if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
                return false;
            seen.push_back(vertices);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

inline HomologySphereReport is_homology_3_sphere(const DeltaComplex& g) {
    auto manifold = check_closed_3_manifold(g);
    if (!manifold.pass)
        throw std::invalid_argument("is_homology_3_sphere: not a closed 3-manifold (" +
                                    manifold.failure + ")");
    auto hz = g.homology_z();
    HomologySphereReport rep;
    for (int n = 0; n < 4; ++n) rep.betti[n] = hz.count(n) ? hz.at(n).free_rank : 0;
    for (const auto& f : hz.at(1).torsion) rep.h1_invariant_factors.push_back(f);
    bool torsion_free = true;
    for (const auto& [deg, data] : hz)
        if (!data.torsion.empty()) torsion_free = false;
    rep.is_homology_sphere = torsion_free && rep.betti[0] == 1 && rep.betti[1] == 0 &&
                             rep.betti[2] == 0 && rep.betti[3] == 1;
    return rep;
}

} // namespace degen
