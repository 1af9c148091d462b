#pragma once

// Constructions of the Delta-complexes used throughout: simplex
// boundaries, simplicial surfaces/3-complexes from vertex tuples, torus
// grids, the small standard surfaces, connected sums, and the
// orientation double cover of a closed surface complex.

#include <degen/delta.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace degen {

// Simplicial complex from its maximal simplices, each given as a strictly
// ascending vertex tuple. Lower cells are generated as needed; the face in
// slot i is the subsimplex omitting the i-th vertex.
class SimplicialBuilder {
public:
    explicit SimplicialBuilder(std::size_t vertex_count) {
        for (std::size_t v = 0; v < vertex_count; ++v) complex_.add_vertex();
        for (std::size_t v = 0; v < vertex_count; ++v) index_[{v}] = v;
    }

    std::size_t add_simplex(std::vector<std::size_t> vertices) {
        if (vertices.size() < 2 || vertices.size() > 4)
            throw std::invalid_argument("SimplicialBuilder: dimension out of range");
        if (!std::is_sorted(vertices.begin(), vertices.end()) ||
            std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
            throw std::invalid_argument("SimplicialBuilder: vertices must be strictly ascending");
        auto it = index_.find(vertices);
        if (it != index_.end()) return it->second;
        std::vector<std::size_t> faces;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            std::vector<std::size_t> sub = vertices;
            sub.erase(sub.begin() + static_cast<long>(i));
            faces.push_back(sub.size() == 1 ? sub[0] : add_simplex(sub));
        }
        std::size_t cell = complex_.add_cell(vertices.size() - 1, std::move(faces));
        index_[vertices] = cell;
        return cell;
    }

    std::size_t cell(const std::vector<std::size_t>& vertices) const { return index_.at(vertices); }
    const DeltaComplex& complex() const { return complex_; }
    DeltaComplex take() { return std::move(complex_); }

private:
    DeltaComplex complex_;
    std::map<std::vector<std::size_t>, std::size_t> index_;
};

inline DeltaComplex from_triangles(std::size_t vertex_count,
                                   const std::vector<std::array<std::size_t, 3>>& triangles) {
    SimplicialBuilder b(vertex_count);
    for (const auto& t : triangles) b.add_simplex({t[0], t[1], t[2]});
    return b.take();
}

inline DeltaComplex from_tetrahedra(std::size_t vertex_count,
                                    const std::vector<std::array<std::size_t, 4>>& tets) {
    SimplicialBuilder b(vertex_count);
    for (const auto& t : tets) b.add_simplex({t[0], t[1], t[2], t[3]});
    return b.take();
}

// Boundary of the n-simplex (n = 3 or 4): all proper subsets of {0..n}.
inline DeltaComplex simplex_boundary(std::size_t n) {
    if (n < 2 || n > 4) throw std::invalid_argument("simplex_boundary: n must be 2..4");
    SimplicialBuilder b(n + 1);
    std::vector<std::size_t> all(n + 1);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t omit = 0; omit <= n; ++omit) {
        std::vector<std::size_t> facet;
        for (std::size_t v = 0; v <= n; ++v)
            if (v != omit) facet.push_back(v);
        if (facet.size() >= 2) b.add_simplex(facet);
    }
    return b.take();
}

// n-torus as a Delta-complex on a k-fold grid: cells are strict chains
// p < p + d_1 < ... < p + d_r with p in (Z_k)^n and 0 < d_1 < ... <= 1
// componentwise; the face map deletes a chain point and renormalises the
// base point. k = 1 gives the one-vertex torus, k = 2 a loop-free one.
inline DeltaComplex torus_grid(std::size_t n, std::size_t k) {
    if (n < 1 || n > 3 || k < 1) throw std::invalid_argument("torus_grid: bad parameters");
    std::size_t positions = 1;
    for (std::size_t i = 0; i < n; ++i) positions *= k;

    auto pos_coords = [&](std::size_t p) {
        std::vector<std::size_t> c(n);
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = p % k;
            p /= k;
        }
        return c;
    };
    auto coords_pos = [&](const std::vector<std::size_t>& c) {
        std::size_t p = 0;
        for (std::size_t i = n; i-- > 0;) p = p * k + (c[i] % k);
        return p;
    };

    // offsets 1..2^n-1 as bit masks, chains are strictly increasing masks
    // with componentwise order
    auto leq = [](std::size_t a, std::size_t b) { return (a & b) == a; };

    DeltaComplex g;
    for (std::size_t p = 0; p < positions; ++p) g.add_vertex();

    // enumerate cells per dimension; key = (position, chain of masks)
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
    std::size_t full = (static_cast<std::size_t>(1) << n) - 1;

    std::vector<std::vector<std::vector<std::size_t>>> chains(n + 1);
    chains[0].push_back({});
    for (std::size_t r = 1; r <= n; ++r) {
        for (const auto& c : chains[r - 1]) {
            std::size_t last = c.empty() ? 0 : c.back();
            for (std::size_t d = 1; d <= full; ++d) {
                if (d == last || !leq(last, d)) continue;
                auto ext = c;
                ext.push_back(d);
                chains[r].push_back(ext);
            }
        }
    }

    auto mask_shift = [&](std::size_t p, std::size_t mask) {
        auto c = pos_coords(p);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (static_cast<std::size_t>(1) << i)) c[i] = (c[i] + 1) % k;
        return coords_pos(c);
    };

    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t p = 0; p < positions; ++p) {
            for (const auto& chain : chains[r]) {
                std::vector<std::size_t> faces;
                for (std::size_t del = 0; del <= r; ++del) {
                    std::size_t base = p;
                    std::vector<std::size_t> sub;
                    if (del == 0) {
                        base = mask_shift(p, chain[0]);
                        for (std::size_t m = 1; m < chain.size(); ++m)
                            sub.push_back(chain[m] & ~chain[0]);
                    } else {
                        for (std::size_t m = 0; m < chain.size(); ++m)
                            if (m != del - 1) sub.push_back(chain[m]);
                    }
                    if (sub.empty())
                        faces.push_back(base);
                    else
                        faces.push_back(index.at({base, sub}));
                }
                index[{p, chain}] = g.add_cell(r, std::move(faces));
            }
        }
    }
    return g;
}

// Csaszar 7-vertex triangulation of the torus: faces {i, i+1, i+3} and
// {i, i+2, i+3} mod 7.
inline DeltaComplex csaszar_torus() {
    std::vector<std::array<std::size_t, 3>> faces;
    for (std::size_t i = 0; i < 7; ++i) {
        std::array<std::size_t, 3> a{i, (i + 1) % 7, (i + 3) % 7};
        std::array<std::size_t, 3> b{i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        faces.push_back(a);
        faces.push_back(b);
    }
    return from_triangles(7, faces);
}

// 6-vertex projective plane (antipodal quotient of the icosahedron).
inline DeltaComplex projective_plane_6() {
    return from_triangles(6, {{0, 1, 2},
                              {0, 2, 3},
                              {0, 3, 4},
                              {0, 4, 5},
                              {0, 1, 5},
                              {1, 2, 4},
                              {2, 3, 5},
                              {1, 3, 4},
                              {2, 4, 5},
                              {1, 3, 5}});
}

// One-vertex Klein bottle: edges a, b, c and two triangles glued so the
// two-cell boundaries are a + b - c and -a + b + c.
inline DeltaComplex klein_bottle_1vertex() {
    DeltaComplex g;
    std::size_t v = g.add_vertex();
    std::size_t a = g.add_cell(1, {v, v});
    std::size_t b = g.add_cell(1, {v, v});
    std::size_t c = g.add_cell(1, {v, v});
    g.add_cell(2, {b, c, a});
    g.add_cell(2, {c, a, b});
    return g;
}

// One-vertex torus for comparison (Hatcher's standard structure).
inline DeltaComplex torus_1vertex() { return torus_grid(2, 1); }

// Connected sum of two simplicial surfaces along one triangle of each:
// the triangles are removed and their boundaries glued by ascending
// vertex order. Both triangles must have vertex-disjoint... the glue just
// identifies the i-th smallest vertices with each other.
inline DeltaComplex connected_sum(const DeltaComplex& a, std::size_t tri_a, const DeltaComplex& b,
                                  std::size_t tri_b) {
    auto tri_vertices = [](const DeltaComplex& g, std::size_t t) {
        std::array<std::size_t, 3> v{};
        for (std::size_t s = 0; s < 3; ++s) v[s] = g.vertex_at(2, t, s);
        return v;
    };
    auto tri_edges = [](const DeltaComplex& g, std::size_t t) { return g.cells[2][t]; };

    auto va = tri_vertices(a, tri_a);
    auto vb = tri_vertices(b, tri_b);
    auto ea = tri_edges(a, tri_a);
    auto eb = tri_edges(b, tri_b);

    DeltaComplex g;
    // copy a without tri_a
    for (std::size_t v = 0; v < a.size(0); ++v) g.add_vertex();
    std::vector<std::size_t> edge_map_a(a.size(1));
    for (std::size_t e = 0; e < a.size(1); ++e) edge_map_a[e] = g.add_cell(1, a.cells[1][e]);
    for (std::size_t t = 0; t < a.size(2); ++t) {
        if (t == tri_a) continue;
        auto f = a.cells[2][t];
        for (auto& e : f) e = edge_map_a[e];
        g.add_cell(2, std::move(f));
    }
    // copy b without tri_b, gluing vertices and edges of the cut triangle
    std::vector<std::size_t> vertex_map_b(b.size(0), SIZE_MAX);
    for (std::size_t s = 0; s < 3; ++s) vertex_map_b[vb[s]] = va[s];
    for (std::size_t v = 0; v < b.size(0); ++v)
        if (vertex_map_b[v] == SIZE_MAX) vertex_map_b[v] = g.add_vertex();
    std::vector<std::size_t> edge_map_b(b.size(1), SIZE_MAX);
    for (std::size_t s = 0; s < 3; ++s) edge_map_b[eb[s]] = edge_map_a[ea[s]];
    for (std::size_t e = 0; e < b.size(1); ++e) {
        if (edge_map_b[e] != SIZE_MAX) continue;
        auto f = b.cells[1][e];
        for (auto& v : f) v = vertex_map_b[v];
        edge_map_b[e] = g.add_cell(1, std::move(f));
    }
    for (std::size_t t = 0; t < b.size(2); ++t) {
        if (t == tri_b) continue;
        auto f = b.cells[2][t];
        for (auto& e : f) e = edge_map_b[e];
        g.add_cell(2, std::move(f));
    }
    return g;
}

// 9-vertex Klein bottle: connected sum of two copies of the 6-vertex
// projective plane along the triangle {0,1,2}.
inline DeltaComplex klein_bottle_9() {
    // triangle {0,1,2} is the first 2-cell of projective_plane_6
    return connected_sum(projective_plane_6(), 0, projective_plane_6(), 0);
}

// Two complexes joined at a single vertex (a non-manifold point).
inline DeltaComplex wedge_at_vertex(const DeltaComplex& a, std::size_t va, const DeltaComplex& b,
                                    std::size_t vb) {
    DeltaComplex g = a;
    std::vector<std::size_t> vmap(b.size(0));
    for (std::size_t v = 0; v < b.size(0); ++v) vmap[v] = v == vb ? va : g.add_vertex();
    std::vector<std::size_t> emap(b.size(1));
    for (std::size_t e = 0; e < b.size(1); ++e)
        emap[e] = g.add_cell(1, {vmap[b.cells[1][e][0]], vmap[b.cells[1][e][1]]});
    std::vector<std::size_t> tmap(b.size(2));
    for (std::size_t t = 0; t < b.size(2); ++t) {
        auto f = b.cells[2][t];
        for (auto& e : f) e = emap[e];
        tmap[t] = g.add_cell(2, std::move(f));
    }
    for (std::size_t s = 0; s < b.size(3); ++s) {
        auto f = b.cells[3][s];
        for (auto& t : f) t = tmap[t];
        g.add_cell(3, std::move(f));
    }
    return g;
}

// Orientation double cover of a closed surface complex. Triangle lifts
// carry an orientation bit; across each base edge the two incident
// triangle lifts glue exactly when their orientations are compatible
// (they induce opposite directions on the edge). Cover vertices are the
// corner classes this gluing generates.
struct SurfaceCover {
    DeltaComplex total;
    std::vector<std::size_t> vertex_to_base;
    std::vector<std::size_t> edge_to_base;
    std::vector<std::size_t> triangle_to_base;
};

inline SurfaceCover orientation_double_cover(const DeltaComplex& base) {
    SurfaceClass cls = classify_surface(base);
    if (!cls.is_closed_surface())
        throw std::invalid_argument("orientation_double_cover: base is not a closed surface (" +
                                    cls.diagnostic + ")");
    const std::size_t E = base.size(1), T = base.size(2);

    // the two incidences of each base edge, in discovery order
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> inc(E);
    for (std::size_t t = 0; t < T; ++t)
        for (std::size_t m = 0; m < 3; ++m) inc[base.cells[2][t][m]].push_back({t, m});

    // cover edge of lift (t, eps) at slot m: label eps ^ (m & 1) for the
    // first incidence, the negation for the second
    auto edge_lift = [&](std::size_t t, std::size_t eps, std::size_t m) {
        std::size_t e = base.cells[2][t][m];
        std::size_t which = inc[e][0] == std::make_pair(t, m) ? 0 : 1;
        std::size_t label = (eps ^ (m & 1)) ^ which;
        return 2 * e + label;
    };

    // cover vertices: union-find over (cover edge, vertex slot)
    std::vector<std::size_t> parent(4 * E);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto key = [](std::size_t cover_edge, std::size_t slot) { return 2 * cover_edge + slot; };

    for (std::size_t t = 0; t < T; ++t)
        for (std::size_t eps = 0; eps < 2; ++eps)
            for (std::size_t i = 0; i < 3; ++i) {
                std::array<std::size_t, 2> others{};
                std::size_t n = 0;
                for (std::size_t j = 0; j < 3; ++j)
                    if (j != i) others[n++] = j;
                std::array<std::size_t, 2> ends{};
                for (std::size_t a = 0; a < 2; ++a) {
                    std::size_t j = others[a];
                    std::size_t ce = edge_lift(t, eps, j);
                    std::size_t slot = i > j ? i - 1 : i;
                    ends[a] = key(ce, slot);
                }
                parent[find(ends[0])] = find(ends[1]);
            }

    SurfaceCover cover;
    std::map<std::size_t, std::size_t> vertex_of_class;
    for (std::size_t ce = 0; ce < 2 * E; ++ce)
        for (std::size_t slot = 0; slot < 2; ++slot) {
            std::size_t root = find(key(ce, slot));
            if (!vertex_of_class.count(root)) {
                vertex_of_class[root] = cover.total.add_vertex();
                cover.vertex_to_base.push_back(base.vertex_at(1, ce / 2, slot));
            }
        }
    for (std::size_t ce = 0; ce < 2 * E; ++ce) {
        std::size_t v0 = vertex_of_class.at(find(key(ce, 0)));
        std::size_t v1 = vertex_of_class.at(find(key(ce, 1)));
        cover.total.add_cell(1, {v1, v0}); // faces[0] deletes slot 0
        cover.edge_to_base.push_back(ce / 2);
    }
    for (std::size_t t = 0; t < T; ++t)
        for (std::size_t eps = 0; eps < 2; ++eps) {
            std::vector<std::size_t> faces(3);
            for (std::size_t m = 0; m < 3; ++m) faces[m] = edge_lift(t, eps, m);
            cover.total.add_cell(2, std::move(faces));
            cover.triangle_to_base.push_back(t);
        }
    return cover;
}

} // namespace degen
