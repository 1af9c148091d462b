#include <degen/exact.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <vector>

using namespace degen;

namespace {

// Local simplicial boundary builder, kept independent of the library's
// Delta-complex machinery so it can serve as an oracle for it later.
ZChainComplex simplicial_complex(std::size_t vertices, std::vector<std::array<int, 3>> triangles) {
    std::map<std::pair<int, int>, std::size_t> edge_index;
    std::vector<std::pair<int, int>> edges;
    for (auto& t : triangles) {
        std::sort(t.begin(), t.end());
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                auto e = std::make_pair(t[i], t[j]);
                if (!edge_index.count(e)) {
                    edge_index[e] = edges.size();
                    edges.push_back(e);
                }
            }
    }
    ZMatrix d1(vertices, edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        d1(edges[k].second, k) += 1;
        d1(edges[k].first, k) -= 1;
    }
    ZMatrix d2(edges.size(), triangles.size());
    for (std::size_t k = 0; k < triangles.size(); ++k) {
        const auto& t = triangles[k];
        d2(edge_index[{t[1], t[2]}], k) += 1;
        d2(edge_index[{t[0], t[2]}], k) -= 1;
        d2(edge_index[{t[0], t[1]}], k) += 1;
    }
    ZChainComplex c;
    c.lowest = 0;
    c.dims = {vertices, edges.size(), triangles.size()};
    c.differentials = {ZMatrix(0, vertices), std::move(d1), std::move(d2)};
    return c;
}

const std::vector<std::array<int, 3>> kTetrahedron = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

// Antipodal quotient of the icosahedron: the 6-vertex projective plane.
const std::vector<std::array<int, 3>> kProjectivePlane6 = {
    {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
    {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};

} // namespace

TEST_CASE("homology of a complex concentrated in one degree") {
    QChainComplex c;
    c.lowest = 0;
    c.dims = {1};
    c.differentials = {QMatrix(0, 1)};
    auto h = homology_dims(c, 0);
    CHECK(h.at(0) == 1);
}

TEST_CASE("homology of the tetrahedron boundary is the 2-sphere") {
    auto c = simplicial_complex(4, kTetrahedron);
    auto h = homology_dims(c, 0);
    CHECK(h.at(0) == 1);
    CHECK(h.at(1) == 0);
    CHECK(h.at(2) == 1);
}

TEST_CASE("homology of the minimal projective plane over Q and F_2") {
    auto c = simplicial_complex(6, kProjectivePlane6);
    auto h0 = homology_dims(c, 0);
    CHECK(h0.at(0) == 1);
    CHECK(h0.at(1) == 0);
    CHECK(h0.at(2) == 0);
    auto h2 = homology_dims(c, 2);
    CHECK(h2.at(0) == 1);
    CHECK(h2.at(1) == 1);
    CHECK(h2.at(2) == 1);
    // Integer homology shows the single Z/2 in degree 1.
    auto hz = integer_homology(c);
    CHECK(hz.at(1).free_rank == 0);
    REQUIRE(hz.at(1).torsion.size() == 1);
    CHECK(hz.at(1).torsion[0] == 2);
    CHECK(hz.at(2).free_rank == 0);
    CHECK(hz.at(2).torsion.empty());
}

TEST_CASE("complexes violating d∘d = 0 are rejected") {
    QChainComplex c;
    c.lowest = 0;
    c.dims = {1, 1, 1};
    c.differentials = {QMatrix(0, 1), QMatrix{{Rat(1)}}, QMatrix{{Rat(1)}}};
    CHECK_THROWS_AS(homology_dims(c, 0), std::invalid_argument);
    // shape mismatch is also structural
    QChainComplex bad;
    bad.lowest = 0;
    bad.dims = {2, 1};
    bad.differentials = {QMatrix(0, 2), QMatrix(1, 1)};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_THROWS_AS(homology_dims(c, 6), std::invalid_argument);
}

TEST_CASE("d∘d = 0 holds on 500 random generated complexes") {
    std::mt19937 rng(91);
    for (int trial = 0; trial < 500; ++trial) {
        auto c = testgen::random_chain_complex(rng);
        REQUIRE_NOTHROW(c.validate());
        for (std::size_t k = 1; k + 1 < c.differentials.size(); ++k)
            CHECK((c.differentials[k] * c.differentials[k + 1]).is_zero());
    }
}

TEST_CASE("rational homology equals the free rank of integer homology") {
    std::mt19937 rng(92);
    for (int trial = 0; trial < 60; ++trial) {
        auto c = testgen::random_chain_complex(rng, 4, 8);
        auto hq = homology_dims(c, 0);
        auto hz = integer_homology(c);
        for (const auto& [deg, dim] : hq) CHECK(dim == hz.at(deg).free_rank);
    }
}

TEST_CASE("Euler characteristic equals the alternating homology sum") {
    std::mt19937 rng(93);
    for (int trial = 0; trial < 60; ++trial) {
        auto c = testgen::random_chain_complex(rng);
        auto h = homology_dims(c, 0);
        long long chi_cells = 0, chi_h = 0;
        for (std::size_t k = 0; k < c.dims.size(); ++k) {
            long long sign = (k % 2 == 0) ? 1 : -1;
            chi_cells += sign * static_cast<long long>(c.dims[k]);
            chi_h += sign * static_cast<long long>(h.at(static_cast<int>(k)));
        }
        CHECK(chi_cells == chi_h);
    }
}

TEST_CASE("F_p homology agrees with Q homology away from torsion primes") {
    std::mt19937 rng(94);
    for (int trial = 0; trial < 40; ++trial) {
        auto c = testgen::random_chain_complex(rng, 4, 6);
        auto hz = integer_homology(c);
        auto hq = homology_dims(c, 0);
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            bool p_torsion_free = true;
            for (const auto& [deg, data] : hz)
                for (const auto& f : data.torsion)
                    if (f % p == 0) p_torsion_free = false;
            if (!p_torsion_free) continue;
            auto hp = homology_dims(c, p);
            for (const auto& [deg, dim] : hq) CHECK(hp.at(deg) == dim);
        }
    }
}
