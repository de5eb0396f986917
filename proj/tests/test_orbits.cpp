#include "orbitkit/orbits.hpp"

#include <doctest.h>

#include <map>

#include "orbitkit/errors.hpp"

using namespace orbitkit;

TEST_CASE("additive structure of the Heisenberg(3) Lie ring is (Z/3)^3") {
    LieRing ring = L_group(catalog_heisenberg(3));
    AdditiveStructure as = additive_structure(ring);
    CHECK(as.G.moduli() == std::vector<int64_t>{3, 3, 3});
    for (std::size_t x = 0; x < ring.size(); ++x) CHECK(as.from_G[as.to_G[x]] == x);
}

TEST_CASE("additive structure detects a nonsplit extension") {
    // carry cocycle on Z/3 by Z/3: additively cyclic of order 9
    FinAbGroup A({3}), C({3});
    LieRing ring(A, C, carry_cocycle(3), SkewBihom(C, A));
    AdditiveStructure as = additive_structure(ring);
    CHECK(as.G.moduli() == std::vector<int64_t>{9});
    // generator (0|1) has additive order 9
    std::size_t y = ring.idx(0, 1), acc = ring.zero();
    int64_t ord = 0;
    do {
        acc = ring.add(acc, y);
        ++ord;
    } while (acc != ring.zero());
    CHECK(ord == 9);
}

TEST_CASE("orbit partition of Heisenberg(3)") {
    OrbitMethod om(catalog_heisenberg(3));
    const auto& orbits = om.orbits();
    REQUIRE(orbits.size() == 11);
    std::map<std::size_t, int> hist;
    for (const auto& o : orbits) hist[o.size()]++;
    CHECK(hist == std::map<std::size_t, int>{{1, 9}, {9, 2}});

    // partition of the character set
    std::vector<int> seen(om.character_count(), 0);
    for (const auto& o : orbits)
        for (std::size_t chi : o.members) seen[chi]++;
    for (int s : seen) CHECK(s == 1);

    // degrees: 9 linear plus two of degree 3; sum of squares = 27
    int64_t sum = 0;
    for (const auto& o : orbits) {
        int64_t n = OrbitMethod::orbit_dimension(o);
        CHECK(n * n == static_cast<int64_t>(o.size()));
        sum += n * n;
    }
    CHECK(sum == 27);
}

TEST_CASE("orbit counts match class counts on the catalog") {
    for (const Class2Group& B :
         {catalog_heisenberg(3), catalog_heisenberg(5), catalog_abelian({3, 9}),
          direct_product(catalog_heisenberg(3), catalog_abelian({3}))}) {
        OrbitMethod om(B);
        CHECK(om.orbits().size() == B.conjugacy_classes().size());
        om.duality_count_check();
        CHECK(om.count_ad_orbits() == B.conjugacy_classes().size());
    }
    CHECK(OrbitMethod(catalog_heisenberg(5)).orbits().size() == 29);
}

TEST_CASE("adjoint action: bracket form equals conjugation form") {
    OrbitMethod om(catalog_heisenberg(3));
    for (std::size_t b = 0; b < 27; ++b)
        for (std::size_t l = 0; l < 27; ++l) CHECK(om.ad(b, l) == om.ad_conjugation(b, l));
}

TEST_CASE("coadjoint action is dual to the adjoint action") {
    OrbitMethod om(catalog_heisenberg(3));
    const LieRing& ring = om.ring();
    for (std::size_t b = 0; b < 27; ++b)
        for (std::size_t chi = 0; chi < 27; ++chi) {
            std::size_t image = om.coad(b, chi);
            for (std::size_t l = 0; l < 27; ++l)
                CHECK(om.eval(image, l) == om.eval(chi, ring.sub(l, ring.bracket(b, l))));
        }
}

TEST_CASE("stabilizers: bilinear test equals fixed-point test") {
    OrbitMethod om(catalog_heisenberg(3));
    for (std::size_t chi = 0; chi < om.character_count(); ++chi) {
        CHECK(om.stabilizer(chi) == om.stabilizer_naive(chi));
        CHECK(om.stabilizer(chi).size() * om.orbits()[om.orbit_of(chi)].size() == 27);
    }
}

TEST_CASE("orbit characters vanish off the stabilizer and scale on it") {
    OrbitMethod om(catalog_heisenberg(3));
    for (const Orbit& o : om.orbits()) {
        int64_t n = OrbitMethod::orbit_dimension(o);
        for (std::size_t b = 0; b < 27; ++b) {
            ExactValue v = om.orbit_character(o, b);
            if (om.in_stabilizer(b, o.rep())) {
                CHECK(v.scale == n);
                CHECK(v.exponent == om.eval(o.rep(), b));
            } else {
                CHECK(v.scale == 0);
            }
        }
        // value at the identity is the degree
        CHECK(om.orbit_character(o, 0).scale == n);
        CHECK(om.orbit_character(o, 0).exponent == 0);
    }
}

TEST_CASE("character values are constant on orbit representatives") {
    OrbitMethod om(catalog_heisenberg(3));
    for (const Orbit& o : om.orbits())
        for (std::size_t chi : o.members)
            for (std::size_t b = 0; b < 27; ++b)
                if (om.in_stabilizer(b, o.rep())) CHECK(om.eval(chi, b) == om.eval(o.rep(), b));
}

TEST_CASE("dual orbits negate and pair up") {
    OrbitMethod om(catalog_heisenberg(5));
    for (const Orbit& o : om.orbits()) {
        Orbit d = om.dual_orbit(o);
        CHECK(d.size() == o.size());
        CHECK(om.dual_orbit(d) == o);
        // conjugate character: chi*(b) = conj(chi(b))
        for (std::size_t b = 0; b < om.group().size(); ++b) {
            ExactValue v = om.orbit_character(o, b);
            ExactValue w = om.orbit_character(d, b);
            CHECK(v.scale == w.scale);
            if (v.scale != 0) CHECK((v.exponent + w.exponent) % v.root_order == 0);
        }
    }
}

TEST_CASE("orbit_dimension rejects non-squares") {
    Orbit o{{0, 1, 2}};
    CHECK_THROWS_AS(OrbitMethod::orbit_dimension(o), NotPerfectSquare);
}

TEST_CASE("exact values render correctly") {
    ExactValue zero{};
    CHECK(to_complex(zero) == std::complex<double>(0.0, 0.0));
    ExactValue v{3, 3, 1};
    CHECK(std::abs(to_complex(v) - std::complex<double>(-1.5, 3 * 0.8660254037844386)) < 1e-12);
}
