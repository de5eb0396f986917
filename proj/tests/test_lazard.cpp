#include "orbitkit/lazard.hpp"

#include <doctest.h>

#include "orbitkit/errors.hpp"

using namespace orbitkit;

TEST_CASE("L_c and E_c are mutually inverse") {
    for (int64_t m : {3, 5, 9}) {
        Cocycle psi = carry_cocycle(m);
        auto [phi, eta] = L_c(psi);
        CHECK(is_symmetric(phi));
        CHECK(validate_cocycle(phi));
        CHECK(validate_skew_bihom(eta));
        CHECK(E_c(phi, eta) == psi);
    }
    Class2Group B = catalog_heisenberg(3);
    auto [phi, eta] = L_c(B.psi());
    CHECK(E_c(phi, eta) == B.psi());
    auto [phi2, eta2] = L_c(E_c(phi, eta));
    CHECK(phi2 == phi);
    CHECK(eta2 == eta);
}

TEST_CASE("the correspondence requires odd order") {
    CHECK_THROWS_AS(L_c(carry_cocycle(2)), NotTwoDivisible);
    Cocycle phi = carry_cocycle(2);
    SkewBihom eta(phi.C, phi.A);
    CHECK_THROWS_AS(E_c(phi, eta), NotTwoDivisible);
}

TEST_CASE("E_c rejects an asymmetric phi") {
    Class2Group B = catalog_heisenberg(3);
    SkewBihom eta(B.C(), B.A());
    CHECK_THROWS_AS(E_c(B.psi(), eta), AsymmetricPhi); // psi itself is not symmetric
}

TEST_CASE("L_group and E_ring are mutually inverse on structures") {
    for (const Class2Group& B :
         {catalog_heisenberg(3), catalog_heisenberg(5), catalog_abelian({3, 9})}) {
        LieRing ring = L_group(B);
        Class2Group B2 = E_ring(ring);
        for (std::size_t x = 0; x < B.size(); ++x)
            for (std::size_t y = 0; y < B.size(); ++y) CHECK(B2.mul(x, y) == B.mul(x, y));
        LieRing ring2 = L_group(B2);
        CHECK(ring2 == ring);
    }
}

TEST_CASE("Heisenberg(3) Lie ring values") {
    Class2Group B = catalog_heisenberg(3);
    LieRing ring = L_group(B);
    auto idx = [&](Coords a, Coords c) { return ring.index({std::move(a), std::move(c)}); };

    // phi((1,0),(0,1)) = (1 + 0)/2 = 2, the half of 1 mod 3
    std::size_t x = idx({0}, {1, 0}), y = idx({0}, {0, 1});
    CHECK(ring.add(x, y) == idx({2}, {1, 1}));
    CHECK(ring.add(x, y) == ring.add(y, x));
    CHECK(ring.bracket(x, y) == idx({1}, {0, 0}));
    CHECK(ring.bracket(y, x) == idx({2}, {0, 0}));
    CHECK(ring.bracket(x, x) == ring.zero());

    // the bracket is central: [anything, central] = 0
    std::size_t z = idx({1}, {0, 0});
    for (std::size_t g = 0; g < ring.size(); ++g) CHECK(ring.bracket(g, z) == ring.zero());
}

TEST_CASE("scaling and halving in the ring") {
    LieRing ring = L_group(catalog_heisenberg(5));
    for (std::size_t x = 0; x < ring.size(); ++x) {
        CHECK(ring.add(ring.halve(x), ring.halve(x)) == x);
        CHECK(ring.scaled(0, x) == ring.zero());
        CHECK(ring.scaled(-1, x) == ring.neg(x));
        CHECK(ring.add(x, ring.neg(x)) == ring.zero());
        CHECK(ring.scaled(3, x) == ring.add(x, ring.add(x, x)));
    }
}

TEST_CASE("Lazard identities hold element-literally") {
    for (const Class2Group& B :
         {catalog_heisenberg(3), catalog_heisenberg(5), catalog_abelian({5}),
          direct_product(catalog_heisenberg(3), catalog_abelian({3}))}) {
        IdentityReport rep = lemma_identities(B);
        CHECK(rep.passed);
        CHECK(rep.pairs_checked == B.size() * B.size());
    }
}

TEST_CASE("identity check samples above the pair budget") {
    Class2Group B = catalog_heisenberg(7); // 343^2 pairs > 300^2 budget
    IdentityReport rep = lemma_identities(B, /*pair_budget=*/300 * 300, /*samples=*/5000, 42);
    CHECK(rep.passed);
    CHECK(rep.pairs_checked == 5000);
}

TEST_CASE("the functor transports homomorphisms both ways") {
    Class2Group B = catalog_heisenberg(3);
    std::vector<std::size_t> f(B.size());
    std::size_t g = B.idx(1, 4);
    for (std::size_t x = 0; x < B.size(); ++x) f[x] = B.mul(B.mul(g, x), B.inv(g));

    CHECK_FALSE(functor_on_morphism(B, B, f, FunctorDirection::GroupToLie).has_value());
    CHECK_FALSE(functor_on_morphism(B, B, f, FunctorDirection::LieToGroup).has_value());

    f[7] = B.mul(f[7], 1);
    CHECK_THROWS_AS((void)functor_on_morphism(B, B, f, FunctorDirection::GroupToLie),
                    NotAHomomorphism);
}
