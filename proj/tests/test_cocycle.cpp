#include "orbitkit/cocycle.hpp"

#include <doctest.h>

#include "orbitkit/errors.hpp"

using namespace orbitkit;

namespace {

Cocycle heisenberg3_psi() {
    FinAbGroup C({3, 3}), A({3});
    BilinearMatrix M = {{{0}, {1}}, {{0}, {0}}}; // psi(c, c') = c_1 * c'_2
    return from_bilinear(C, A, M);
}

} // namespace

TEST_CASE("bilinear cocycles satisfy the cocycle identity") {
    Cocycle psi = heisenberg3_psi();
    TripleViolation v{};
    CHECK(validate_cocycle(psi, &v));
    CHECK(is_centered(psi));
    CHECK(is_nondegenerate(psi));
    CHECK_FALSE(is_symmetric(psi));
}

TEST_CASE("cocycle validation reports the lowest violating triple") {
    Cocycle psi = heisenberg3_psi();
    psi.set(4, 4, psi.A.add_idx(psi.at(4, 4), 1)); // corrupt one entry
    TripleViolation v{};
    CHECK_FALSE(validate_cocycle(psi, &v));
    // first failing triple in lexicographic (c1, c2, c3) order
    CHECK(psi.at(v.c1, psi.C.add_idx(v.c2, v.c3)) !=
          psi.A.add_idx(psi.A.sub_idx(psi.A.add_idx(psi.at(v.c1, v.c2),
                                                    psi.at(psi.C.add_idx(v.c1, v.c2), v.c3)),
                                      psi.at(v.c2, v.c3)),
                        0));
}

TEST_CASE("carry cocycle is the nonsplit extension Z/m^2 of Z/m by Z/m") {
    Cocycle psi = carry_cocycle(3);
    CHECK(validate_cocycle(psi));
    CHECK(is_symmetric(psi));
    CHECK(is_centered(psi));
    CHECK_FALSE(is_nondegenerate(psi));
    CHECK(psi.at(1, 2) == 1);
    CHECK(psi.at(1, 1) == 0);
    CHECK(psi.at(2, 2) == 1);
}

TEST_CASE("coboundaries preserve the cocycle identity and cohomology invariants") {
    Cocycle psi = heisenberg3_psi();
    Chain q(psi.C.size(), 0);
    q[1] = 2;
    q[4] = 1;
    q[0] = 1; // de-centers
    Cocycle shifted = add_coboundary(psi, q);
    CHECK(validate_cocycle(shifted));
    CHECK_FALSE(is_centered(shifted));
    CHECK(is_nondegenerate(shifted)); // invariant under coboundary shifts

    Cocycle recentered = center(shifted);
    CHECK(is_centered(recentered));
    CHECK(validate_cocycle(recentered));
}

TEST_CASE("centering uses the chain q(0) = -psi(0,0)") {
    Cocycle psi = heisenberg3_psi();
    Chain q(psi.C.size(), 0);
    q[0] = 2;
    Cocycle shifted = add_coboundary(psi, q);
    Chain c = centering_chain(shifted);
    CHECK(c[0] == psi.A.neg_idx(shifted.at(0, 0)));
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i] == 0);
    CHECK(center(shifted) == psi);
}

TEST_CASE("equalize kills psi(c,-c) and is cohomologous") {
    Cocycle psi = carry_cocycle(9);
    CHECK_FALSE(is_equalized(psi));
    Cocycle eq = equalize(psi);
    CHECK(validate_cocycle(eq));
    CHECK(is_centered(eq));
    CHECK(is_equalized(eq));
    for (std::size_t c = 0; c < eq.C.size(); ++c) CHECK(eq.at(c, eq.C.neg_idx(c)) == 0);
}

TEST_CASE("equalize requires odd order") {
    CHECK_THROWS_AS(equalize(carry_cocycle(2)), NotTwoDivisible);
}

TEST_CASE("skew bihomomorphism validation") {
    Cocycle psi = heisenberg3_psi();
    SkewBihom eta(psi.C, psi.A);
    for (std::size_t c1 = 0; c1 < psi.C.size(); ++c1)
        for (std::size_t c2 = 0; c2 < psi.C.size(); ++c2)
            eta.set(c1, c2, psi.A.sub_idx(psi.at(c1, c2), psi.at(c2, c1)));
    CHECK(validate_skew_bihom(eta));
    CHECK(eta_nondegenerate(eta));

    eta.set(1, 1, 1); // break eta(c,c) = 0
    CHECK_FALSE(validate_skew_bihom(eta));
}

TEST_CASE("from_bilinear rejects forms not defined modulo the moduli") {
    FinAbGroup C({3}), A({5});
    BilinearMatrix M = {{{1}}}; // 3 * 1 != 0 mod 5
    CHECK_THROWS_AS(from_bilinear(C, A, M), IncompatibleModuli);
}

TEST_CASE("sampled validation agrees with exhaustive validation") {
    std::mt19937 rng(7);
    Cocycle good = heisenberg3_psi();
    CHECK(validate_cocycle_sampled(good, 500, rng));

    Cocycle bad = good;
    for (std::size_t c1 = 0; c1 < bad.C.size(); ++c1)
        bad.set(c1, 1, bad.A.add_idx(bad.at(c1, 1), 1 + (c1 % 2)));
    REQUIRE_FALSE(validate_cocycle(bad));
    CHECK_FALSE(validate_cocycle_sampled(bad, 2000, rng));
}
