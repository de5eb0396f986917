#include "orbitkit/groupalg.hpp"

#include <doctest.h>

#include "orbitkit/errors.hpp"

using namespace orbitkit;

TEST_CASE("X basis is orthonormal and spans: Gram identity") {
    OrbitMethod om(catalog_heisenberg(3));
    GroupAlgebra alg(om);
    CHECK_NOTHROW(alg.check_gram_identity());

    // numeric spot check of one inner product
    AlgebraElement x = alg.xbasis_vector(1), y = alg.xbasis_vector(2);
    std::complex<double> ip = 0.0;
    for (std::size_t g = 0; g < 27; ++g) ip += x[g] * std::conj(y[g]);
    CHECK(std::abs(ip / 27.0) < 1e-12);
}

TEST_CASE("closed-form left and right actions") {
    OrbitMethod om(catalog_heisenberg(3));
    GroupAlgebra alg(om);
    for (std::size_t b = 0; b < 27; ++b)
        for (std::size_t chi = 0; chi < 27; ++chi) {
            // constructors of ActionResult verify coefficientwise agreement
            ActionResult l = alg.left_action(b, chi);
            ActionResult r = alg.right_action(chi, b);
            // both phases are chi(-b)
            CHECK(l.phase_exponent == r.phase_exponent);
            // left and right images agree exactly when b stabilizes chi
            CHECK((l.image_chi == r.image_chi) == om.in_stabilizer(b, chi));
        }
}

TEST_CASE("orbit spans are two-sided ideals that annihilate each other") {
    OrbitMethod om(catalog_heisenberg(3));
    GroupAlgebra alg(om);
    for (const Orbit& o : om.orbits()) CHECK_NOTHROW(alg.verify_ideal(o));
}

TEST_CASE("regular traces reproduce the orbit characters") {
    OrbitMethod om(catalog_heisenberg(3));
    GroupAlgebra alg(om);
    for (const Orbit& o : om.orbits()) {
        int64_t n = OrbitMethod::orbit_dimension(o);
        for (std::size_t g = 0; g < 27; ++g) {
            std::complex<double> tr = alg.regular_trace(o, g);
            std::complex<double> chi = to_complex(om.orbit_character(o, g));
            CHECK(std::abs(tr - static_cast<double>(n) * chi) < 1e-9);
        }
    }
}

TEST_CASE("convolution realizes the group multiplication") {
    OrbitMethod om(catalog_abelian({5}));
    GroupAlgebra alg(om);
    // delta_g * delta_h = delta_{gh}
    AlgebraElement dg(5, 0.0), dh(5, 0.0);
    dg[2] = 1.0;
    dh[4] = 1.0;
    AlgebraElement p = alg.convolve(dg, dh);
    for (std::size_t k = 0; k < 5; ++k)
        CHECK(std::abs(p[k] - (k == 1 ? 1.0 : 0.0)) < 1e-12); // 2 + 4 = 1 mod 5
}

TEST_CASE("the dense-algebra budget is enforced") {
    OrbitMethod om(catalog_heisenberg(7)); // order 343 > 243
    CHECK_THROWS_AS(GroupAlgebra{om}, BudgetExceeded);
}
