#pragma once

#include "orbitkit/orbits.hpp"

namespace orbitkit {

/// Dense group-algebra element: complex coefficients indexed by B's
/// canonical element enumeration.
using AlgebraElement = std::vector<std::complex<double>>;

struct ActionResult {
    int64_t phase_exponent; // chi(-b) = zeta^phase_exponent
    std::size_t image_chi;
};

/// Verification machinery for the X-basis of the group algebra: the
/// orthonormal character basis, its closed-form left/right module actions,
/// the isotypic two-sided ideals and the regular-representation traces.
///
/// Dense work is capped at |B| <= 243 (BudgetExceeded above).
class GroupAlgebra {
public:
    static constexpr int64_t kBudget = 243;

    explicit GroupAlgebra(const OrbitMethod& om);

    /// Exponent matrix of the X basis: entry (chi, g) is k with
    /// X_chi coefficient at g equal to zeta^k.
    const std::vector<std::vector<int64_t>>& xbasis_exponents() const { return x_; }

    AlgebraElement xbasis_vector(std::size_t chi) const;

    /// Exact Gram-matrix check: diagonal 1, off-diagonal exponent sums
    /// vanish (uniform fibers over a nontrivial subgroup of roots).
    /// Throws FormulaMismatch on failure.
    void check_gram_identity() const;

    /// b * X_chi, asserted coefficientwise equal to
    /// chi(-b) X_{Ad*(b/2)(chi)}; throws FormulaMismatch.
    ActionResult left_action(std::size_t b, std::size_t chi) const;

    /// X_chi * b, asserted equal to chi(-b) X_{Ad*(-b/2)(chi)}.
    ActionResult right_action(std::size_t chi, std::size_t b) const;

    /// Both actions keep every X_chi, chi in orbit, inside the span;
    /// sampled products V x V' vanish for distinct orbits.
    /// Throws IdealViolation.
    void verify_ideal(const Orbit& orbit) const;

    /// Trace of R(g) x = x g^{-1} restricted to V_orbit, checked against
    /// n^2 chi(g) on the stabilizer and 0 off it; throws TraceMismatch.
    std::complex<double> regular_trace(const Orbit& orbit, std::size_t g) const;

    /// Full convolution product in C[B].
    AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y) const;

private:
    std::size_t mul(std::size_t g, std::size_t h) const { return mul_[g * n_ + h]; }

    const OrbitMethod& om_;
    int64_t e_;
    std::size_t n_;
    std::vector<std::vector<int64_t>> x_;
    std::vector<uint32_t> mul_; // cached multiplication table
};

} // namespace orbitkit
