#include "orbitkit/groupalg.hpp"

#include <cmath>
#include <numbers>
#include <set>

namespace orbitkit {

namespace {
std::complex<double> zeta_pow(int64_t e, int64_t k) {
    double arg = 2.0 * std::numbers::pi * static_cast<double>(((k % e) + e) % e) /
                 static_cast<double>(e);
    return {std::cos(arg), std::sin(arg)};
}
} // namespace

GroupAlgebra::GroupAlgebra(const OrbitMethod& om) : om_(om), e_(om.root_order()) {
    const auto& B = om_.group();
    if (B.order() > kBudget)
        throw BudgetExceeded("group algebra verification capped at |B| <= " +
                             std::to_string(kBudget));
    n_ = B.size();
    x_.assign(n_, std::vector<int64_t>(n_, 0));
    for (std::size_t chi = 0; chi < n_; ++chi)
        for (std::size_t g = 0; g < n_; ++g) x_[chi][g] = om_.eval(chi, g);
    mul_.resize(n_ * n_);
    for (std::size_t g = 0; g < n_; ++g)
        for (std::size_t h = 0; h < n_; ++h) mul_[g * n_ + h] = static_cast<uint32_t>(B.mul(g, h));
}

AlgebraElement GroupAlgebra::xbasis_vector(std::size_t chi) const {
    const std::size_t n = om_.group().size();
    AlgebraElement v(n);
    for (std::size_t g = 0; g < n; ++g) v[g] = zeta_pow(e_, x_[chi][g]);
    return v;
}

void GroupAlgebra::check_gram_identity() const {
    const std::size_t n = om_.group().size();
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s; t < n; ++t) {
            std::vector<int64_t> count(static_cast<std::size_t>(e_), 0);
            for (std::size_t g = 0; g < n; ++g)
                count[static_cast<std::size_t>((((x_[s][g] - x_[t][g]) % e_) + e_) % e_)]++;
            if (s == t) {
                if (count[0] != static_cast<int64_t>(n))
                    throw FormulaMismatch("Gram diagonal is not 1");
                continue;
            }
            // the difference exponent is a homomorphism B -> Z/e; the sum
            // of a full nontrivial subgroup of roots of unity is exactly 0
            if (count[0] == static_cast<int64_t>(n))
                throw FormulaMismatch("distinct characters with identical exponents");
            std::set<int64_t> fibers;
            for (int64_t c : count)
                if (c > 0) fibers.insert(c);
            if (fibers.size() != 1)
                throw FormulaMismatch("Gram off-diagonal exponent sum does not vanish");
        }
}

ActionResult GroupAlgebra::left_action(std::size_t b, std::size_t chi) const {
    const auto& B = om_.group();
    const std::size_t n = B.size();
    int64_t phase = om_.eval(chi, om_.ring().neg(b));
    std::size_t image = om_.coad(B.half_element(b), chi);
    // direct convolution: (b X_chi)_g = chi(b^{-1} g)
    std::size_t binv = B.inv(b);
    for (std::size_t g = 0; g < n; ++g) {
        int64_t direct = x_[chi][mul(binv, g)];
        int64_t closed = (phase + x_[image][g]) % e_;
        if (direct != closed)
            throw FormulaMismatch("left action closed form mismatch at b=" + std::to_string(b) +
                                  " chi=" + std::to_string(chi) + " g=" + std::to_string(g));
    }
    return {phase, image};
}

ActionResult GroupAlgebra::right_action(std::size_t chi, std::size_t b) const {
    const auto& B = om_.group();
    const std::size_t n = B.size();
    int64_t phase = om_.eval(chi, om_.ring().neg(b));
    // Ad*(-b/2): -(b/2) is the group inverse of the square root
    std::size_t image = om_.coad(B.inv(B.half_element(b)), chi);
    std::size_t binv = B.inv(b);
    for (std::size_t g = 0; g < n; ++g) {
        int64_t direct = x_[chi][mul(g, binv)];
        int64_t closed = (phase + x_[image][g]) % e_;
        if (direct != closed)
            throw FormulaMismatch("right action closed form mismatch at b=" + std::to_string(b) +
                                  " chi=" + std::to_string(chi) + " g=" + std::to_string(g));
    }
    return {phase, image};
}

AlgebraElement GroupAlgebra::convolve(const AlgebraElement& x, const AlgebraElement& y) const {
    const auto& B = om_.group();
    const std::size_t n = B.size();
    AlgebraElement out(n, {0.0, 0.0});
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) out[mul(g, h)] += x[g] * y[h];
    return out;
}

void GroupAlgebra::verify_ideal(const Orbit& orbit) const {
    const auto& B = om_.group();
    std::set<std::size_t> members(orbit.members.begin(), orbit.members.end());
    for (std::size_t b = 0; b < B.size(); ++b)
        for (std::size_t chi : orbit.members) {
            if (!members.count(left_action(b, chi).image_chi))
                throw IdealViolation("left action leaves the orbit span");
            if (!members.count(right_action(chi, b).image_chi))
                throw IdealViolation("right action leaves the orbit span");
        }
    // sampled orthogonality of distinct isotypic ideals; each unordered
    // pair of orbits is convolved once (by the smaller representative)
    for (const Orbit& other : om_.orbits()) {
        if (other.rep() <= orbit.rep()) continue;
        AlgebraElement p =
            convolve(xbasis_vector(orbit.rep()), xbasis_vector(other.rep()));
        for (const auto& c : p)
            if (std::abs(c) > 1e-9 * static_cast<double>(B.order()))
                throw IdealViolation("product of distinct isotypic ideals is nonzero");
    }
}

std::complex<double> GroupAlgebra::regular_trace(const Orbit& orbit, std::size_t g) const {
    const auto& B = om_.group();
    std::size_t ginv = B.inv(g);
    std::complex<double> trace = 0.0;
    bool any_fixed = false;
    for (std::size_t chi : orbit.members) {
        ActionResult r = right_action(chi, ginv); // R(g) X_chi = X_chi g^{-1}
        if (r.image_chi == chi) {
            any_fixed = true;
            trace += zeta_pow(e_, r.phase_exponent);
        }
    }
    int64_t n = OrbitMethod::orbit_dimension(orbit);
    std::complex<double> expected;
    if (om_.in_stabilizer(g, orbit.rep())) {
        expected = static_cast<double>(n * n) *
                   zeta_pow(e_, om_.eval(orbit.rep(), g));
        if (!any_fixed) throw TraceMismatch("stabilizer element fixes no basis character");
    } else {
        expected = 0.0;
        if (any_fixed) throw TraceMismatch("non-stabilizer element fixes a basis character");
    }
    if (std::abs(trace - expected) > 1e-9 * static_cast<double>(n * n + 1))
        throw TraceMismatch("trace of R(g) on V_orbit disagrees with n^2 chi(g)");
    return trace;
}

} // namespace orbitkit
