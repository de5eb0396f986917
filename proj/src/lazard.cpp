#include "orbitkit/lazard.hpp"

namespace orbitkit {

LieRing::LieRing(FinAbGroup A, FinAbGroup C, Cocycle phi, SkewBihom eta)
    : A_(std::move(A)), C_(std::move(C)), phi_(std::move(phi)), eta_(std::move(eta)) {
    if (!(phi_.A == A_) || !(phi_.C == C_) || !(eta_.A == A_) || !(eta_.C == C_))
        throw InvalidSpec("Lie ring cocycle groups do not match the extension data");
    if (!is_symmetric(phi_)) throw AsymmetricPhi("phi must be symmetric");
    if (!is_centered(phi_)) throw InvalidSpec("phi must be centered");
    TripleViolation v;
    if (!validate_cocycle(phi_, &v)) throw InvalidSpec("phi fails the cocycle identity");
    if (!validate_skew_bihom(eta_, &v))
        throw InvalidSpec("eta is not a skew-symmetric bihomomorphism");
}

std::size_t LieRing::add(std::size_t x, std::size_t y) const {
    std::size_t c1 = c_of(x), c2 = c_of(y);
    std::size_t a = A_.add_idx(A_.add_idx(a_of(x), a_of(y)), phi_.at(c1, c2));
    return idx(a, C_.add_idx(c1, c2));
}

std::size_t LieRing::neg(std::size_t x) const {
    std::size_t c = c_of(x), nc = C_.neg_idx(c);
    std::size_t a = A_.neg_idx(A_.add_idx(a_of(x), phi_.at(c, nc)));
    return idx(a, nc);
}

std::size_t LieRing::bracket(std::size_t x, std::size_t y) const {
    // [(a1,c1),(a2,c2)] = (eta(c1,c2) - phi(0,0), 0); phi is centered
    return idx(eta_.at(c_of(x), c_of(y)), 0);
}

std::size_t LieRing::scaled(int64_t k, std::size_t x) const {
    if (k < 0) return scaled(-k, neg(x));
    std::size_t acc = zero();
    std::size_t base = x;
    while (k > 0) {
        if (k & 1) acc = add(acc, base);
        base = add(base, base);
        k >>= 1;
    }
    return acc;
}

std::size_t LieRing::halve(std::size_t x) const {
    if (order() % 2 == 0) throw NotTwoDivisible("halve: ring has even order");
    // the additive order of every element divides |ring|, so for odd order
    // (|ring|+1)/2 inverts doubling
    return scaled((order() + 1) / 2, x);
}

bool LieRing::operator==(const LieRing& o) const {
    return A_ == o.A_ && C_ == o.C_ && phi_ == o.phi_ && eta_ == o.eta_;
}

std::pair<Cocycle, SkewBihom> L_c(const Cocycle& psi) {
    if (!psi.A.two_divisible()) throw NotTwoDivisible("L_c: A has even order");
    const std::size_t n = psi.C.size();
    Cocycle phi(psi.C, psi.A);
    SkewBihom eta(psi.C, psi.A);
    for (std::size_t c1 = 0; c1 < n; ++c1)
        for (std::size_t c2 = 0; c2 < n; ++c2) {
            std::size_t s = psi.A.add_idx(psi.at(c1, c2), psi.at(c2, c1));
            phi.set(c1, c2, static_cast<uint32_t>(psi.A.halve_idx(s)));
            eta.set(c1, c2,
                    static_cast<uint32_t>(psi.A.sub_idx(psi.at(c1, c2), psi.at(c2, c1))));
        }
    return {std::move(phi), std::move(eta)};
}

Cocycle E_c(const Cocycle& phi, const SkewBihom& eta) {
    if (!phi.A.two_divisible()) throw NotTwoDivisible("E_c: A has even order");
    if (!is_symmetric(phi)) throw AsymmetricPhi("E_c: phi must be symmetric");
    if (!(phi.C == eta.C) || !(phi.A == eta.A))
        throw InvalidSpec("E_c: phi and eta live on different groups");
    const std::size_t n = phi.C.size();
    Cocycle psi(phi.C, phi.A);
    for (std::size_t c1 = 0; c1 < n; ++c1)
        for (std::size_t c2 = 0; c2 < n; ++c2)
            psi.set(c1, c2,
                    static_cast<uint32_t>(
                        phi.A.add_idx(phi.at(c1, c2), phi.A.halve_idx(eta.at(c1, c2)))));
    return psi;
}

LieRing L_group(const Class2Group& B) {
    if (B.order() % 2 == 0) throw NotTwoDivisible("L_group: group has even order");
    auto [phi, eta] = L_c(B.psi());
    return LieRing(B.A(), B.C(), std::move(phi), std::move(eta));
}

Class2Group E_ring(const LieRing& ring) {
    if (!ring.A().two_divisible()) throw NotTwoDivisible("E_ring: center has even order");
    return Class2Group(ring.A(), ring.C(), E_c(ring.phi(), ring.eta()));
}

std::optional<std::pair<std::size_t, std::size_t>>
functor_on_morphism(const Class2Group& B1, const Class2Group& B2,
                    const std::vector<std::size_t>& f, FunctorDirection direction) {
    LieRing r1 = L_group(B1), r2 = L_group(B2);
    std::pair<std::size_t, std::size_t> w;
    if (direction == FunctorDirection::GroupToLie) {
        if (!hom_check(B1, B2, f, &w))
            throw NotAHomomorphism("functor_on_morphism: f is not a group homomorphism");
        for (std::size_t x = 0; x < r1.size(); ++x)
            for (std::size_t y = 0; y < r1.size(); ++y) {
                if (f[r1.add(x, y)] != r2.add(f[x], f[y])) return std::make_pair(x, y);
                if (f[r1.bracket(x, y)] != r2.bracket(f[x], f[y])) return std::make_pair(x, y);
            }
    } else {
        for (std::size_t x = 0; x < r1.size(); ++x)
            for (std::size_t y = 0; y < r1.size(); ++y)
                if (f[r1.add(x, y)] != r2.add(f[x], f[y]) ||
                    f[r1.bracket(x, y)] != r2.bracket(f[x], f[y]))
                    throw NotAHomomorphism(
                        "functor_on_morphism: f is not a Lie ring homomorphism");
        if (!hom_check(B1, B2, f, &w)) return w;
    }
    return std::nullopt;
}

IdentityReport lemma_identities(const Class2Group& B, std::size_t pair_budget,
                                std::size_t samples, uint64_t seed) {
    if (B.order() % 2 == 0) throw NotTwoDivisible("lemma_identities: group has even order");
    LieRing ring = L_group(B);
    IdentityReport report;

    auto check_pair = [&](std::size_t b1, std::size_t b2) -> bool {
        report.pairs_checked++;
        std::size_t br = ring.bracket(b1, b2);
        if (B.inv(b1) != ring.neg(b1)) {
            report.failed_identity = "b^-1 = -b";
            return false;
        }
        if (B.mul(b1, b2) != ring.add(ring.add(b1, b2), ring.halve(br))) {
            report.failed_identity = "b1 b2 = b1 + b2 + [b1,b2]/2";
            return false;
        }
        if (B.mul(B.mul(b1, b2), B.inv(b1)) != ring.add(b2, br)) {
            report.failed_identity = "b1 b2 b1^-1 = b2 + [b1,b2]";
            return false;
        }
        if (B.commutator(b1, b2) != br) {
            report.failed_identity = "group commutator = ring bracket";
            return false;
        }
        if (B.mul(b1, b2) == B.mul(b2, b1) && B.mul(b1, b2) != ring.add(b1, b2)) {
            report.failed_identity = "commuting b1 b2 = b1 + b2";
            return false;
        }
        return true;
    };

    const std::size_t n = B.size();
    if (n * n <= pair_budget) {
        for (std::size_t b1 = 0; b1 < n; ++b1)
            for (std::size_t b2 = 0; b2 < n; ++b2)
                if (!check_pair(b1, b2)) {
                    report.passed = false;
                    report.witness = {b1, b2};
                    return report;
                }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t s = 0; s < samples; ++s) {
            std::size_t b1 = pick(rng), b2 = pick(rng);
            if (!check_pair(b1, b2)) {
                report.passed = false;
                report.witness = {b1, b2};
                return report;
            }
        }
    }
    return report;
}

} // namespace orbitkit
