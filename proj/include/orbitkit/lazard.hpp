#pragma once

#include <optional>
#include <random>

#include "orbitkit/nilgroup.hpp"

namespace orbitkit {

struct LieElement {
    Coords a;
    Coords c;
    bool operator==(const LieElement& o) const = default;
};

/// Class-2 Lie ring on the set A x C: addition twisted by a symmetric
/// centered cocycle phi, bracket given by a skew bihomomorphism eta with
/// values in the center. Elements share the index scheme of Class2Group.
class LieRing {
public:
    LieRing(FinAbGroup A, FinAbGroup C, Cocycle phi, SkewBihom eta);

    const FinAbGroup& A() const { return A_; }
    const FinAbGroup& C() const { return C_; }
    const Cocycle& phi() const { return phi_; }
    const SkewBihom& eta() const { return eta_; }

    int64_t order() const { return A_.order() * C_.order(); }
    std::size_t size() const { return A_.size() * C_.size(); }

    std::size_t idx(std::size_t a, std::size_t c) const { return a + A_.size() * c; }
    std::size_t a_of(std::size_t i) const { return i % A_.size(); }
    std::size_t c_of(std::size_t i) const { return i / A_.size(); }
    std::size_t index(const LieElement& l) const { return idx(A_.index(l.a), C_.index(l.c)); }
    LieElement element(std::size_t i) const { return {A_.coords(a_of(i)), C_.coords(c_of(i))}; }

    std::size_t zero() const { return 0; }
    std::size_t add(std::size_t x, std::size_t y) const;
    std::size_t neg(std::size_t x) const;
    std::size_t sub(std::size_t x, std::size_t y) const { return add(x, neg(y)); }
    std::size_t bracket(std::size_t x, std::size_t y) const;
    std::size_t scaled(int64_t k, std::size_t x) const;
    std::size_t halve(std::size_t x) const;

    bool operator==(const LieRing& o) const;

private:
    FinAbGroup A_, C_;
    Cocycle phi_;
    SkewBihom eta_;
};

/// Cocycle-level Lie correspondence:
/// phi = (psi(c1,c2) + psi(c2,c1))/2, eta = psi(c1,c2) - psi(c2,c1).
std::pair<Cocycle, SkewBihom> L_c(const Cocycle& psi);

/// Inverse direction: psi = phi + eta/2.
Cocycle E_c(const Cocycle& phi, const SkewBihom& eta);

/// The Lie ring on the underlying set of B, from the stored centered
/// cocycle via L_c. Identities of the class-2 correspondence then hold
/// element-literally against B's multiplication.
LieRing L_group(const Class2Group& B);

/// The group on the underlying set of the ring, via E_c.
Class2Group E_ring(const LieRing& ring);

enum class FunctorDirection { GroupToLie, LieToGroup };

/// Re-verifies a group homomorphism as a Lie ring homomorphism (or the
/// reverse). Throws NotAHomomorphism when the precondition fails; returns
/// the first violated pair of the target structure, if any.
std::optional<std::pair<std::size_t, std::size_t>>
functor_on_morphism(const Class2Group& B1, const Class2Group& B2,
                    const std::vector<std::size_t>& f, FunctorDirection direction);

struct IdentityReport {
    std::size_t pairs_checked = 0;
    bool passed = true;
    std::pair<std::size_t, std::size_t> witness{0, 0};
    std::string failed_identity;
};

/// Checks b^{-1} = -b, b1 b2 = b1 + b2 + [b1,b2]/2, b1 b2 b1^{-1} =
/// b2 + [b1,b2], group commutator = bracket, and b1 b2 = b1 + b2 for
/// commuting pairs. Exhaustive when |B|^2 <= pair_budget, otherwise on
/// `samples` random pairs.
IdentityReport lemma_identities(const Class2Group& B, std::size_t pair_budget = 729 * 729,
                                std::size_t samples = 100000, uint64_t seed = 1);

} // namespace orbitkit
