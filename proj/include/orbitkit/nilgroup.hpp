#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/cocycle.hpp"

namespace orbitkit {

struct GroupElement {
    Coords a;
    Coords c;
    bool operator==(const GroupElement& o) const = default;
};

/// The class-2 group B = A x C with multiplication
/// (a1,c1)(a2,c2) = (a1 + a2 + psi(c1,c2), c1 + c2).
///
/// The stored cocycle is centered at construction, so the identity is
/// element 0 = (0,0); the raw input cocycle is retained. Elements are
/// indexed as a_idx + |A| * c_idx.
class Class2Group {
public:
    Class2Group(FinAbGroup A, FinAbGroup C, Cocycle psi, bool strict_center = false);

    const FinAbGroup& A() const { return A_; }
    const FinAbGroup& C() const { return C_; }
    const Cocycle& psi() const { return psi_; }          // centered
    const Cocycle& psi_raw() const { return psi_raw_; }  // as supplied
    bool strict_center() const { return strict_center_; }

    int64_t order() const { return A_.order() * C_.order(); }
    std::size_t size() const { return A_.size() * C_.size(); }

    std::size_t idx(std::size_t a, std::size_t c) const { return a + A_.size() * c; }
    std::size_t a_of(std::size_t i) const { return i % A_.size(); }
    std::size_t c_of(std::size_t i) const { return i / A_.size(); }
    std::size_t index(const GroupElement& g) const;
    GroupElement element(std::size_t i) const;

    std::size_t identity() const { return 0; }
    std::size_t mul(std::size_t x, std::size_t y) const;
    std::size_t inv(std::size_t x) const;
    std::size_t commutator(std::size_t x, std::size_t y) const;
    std::size_t pow(std::size_t x, int64_t k) const;

    int64_t element_order(std::size_t x) const;

    /// The unique square root in an odd-order group, x^((ord(x)+1)/2).
    std::size_t half_element(std::size_t x) const;

    std::vector<std::size_t> center_of() const;

    /// Orbit partition under conjugation; classes ordered by their least
    /// element index, which is also the representative.
    const std::vector<std::vector<std::size_t>>& conjugacy_classes() const;

    /// A generating set: the A-basis images and the C-basis lifts.
    std::vector<std::size_t> generators() const;

private:
    FinAbGroup A_, C_;
    Cocycle psi_, psi_raw_;
    bool strict_center_ = false;
    mutable std::vector<int64_t> order_cache_;
    mutable std::vector<std::vector<std::size_t>> classes_cache_;
};

/// Named example groups. heisenberg(p): order p^3; extraspecial_exp_p(p,n):
/// order p^(2n+1), exponent p; abelian(moduli); direct products via
/// direct_product(). p must be an odd prime.
Class2Group catalog_heisenberg(int64_t p);
Class2Group catalog_extraspecial_exp_p(int64_t p, int64_t n);
Class2Group catalog_abelian(const std::vector<int64_t>& moduli);
Class2Group direct_product(const Class2Group& B1, const Class2Group& B2);

/// True iff the dense element map f: B1 -> B2 satisfies
/// f(xy) = f(x)f(y) for all pairs; reports the first violating pair.
bool hom_check(const Class2Group& B1, const Class2Group& B2,
               const std::vector<std::size_t>& f,
               std::pair<std::size_t, std::size_t>* violation = nullptr);

} // namespace orbitkit
