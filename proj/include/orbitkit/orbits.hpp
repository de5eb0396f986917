#pragma once

#include <complex>

#include "orbitkit/lazard.hpp"

namespace orbitkit {

/// Invariant-factor form G of the additive group of a Lie ring, with the
/// verified inverse bijections between ring elements and G's enumeration.
struct AdditiveStructure {
    FinAbGroup G;
    std::vector<std::size_t> to_G;   // ring element index -> G element index
    std::vector<std::size_t> from_G; // G element index -> ring element index
};

/// Builds the presentation <x_i, y_j | m_i x_i = 0, m_j y_j = sigma_j>
/// (x_i the A basis, y_j the C lifts, sigma_j the accumulated cocycle sum),
/// Smith-decomposes it and verifies the bijection is an isomorphism.
AdditiveStructure additive_structure(const LieRing& ring);

/// A coadjoint orbit: sorted list of character indices (characters of G
/// are indexed by G's own element enumeration of exponent vectors).
struct Orbit {
    std::vector<std::size_t> members;
    std::size_t rep() const { return members.front(); }
    std::size_t size() const { return members.size(); }
    bool operator==(const Orbit& o) const = default;
};

/// Exact value scale * zeta(root_order)^exponent; scale 0 means zero.
struct ExactValue {
    int64_t scale = 0;
    int64_t root_order = 1;
    int64_t exponent = 0;
};

std::complex<double> to_complex(const ExactValue& v);

/// The orbit method pipeline for one group: Lie ring, additive structure,
/// characters, adjoint/coadjoint actions and coadjoint orbits.
class OrbitMethod {
public:
    explicit OrbitMethod(Class2Group B);

    const Class2Group& group() const { return B_; }
    const LieRing& ring() const { return ring_; }
    const AdditiveStructure& structure() const { return as_; }

    /// Order of the roots of unity all character values live in.
    int64_t root_order() const { return as_.G.exponent() == 1 ? 1 : as_.G.exponent(); }

    std::size_t character_count() const { return as_.G.size(); }

    /// Exponent k of chi(l) = zeta^k, evaluated at a ring element.
    int64_t eval(std::size_t chi, std::size_t lie_elt) const;

    /// Ad(b)(l) = l + [b,l].
    std::size_t ad(std::size_t b, std::size_t l) const;
    /// Ad(b)(l) = L(b l b^-1), via group conjugation.
    std::size_t ad_conjugation(std::size_t b, std::size_t l) const;

    /// Ad*(b)(chi), exactly on exponent vectors.
    std::size_t coad(std::size_t b, std::size_t chi) const;

    const std::vector<Orbit>& orbits() const;
    std::size_t orbit_of(std::size_t chi) const;

    /// Stabilizer via the bilinear condition chi([b,l]) = 1 on Lie
    /// generators.
    std::vector<std::size_t> stabilizer(std::size_t chi) const;
    /// Stabilizer by direct fixed-point test coad(b,chi) = chi.
    std::vector<std::size_t> stabilizer_naive(std::size_t chi) const;

    bool in_stabilizer(std::size_t b, std::size_t chi) const;

    /// n with n^2 = #orbit; throws NotPerfectSquare.
    static int64_t orbit_dimension(const Orbit& orbit);

    /// Value of the irreducible character labeled by the orbit:
    /// n * chi(b) on the stabilizer of the representative, 0 elsewhere.
    ExactValue orbit_character(const Orbit& orbit, std::size_t b) const;

    /// {-chi : chi in orbit}.
    Orbit dual_orbit(const Orbit& orbit) const;

    std::size_t count_ad_orbits() const;

    /// Asserts #(Ad*-orbits) = #(Ad-orbits) = #(conjugacy classes);
    /// throws CountMismatch.
    void duality_count_check() const;

private:
    Class2Group B_;
    LieRing ring_;
    AdditiveStructure as_;
    mutable std::vector<Orbit> orbits_;
    mutable std::vector<std::size_t> orbit_index_;
};

} // namespace orbitkit
