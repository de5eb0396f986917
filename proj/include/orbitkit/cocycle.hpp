#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "orbitkit/abelian.hpp"

namespace orbitkit {

/// Dense 2-cocycle psi: C x C -> A. Entries are stored as A element
/// indices in the canonical enumeration of C x C.
struct Cocycle {
    FinAbGroup C;
    FinAbGroup A;
    std::vector<uint32_t> table; // |C|^2 entries, table[c1 + |C| * c2]

    Cocycle() = default;
    Cocycle(FinAbGroup C_, FinAbGroup A_);

    uint32_t at(std::size_t c1, std::size_t c2) const { return table[c1 + C.size() * c2]; }
    void set(std::size_t c1, std::size_t c2, uint32_t a) { table[c1 + C.size() * c2] = a; }

    bool operator==(const Cocycle& o) const = default;
};

/// Skew-symmetric bihomomorphism eta: C x C -> A, same dense layout.
struct SkewBihom {
    FinAbGroup C;
    FinAbGroup A;
    std::vector<uint32_t> table;

    SkewBihom() = default;
    SkewBihom(FinAbGroup C_, FinAbGroup A_);

    uint32_t at(std::size_t c1, std::size_t c2) const { return table[c1 + C.size() * c2]; }
    void set(std::size_t c1, std::size_t c2, uint32_t a) { table[c1 + C.size() * c2] = a; }

    bool operator==(const SkewBihom& o) const = default;
};

/// A 1-chain q: C -> A as a dense vector of A element indices.
using Chain = std::vector<uint32_t>;

struct TripleViolation {
    std::size_t c1, c2, c3;
};

/// Exhaustive check of the cocycle identity
/// psi(c1,c2) + psi(c1+c2,c3) = psi(c1,c2+c3) + psi(c2,c3) over all triples.
/// On failure reports the lowest-index violating triple.
bool validate_cocycle(const Cocycle& psi, TripleViolation* violation = nullptr);

/// Sampled variant: checks `samples` random triples. Never a substitute for
/// the exhaustive check in verification suites.
bool validate_cocycle_sampled(const Cocycle& psi, std::size_t samples, std::mt19937& rng,
                              TripleViolation* violation = nullptr);

/// psi + coboundary of q: psi(c1,c2) + q(c1) + q(c2) - q(c1+c2).
Cocycle add_coboundary(const Cocycle& psi, const Chain& q);

/// The 1-chain whose coboundary centers psi (q(0) = -psi(0,0), 0 elsewhere).
Chain centering_chain(const Cocycle& psi);

/// Cohomologous centered cocycle: psi(0,0) = 0, hence psi(0,c) = psi(c,0) = 0.
Cocycle center(const Cocycle& psi);

/// The 1-chain used by equalize on an already-centered cocycle:
/// q(c) = -psi(c,-c)/2.
Chain equalizing_chain(const Cocycle& centered_psi);

/// Cohomologous equalized cocycle (psi(c,-c) = 0 for all c). Centers first,
/// then applies q(c) = -psi(c,-c)/2. Requires A of odd order.
Cocycle equalize(const Cocycle& psi);

bool is_centered(const Cocycle& psi);
bool is_equalized(const Cocycle& psi);
bool is_symmetric(const Cocycle& psi);

/// True iff every c1 != 0 has some c2 with psi(c1,c2) != psi(c2,c1).
bool is_nondegenerate(const Cocycle& psi);

/// Checks eta(c,c) = 0 for all c and additivity in the first argument
/// over all triples (skewness then gives additivity in the second).
bool validate_skew_bihom(const SkewBihom& eta, TripleViolation* violation = nullptr);

/// True iff every c1 != 0 has some c2 with eta(c1,c2) != 0.
bool eta_nondegenerate(const SkewBihom& eta);

/// Bilinear-form coefficients: entry (i,j) is an A-coordinate vector, so
/// psi(c,c')_k = sum_{i,j} c_i c'_j M[i][j][k] mod A.moduli()[k].
using BilinearMatrix = std::vector<std::vector<Coords>>;

/// Cocycle from a bilinear form; throws IncompatibleModuli when the form
/// is not well defined modulo the C moduli.
Cocycle from_bilinear(const FinAbGroup& C, const FinAbGroup& A, const BilinearMatrix& M);

/// Carry cocycle of the extension 0 -> Z/m -> Z/m^2 -> Z/m -> 0 on a cyclic
/// C = [m], A = [m]: psi(c1,c2) = floor((c1+c2)/m). A symmetric cocycle that
/// is not bilinear; used for nonsplit additive structures and as a test
/// generator.
Cocycle carry_cocycle(int64_t m);

} // namespace orbitkit
