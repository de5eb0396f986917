#pragma once

#include <cstdint>
#include <vector>

#include "orbitkit/errors.hpp"

namespace orbitkit {

/// Residue vector of an abelian-group element, coords[i] in [0, m_i).
using Coords = std::vector<int64_t>;

/// Finite abelian group Z/m_1 + ... + Z/m_k given by its moduli list.
///
/// Elements are enumerated in mixed-radix order with coords[0] fastest;
/// index 0 is the zero element. Every table in the library indexes group
/// elements by this enumeration.
class FinAbGroup {
public:
    FinAbGroup() = default; // trivial group, order 1
    explicit FinAbGroup(std::vector<int64_t> moduli);

    const std::vector<int64_t>& moduli() const { return moduli_; }
    std::size_t rank() const { return moduli_.size(); }
    int64_t order() const { return order_; }
    std::size_t size() const { return static_cast<std::size_t>(order_); }
    int64_t exponent() const { return exponent_; }

    /// True iff doubling is an automorphism, i.e. every modulus is odd.
    bool two_divisible() const;

    std::size_t index(const Coords& x) const;
    Coords coords(std::size_t i) const;

    Coords zero() const { return Coords(moduli_.size(), 0); }
    Coords reduce(Coords x) const;
    Coords add(const Coords& x, const Coords& y) const;
    Coords sub(const Coords& x, const Coords& y) const;
    Coords neg(const Coords& x) const;
    Coords scaled(int64_t k, const Coords& x) const;

    /// The preimage of x under a -> a+a; requires odd order.
    Coords halve(const Coords& x) const;

    // index-level arithmetic (same operations on enumeration indices)
    std::size_t add_idx(std::size_t i, std::size_t j) const;
    std::size_t sub_idx(std::size_t i, std::size_t j) const;
    std::size_t neg_idx(std::size_t i) const;
    std::size_t scaled_idx(int64_t k, std::size_t i) const;
    std::size_t halve_idx(std::size_t i) const;

    bool operator==(const FinAbGroup& o) const { return moduli_ == o.moduli_; }

private:
    void check_dim(const Coords& x) const;

    std::vector<int64_t> moduli_;
    int64_t order_ = 1;
    int64_t exponent_ = 1;
};

/// Exponent of the character labeled t at element x, as k with
/// chi_t(x) = exp(2 pi i k / exponent(G)).
int64_t character_exponent(const FinAbGroup& G, const Coords& t, const Coords& x);

/// All |G| characters of G as exponent vectors (the canonical enumeration
/// of G itself; t = 0 is the trivial character).
std::vector<Coords> all_characters(const FinAbGroup& G);

/// Abelian group presented by generators g_0..g_{n-1} and relations
/// sum_j relations[r][j] * g_j = 0.
struct Presentation {
    std::size_t n_gens = 0;
    std::vector<std::vector<int64_t>> relations;
};

/// Invariant-factor form of a presented finite abelian group, with the
/// coordinate maps between presentation generators and the Smith basis.
struct SmithDecomposition {
    FinAbGroup group;

    /// Image in `group` of an integer combination of the presentation
    /// generators.
    Coords forward(const std::vector<int64_t>& x) const;

    /// A presentation-coordinate representative of a group element;
    /// forward(backward(g)) == g.
    std::vector<int64_t> backward(const Coords& g) const;

    // forward_mat[i][j]: coefficient of generator i on invariant factor j,
    // reduced mod group.moduli()[j]. backward_mat[j][i]: presentation
    // coefficient of generator i for the j-th invariant-factor basis vector.
    std::vector<std::vector<int64_t>> forward_mat;
    std::vector<std::vector<int64_t>> backward_mat;
};

/// Smith-normal-form decomposition of the relation matrix; throws
/// InfiniteGroup when the presented group is not finite.
SmithDecomposition smith_decompose(const Presentation& p);

} // namespace orbitkit
