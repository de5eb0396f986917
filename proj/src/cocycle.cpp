#include "orbitkit/cocycle.hpp"

namespace orbitkit {

Cocycle::Cocycle(FinAbGroup C_, FinAbGroup A_)
    : C(std::move(C_)), A(std::move(A_)), table(C.size() * C.size(), 0) {}

SkewBihom::SkewBihom(FinAbGroup C_, FinAbGroup A_)
    : C(std::move(C_)), A(std::move(A_)), table(C.size() * C.size(), 0) {}

namespace {

bool triple_holds(const Cocycle& psi, const std::vector<std::size_t>& addC,
                  std::size_t c1, std::size_t c2, std::size_t c3) {
    const std::size_t n = psi.C.size();
    std::size_t lhs = psi.A.add_idx(psi.at(c1, c2), psi.at(addC[c1 + n * c2], c3));
    std::size_t rhs = psi.A.add_idx(psi.at(c1, addC[c2 + n * c3]), psi.at(c2, c3));
    return lhs == rhs;
}

std::vector<std::size_t> add_table(const FinAbGroup& G) {
    const std::size_t n = G.size();
    std::vector<std::size_t> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i + n * j] = G.add_idx(i, j);
    return t;
}

} // namespace

bool validate_cocycle(const Cocycle& psi, TripleViolation* violation) {
    const std::size_t n = psi.C.size();
    if (psi.table.size() != n * n) throw DimensionMismatch("cocycle table has wrong size");
    auto addC = add_table(psi.C);
    for (std::size_t c1 = 0; c1 < n; ++c1)
        for (std::size_t c2 = 0; c2 < n; ++c2)
            for (std::size_t c3 = 0; c3 < n; ++c3)
                if (!triple_holds(psi, addC, c1, c2, c3)) {
                    if (violation) *violation = {c1, c2, c3};
                    return false;
                }
    return true;
}

bool validate_cocycle_sampled(const Cocycle& psi, std::size_t samples, std::mt19937& rng,
                              TripleViolation* violation) {
    const std::size_t n = psi.C.size();
    auto addC = add_table(psi.C);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t c1 = pick(rng), c2 = pick(rng), c3 = pick(rng);
        if (!triple_holds(psi, addC, c1, c2, c3)) {
            if (violation) *violation = {c1, c2, c3};
            return false;
        }
    }
    return true;
}

Cocycle add_coboundary(const Cocycle& psi, const Chain& q) {
    const std::size_t n = psi.C.size();
    if (q.size() != n) throw DimensionMismatch("1-chain has wrong length");
    Cocycle out(psi.C, psi.A);
    for (std::size_t c1 = 0; c1 < n; ++c1)
        for (std::size_t c2 = 0; c2 < n; ++c2) {
            std::size_t v = psi.A.add_idx(psi.at(c1, c2), psi.A.add_idx(q[c1], q[c2]));
            v = psi.A.sub_idx(v, q[psi.C.add_idx(c1, c2)]);
            out.set(c1, c2, static_cast<uint32_t>(v));
        }
    return out;
}

Chain centering_chain(const Cocycle& psi) {
    Chain q(psi.C.size(), 0);
    q[0] = static_cast<uint32_t>(psi.A.neg_idx(psi.at(0, 0)));
    return q;
}

Cocycle center(const Cocycle& psi) { return add_coboundary(psi, centering_chain(psi)); }

Chain equalizing_chain(const Cocycle& centered_psi) {
    if (!centered_psi.A.two_divisible())
        throw NotTwoDivisible("equalize: A has even order");
    const std::size_t n = centered_psi.C.size();
    Chain q(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t v = centered_psi.at(c, centered_psi.C.neg_idx(c));
        q[c] = static_cast<uint32_t>(centered_psi.A.neg_idx(centered_psi.A.halve_idx(v)));
    }
    return q;
}

Cocycle equalize(const Cocycle& psi) {
    Cocycle c = center(psi);
    return add_coboundary(c, equalizing_chain(c));
}

bool is_centered(const Cocycle& psi) { return psi.at(0, 0) == 0; }

bool is_equalized(const Cocycle& psi) {
    for (std::size_t c = 0; c < psi.C.size(); ++c)
        if (psi.at(c, psi.C.neg_idx(c)) != 0) return false;
    return true;
}

bool is_symmetric(const Cocycle& psi) {
    const std::size_t n = psi.C.size();
    for (std::size_t c1 = 0; c1 < n; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < n; ++c2)
            if (psi.at(c1, c2) != psi.at(c2, c1)) return false;
    return true;
}

bool is_nondegenerate(const Cocycle& psi) {
    const std::size_t n = psi.C.size();
    for (std::size_t c1 = 1; c1 < n; ++c1) {
        bool found = false;
        for (std::size_t c2 = 0; c2 < n && !found; ++c2)
            if (psi.at(c1, c2) != psi.at(c2, c1)) found = true;
        if (!found) return false;
    }
    return true;
}

bool validate_skew_bihom(const SkewBihom& eta, TripleViolation* violation) {
    const std::size_t n = eta.C.size();
    if (eta.table.size() != n * n) throw DimensionMismatch("bihomomorphism table has wrong size");
    for (std::size_t c = 0; c < n; ++c)
        if (eta.at(c, c) != 0) {
            if (violation) *violation = {c, c, c};
            return false;
        }
    for (std::size_t c1 = 0; c1 < n; ++c1)
        for (std::size_t c2 = 0; c2 < n; ++c2) {
            std::size_t s = eta.C.add_idx(c1, c2);
            for (std::size_t c3 = 0; c3 < n; ++c3)
                if (eta.at(s, c3) != eta.A.add_idx(eta.at(c1, c3), eta.at(c2, c3))) {
                    if (violation) *violation = {c1, c2, c3};
                    return false;
                }
        }
    return true;
}

bool eta_nondegenerate(const SkewBihom& eta) {
    const std::size_t n = eta.C.size();
    for (std::size_t c1 = 1; c1 < n; ++c1) {
        bool found = false;
        for (std::size_t c2 = 0; c2 < n && !found; ++c2)
            if (eta.at(c1, c2) != 0) found = true;
        if (!found) return false;
    }
    return true;
}

Cocycle from_bilinear(const FinAbGroup& C, const FinAbGroup& A, const BilinearMatrix& M) {
    const std::size_t r = C.rank();
    if (M.size() != r) throw DimensionMismatch("bilinear matrix has wrong row count");
    for (const auto& row : M) {
        if (row.size() != r) throw DimensionMismatch("bilinear matrix has wrong column count");
        for (const auto& entry : row)
            if (entry.size() != A.rank())
                throw DimensionMismatch("bilinear matrix entry has wrong A-coordinate count");
    }
    // well-definedness: m_i^C * M[i][j] and m_j^C * M[i][j] must vanish in A
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < A.rank(); ++k) {
                int64_t mk = A.moduli()[k];
                if ((C.moduli()[i] * M[i][j][k]) % mk != 0 ||
                    (C.moduli()[j] * M[i][j][k]) % mk != 0)
                    throw IncompatibleModuli("bilinear entry not well defined modulo the moduli");
            }
    Cocycle psi(C, A);
    const std::size_t n = C.size();
    for (std::size_t c1 = 0; c1 < n; ++c1) {
        Coords x = C.coords(c1);
        for (std::size_t c2 = 0; c2 < n; ++c2) {
            Coords y = C.coords(c2);
            Coords a = A.zero();
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    for (std::size_t k = 0; k < A.rank(); ++k) {
                        int64_t mk = A.moduli()[k];
                        int64_t v = ((M[i][j][k] % mk) + mk) % mk;
                        a[k] = (a[k] + (x[i] % mk) * (y[j] % mk) % mk * v) % mk;
                    }
            psi.set(c1, c2, static_cast<uint32_t>(A.index(a)));
        }
    }
    return psi;
}

Cocycle carry_cocycle(int64_t m) {
    FinAbGroup Zm({m});
    Cocycle psi(Zm, Zm);
    for (int64_t c1 = 0; c1 < m; ++c1)
        for (int64_t c2 = 0; c2 < m; ++c2)
            psi.set(static_cast<std::size_t>(c1), static_cast<std::size_t>(c2),
                    static_cast<uint32_t>((c1 + c2) / m));
    return psi;
}

} // namespace orbitkit
