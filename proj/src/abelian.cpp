#include "orbitkit/abelian.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitkit {

using boost::multiprecision::cpp_int;

FinAbGroup::FinAbGroup(std::vector<int64_t> moduli) : moduli_(std::move(moduli)) {
    for (int64_t m : moduli_) {
        if (m < 2) throw InvalidSpec("FinAbGroup: modulus must be >= 2");
        order_ *= m;
        exponent_ = std::lcm(exponent_, m);
    }
}

bool FinAbGroup::two_divisible() const { return order_ % 2 == 1; }

void FinAbGroup::check_dim(const Coords& x) const {
    if (x.size() != moduli_.size())
        throw DimensionMismatch("element has wrong number of coordinates");
}

std::size_t FinAbGroup::index(const Coords& x) const {
    check_dim(x);
    std::size_t idx = 0;
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        int64_t r = ((x[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
        idx = idx * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(r);
    }
    return idx;
}

Coords FinAbGroup::coords(std::size_t i) const {
    Coords x(moduli_.size());
    for (std::size_t k = 0; k < moduli_.size(); ++k) {
        x[k] = static_cast<int64_t>(i % static_cast<std::size_t>(moduli_[k]));
        i /= static_cast<std::size_t>(moduli_[k]);
    }
    return x;
}

Coords FinAbGroup::reduce(Coords x) const {
    check_dim(x);
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        x[i] = ((x[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
    return x;
}

Coords FinAbGroup::add(const Coords& x, const Coords& y) const {
    check_dim(x);
    check_dim(y);
    Coords z(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) z[i] = (x[i] + y[i]) % moduli_[i];
    return z;
}

Coords FinAbGroup::sub(const Coords& x, const Coords& y) const {
    check_dim(x);
    check_dim(y);
    Coords z(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        z[i] = ((x[i] - y[i]) % moduli_[i] + moduli_[i]) % moduli_[i];
    return z;
}

Coords FinAbGroup::neg(const Coords& x) const {
    check_dim(x);
    Coords z(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) z[i] = (moduli_[i] - x[i]) % moduli_[i];
    return z;
}

Coords FinAbGroup::scaled(int64_t k, const Coords& x) const {
    check_dim(x);
    Coords z(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        int64_t kk = ((k % moduli_[i]) + moduli_[i]) % moduli_[i];
        z[i] = (kk * (x[i] % moduli_[i])) % moduli_[i];
    }
    return z;
}

Coords FinAbGroup::halve(const Coords& x) const {
    if (!two_divisible()) throw NotTwoDivisible("halve: group has even order");
    check_dim(x);
    Coords z(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        // (m+1)/2 is the inverse of 2 mod odd m
        z[i] = (x[i] * ((moduli_[i] + 1) / 2)) % moduli_[i];
    }
    return z;
}

std::size_t FinAbGroup::add_idx(std::size_t i, std::size_t j) const {
    return index(add(coords(i), coords(j)));
}

std::size_t FinAbGroup::sub_idx(std::size_t i, std::size_t j) const {
    return index(sub(coords(i), coords(j)));
}

std::size_t FinAbGroup::neg_idx(std::size_t i) const { return index(neg(coords(i))); }

std::size_t FinAbGroup::scaled_idx(int64_t k, std::size_t i) const {
    return index(scaled(k, coords(i)));
}

std::size_t FinAbGroup::halve_idx(std::size_t i) const { return index(halve(coords(i))); }

int64_t character_exponent(const FinAbGroup& G, const Coords& t, const Coords& x) {
    const int64_t e = G.exponent();
    int64_t k = 0;
    for (std::size_t j = 0; j < G.rank(); ++j) {
        int64_t m = G.moduli()[j];
        k = (k + ((t[j] % m) * (x[j] % m)) % m * (e / m)) % e;
    }
    return ((k % e) + e) % e;
}

std::vector<Coords> all_characters(const FinAbGroup& G) {
    std::vector<Coords> out;
    out.reserve(G.size());
    for (std::size_t i = 0; i < G.size(); ++i) out.push_back(G.coords(i));
    return out;
}

namespace {

using Mat = std::vector<std::vector<cpp_int>>;

void swap_rows(Mat& M, std::size_t i, std::size_t j) { std::swap(M[i], M[j]); }

void swap_cols(Mat& M, Mat& V, std::size_t i, std::size_t j) {
    for (auto& row : M) std::swap(row[i], row[j]);
    for (auto& row : V) std::swap(row[i], row[j]);
}

// row i -= q * row j
void row_op(Mat& M, std::size_t i, std::size_t j, const cpp_int& q) {
    for (std::size_t k = 0; k < M[i].size(); ++k) M[i][k] -= q * M[j][k];
}

// col i -= q * col j (mirrored into V)
void col_op(Mat& M, Mat& V, std::size_t i, std::size_t j, const cpp_int& q) {
    for (auto& row : M) row[i] -= q * row[j];
    for (auto& row : V) row[i] -= q * row[j];
}

void negate_col(Mat& M, Mat& V, std::size_t i) {
    for (auto& row : M) row[i] = -row[i];
    for (auto& row : V) row[i] = -row[i];
}

// Diagonalize M (m x n) by unimodular row/column operations, tracking
// column operations in V (n x n).
void diagonalize(Mat& M, Mat& V) {
    const std::size_t m = M.size();
    const std::size_t n = m ? M[0].size() : 0;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // locate a minimal-magnitude nonzero pivot in the submatrix
            std::size_t pi = t, pj = t;
            cpp_int best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (M[i][j] == 0) continue;
                    cpp_int a = abs(M[i][j]);
                    if (best == 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) break; // submatrix all zero
            if (pi != t) swap_rows(M, t, pi);
            if (pj != t) swap_cols(M, V, t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (M[i][t] == 0) continue;
                cpp_int q = M[i][t] / M[t][t];
                row_op(M, i, t, q);
                if (M[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (M[t][j] == 0) continue;
                cpp_int q = M[t][j] / M[t][t];
                col_op(M, V, j, t, q);
                if (M[t][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (M[t][t] < 0) negate_col(M, V, t);
    }
}

} // namespace

Coords SmithDecomposition::forward(const std::vector<int64_t>& x) const {
    if (x.size() != forward_mat.size())
        throw DimensionMismatch("forward: wrong presentation-coordinate count");
    Coords g(group.rank(), 0);
    for (std::size_t j = 0; j < group.rank(); ++j) {
        int64_t m = group.moduli()[j];
        int64_t s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s = (s + (((x[i] % m) + m) % m) * forward_mat[i][j]) % m;
        g[j] = s;
    }
    return g;
}

std::vector<int64_t> SmithDecomposition::backward(const Coords& g) const {
    if (g.size() != group.rank()) throw DimensionMismatch("backward: wrong coordinate count");
    std::vector<int64_t> x(forward_mat.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        int64_t s = 0;
        for (std::size_t j = 0; j < group.rank(); ++j) s += g[j] * backward_mat[j][i];
        x[i] = s;
    }
    return x;
}

SmithDecomposition smith_decompose(const Presentation& p) {
    const std::size_t n = p.n_gens;
    const std::size_t m = p.relations.size();
    Mat M(m, std::vector<cpp_int>(n, 0));
    for (std::size_t i = 0; i < m; ++i) {
        if (p.relations[i].size() != n)
            throw DimensionMismatch("relation row has wrong length");
        for (std::size_t j = 0; j < n; ++j) M[i][j] = p.relations[i][j];
    }
    Mat V(n, std::vector<cpp_int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) V[i][i] = 1;

    diagonalize(M, V);
    // enforce the divisibility chain d_t | d_{t+1}
    for (;;) {
        bool chain_ok = true;
        for (std::size_t t = 0; t + 1 < std::min(m, n) && chain_ok; ++t) {
            if (M[t][t] != 0 && M[t + 1][t + 1] % M[t][t] != 0) {
                col_op(M, V, t, t + 1, -1); // col t += col t+1
                chain_ok = false;
            }
        }
        if (chain_ok) break;
        diagonalize(M, V);
    }

    std::vector<cpp_int> diag(n, 0);
    for (std::size_t t = 0; t < n; ++t)
        if (t < m) diag[t] = M[t][t];
    for (const cpp_int& d : diag)
        if (d == 0) throw InfiniteGroup("presented group is infinite (rank-deficient relations)");

    std::vector<int64_t> moduli;
    std::vector<std::size_t> kept; // positions with d >= 2
    for (std::size_t t = 0; t < n; ++t)
        if (diag[t] >= 2) {
            moduli.push_back(static_cast<int64_t>(diag[t]));
            kept.push_back(t);
        }

    SmithDecomposition out;
    out.group = FinAbGroup(moduli);
    const int64_t E = out.group.exponent();
    const std::size_t k = kept.size();

    // x -> (x V) mod d on the kept positions
    out.forward_mat.assign(n, std::vector<int64_t>(k, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            cpp_int d = diag[kept[j]];
            cpp_int r = V[i][kept[j]] % d;
            if (r < 0) r += d;
            out.forward_mat[i][j] = static_cast<int64_t>(r);
        }

    // g -> g_full V^{-1}; entries reduced mod the group exponent
    // (the exponent annihilates every presented element).
    Mat Vinv(n, std::vector<cpp_int>(n, 0));
    {
        // integer Gauss-Jordan; V unimodular, so gcd elimination reaches
        // pivots of 1 and the inverse is integral
        Mat W = V;
        Mat I(n, std::vector<cpp_int>(n, 0));
        for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
        // bring W to identity by integer row ops (valid since det = +-1)
        for (std::size_t c = 0; c < n; ++c) {
            // gcd-style elimination below the pivot
            for (;;) {
                std::size_t pr = c;
                cpp_int best = 0;
                for (std::size_t r = c; r < n; ++r) {
                    if (W[r][c] == 0) continue;
                    cpp_int a = abs(W[r][c]);
                    if (best == 0 || a < best) {
                        best = a;
                        pr = r;
                    }
                }
                if (pr != c) {
                    std::swap(W[pr], W[c]);
                    std::swap(I[pr], I[c]);
                }
                bool done = true;
                for (std::size_t r = c + 1; r < n; ++r) {
                    if (W[r][c] == 0) continue;
                    cpp_int q = W[r][c] / W[c][c];
                    for (std::size_t j2 = 0; j2 < n; ++j2) {
                        W[r][j2] -= q * W[c][j2];
                        I[r][j2] -= q * I[c][j2];
                    }
                    if (W[r][c] != 0) done = false;
                }
                if (done) break;
            }
            if (W[c][c] < 0) {
                for (std::size_t j2 = 0; j2 < n; ++j2) {
                    W[c][j2] = -W[c][j2];
                    I[c][j2] = -I[c][j2];
                }
            }
        }
        // back-substitution; pivots are 1 because V is unimodular
        for (std::size_t c = n; c-- > 0;) {
            if (W[c][c] != 1)
                throw InternalPresentationError("V not unimodular in smith_decompose");
            for (std::size_t r = 0; r < c; ++r) {
                cpp_int q = W[r][c];
                for (std::size_t j2 = 0; j2 < n; ++j2) {
                    W[r][j2] -= q * W[c][j2];
                    I[r][j2] -= q * I[c][j2];
                }
            }
        }
        Vinv = I;
    }

    out.backward_mat.assign(k, std::vector<int64_t>(n, 0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            cpp_int r = Vinv[kept[j]][i] % E;
            if (r < 0) r += E;
            out.backward_mat[j][i] = static_cast<int64_t>(r);
        }
    return out;
}

} // namespace orbitkit
