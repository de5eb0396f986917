#include "orbitkit/nilgroup.hpp"

#include <algorithm>

namespace orbitkit {

Class2Group::Class2Group(FinAbGroup A, FinAbGroup C, Cocycle psi, bool strict_center)
    : A_(std::move(A)), C_(std::move(C)), psi_raw_(std::move(psi)),
      strict_center_(strict_center) {
    if (!(psi_raw_.A == A_) || !(psi_raw_.C == C_))
        throw InvalidSpec("cocycle groups do not match the extension data");
    TripleViolation v;
    if (!validate_cocycle(psi_raw_, &v))
        throw InvalidSpec("cocycle identity fails at triple (" + std::to_string(v.c1) + "," +
                          std::to_string(v.c2) + "," + std::to_string(v.c3) + ")");
    psi_ = center(psi_raw_);
    if (strict_center_) {
        if (!is_nondegenerate(psi_))
            throw CenterMismatch("strict_center: cocycle is degenerate, center exceeds A");
    }
}

std::size_t Class2Group::index(const GroupElement& g) const {
    return idx(A_.index(g.a), C_.index(g.c));
}

GroupElement Class2Group::element(std::size_t i) const {
    return {A_.coords(a_of(i)), C_.coords(c_of(i))};
}

std::size_t Class2Group::mul(std::size_t x, std::size_t y) const {
    std::size_t c1 = c_of(x), c2 = c_of(y);
    std::size_t a = A_.add_idx(A_.add_idx(a_of(x), a_of(y)), psi_.at(c1, c2));
    return idx(a, C_.add_idx(c1, c2));
}

std::size_t Class2Group::inv(std::size_t x) const {
    // (-a - psi(c,-c) - psi(0,0), -c); psi is centered so psi(0,0) = 0
    std::size_t c = c_of(x), nc = C_.neg_idx(c);
    std::size_t a = A_.neg_idx(A_.add_idx(a_of(x), psi_.at(c, nc)));
    return idx(a, nc);
}

std::size_t Class2Group::commutator(std::size_t x, std::size_t y) const {
    return mul(mul(x, y), mul(inv(x), inv(y)));
}

std::size_t Class2Group::pow(std::size_t x, int64_t k) const {
    if (k < 0) return pow(inv(x), -k);
    std::size_t acc = identity();
    std::size_t base = x;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

int64_t Class2Group::element_order(std::size_t x) const {
    if (order_cache_.empty()) order_cache_.assign(size(), 0);
    if (order_cache_[x] != 0) return order_cache_[x];
    int64_t n = 1;
    std::size_t acc = x;
    while (acc != identity()) {
        acc = mul(acc, x);
        ++n;
    }
    order_cache_[x] = n;
    return n;
}

std::size_t Class2Group::half_element(std::size_t x) const {
    if (order() % 2 == 0) throw NotTwoRootable("half_element: group has even order");
    return pow(x, (element_order(x) + 1) / 2);
}

std::vector<std::size_t> Class2Group::center_of() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x) {
        bool central = true;
        for (std::size_t y = 0; y < size() && central; ++y)
            if (mul(x, y) != mul(y, x)) central = false;
        if (central) out.push_back(x);
    }
    return out;
}

const std::vector<std::vector<std::size_t>>& Class2Group::conjugacy_classes() const {
    if (!classes_cache_.empty()) return classes_cache_;
    std::vector<char> seen(size(), 0);
    for (std::size_t x = 0; x < size(); ++x) {
        if (seen[x]) continue;
        std::vector<std::size_t> cls;
        for (std::size_t g = 0; g < size(); ++g) {
            std::size_t y = mul(mul(g, x), inv(g));
            if (!seen[y]) {
                seen[y] = 1;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_cache_.push_back(std::move(cls));
    }
    return classes_cache_;
}

std::vector<std::size_t> Class2Group::generators() const {
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < A_.rank(); ++i) {
        Coords e = A_.zero();
        e[i] = 1;
        gens.push_back(idx(A_.index(e), 0));
    }
    for (std::size_t j = 0; j < C_.rank(); ++j) {
        Coords e = C_.zero();
        e[j] = 1;
        gens.push_back(idx(0, C_.index(e)));
    }
    return gens;
}

namespace {

void require_odd_prime(int64_t p) {
    if (p == 2) throw EvenPrime("catalog groups require an odd prime");
    if (p < 3) throw InvalidSpec("catalog: p must be an odd prime >= 3");
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InvalidSpec("catalog: p must be prime");
}

} // namespace

Class2Group catalog_heisenberg(int64_t p) {
    require_odd_prime(p);
    FinAbGroup A({p}), C({p, p});
    BilinearMatrix M{{Coords{0}, Coords{1}}, {Coords{0}, Coords{0}}};
    return Class2Group(A, C, from_bilinear(C, A, M));
}

Class2Group catalog_extraspecial_exp_p(int64_t p, int64_t n) {
    require_odd_prime(p);
    if (n < 1) throw InvalidSpec("extraspecial_exp_p: n must be >= 1");
    FinAbGroup A({p});
    FinAbGroup C(std::vector<int64_t>(2 * static_cast<std::size_t>(n), p));
    // psi(c,c') = sum_i c_i c'_{n+i}; the skew part is the standard
    // symplectic form
    BilinearMatrix M(C.rank(), std::vector<Coords>(C.rank(), Coords{0}));
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
        M[i][i + static_cast<std::size_t>(n)] = Coords{1};
    return Class2Group(A, C, from_bilinear(C, A, M));
}

Class2Group catalog_abelian(const std::vector<int64_t>& moduli) {
    FinAbGroup A(moduli), C;
    return Class2Group(A, C, Cocycle(C, A));
}

Class2Group direct_product(const Class2Group& B1, const Class2Group& B2) {
    std::vector<int64_t> am = B1.A().moduli(), cm = B1.C().moduli();
    am.insert(am.end(), B2.A().moduli().begin(), B2.A().moduli().end());
    cm.insert(cm.end(), B2.C().moduli().begin(), B2.C().moduli().end());
    FinAbGroup A(am), C(cm);
    Cocycle psi(C, A);
    const std::size_t r1 = B1.C().rank();
    for (std::size_t c1 = 0; c1 < C.size(); ++c1) {
        Coords x = C.coords(c1);
        Coords x1(x.begin(), x.begin() + static_cast<long>(r1));
        Coords x2(x.begin() + static_cast<long>(r1), x.end());
        for (std::size_t c2 = 0; c2 < C.size(); ++c2) {
            Coords y = C.coords(c2);
            Coords y1(y.begin(), y.begin() + static_cast<long>(r1));
            Coords y2(y.begin() + static_cast<long>(r1), y.end());
            Coords a1 = B1.A().coords(B1.psi().at(B1.C().index(x1), B1.C().index(y1)));
            Coords a2 = B2.A().coords(B2.psi().at(B2.C().index(x2), B2.C().index(y2)));
            Coords a = a1;
            a.insert(a.end(), a2.begin(), a2.end());
            psi.set(c1, c2, static_cast<uint32_t>(A.index(a)));
        }
    }
    return Class2Group(A, C, psi);
}

bool hom_check(const Class2Group& B1, const Class2Group& B2,
               const std::vector<std::size_t>& f,
               std::pair<std::size_t, std::size_t>* violation) {
    if (f.size() != B1.size()) throw DimensionMismatch("hom_check: map has wrong domain size");
    for (std::size_t x = 0; x < B1.size(); ++x)
        for (std::size_t y = 0; y < B1.size(); ++y)
            if (f[B1.mul(x, y)] != B2.mul(f[x], f[y])) {
                if (violation) *violation = {x, y};
                return false;
            }
    return true;
}

} // namespace orbitkit
