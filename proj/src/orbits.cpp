#include "orbitkit/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace orbitkit {

std::complex<double> to_complex(const ExactValue& v) {
    if (v.scale == 0) return {0.0, 0.0};
    double arg = 2.0 * std::numbers::pi * static_cast<double>(v.exponent) /
                 static_cast<double>(v.root_order);
    return static_cast<double>(v.scale) * std::complex<double>(std::cos(arg), std::sin(arg));
}

AdditiveStructure additive_structure(const LieRing& ring) {
    const FinAbGroup& A = ring.A();
    const FinAbGroup& C = ring.C();
    const std::size_t k = A.rank(), r = C.rank(), n = k + r;

    Presentation p;
    p.n_gens = n;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<int64_t> row(n, 0);
        row[i] = A.moduli()[i];
        p.relations.push_back(std::move(row));
    }
    // m_j * (0, f_j) = (sigma_j, 0) in the ring, so m_j y_j - sigma_j = 0
    std::vector<std::size_t> y_gen(r);
    for (std::size_t j = 0; j < r; ++j) {
        Coords f = C.zero();
        f[j] = 1;
        y_gen[j] = ring.idx(0, C.index(f));
        std::size_t s = ring.scaled(C.moduli()[j], y_gen[j]);
        if (ring.c_of(s) != 0)
            throw InternalPresentationError("order relation has nonzero C part");
        Coords sigma = A.coords(ring.a_of(s));
        std::vector<int64_t> row(n, 0);
        for (std::size_t i = 0; i < k; ++i) row[i] = -sigma[i];
        row[k + j] = C.moduli()[j];
        p.relations.push_back(std::move(row));
    }

    SmithDecomposition sd = smith_decompose(p);
    if (sd.group.order() != ring.order())
        throw InternalPresentationError("presented group order does not match the ring");

    AdditiveStructure out;
    out.G = sd.group;
    out.to_G.assign(ring.size(), 0);
    out.from_G.assign(ring.size(), 0);

    // rho(c): the A part accumulated when composing the C lifts
    std::vector<char> hit(ring.size(), 0);
    for (std::size_t ci = 0; ci < C.size(); ++ci) {
        Coords c = C.coords(ci);
        std::size_t lift = ring.zero();
        for (std::size_t j = 0; j < r; ++j) lift = ring.add(lift, ring.scaled(c[j], y_gen[j]));
        if (ring.c_of(lift) != ci) throw InternalPresentationError("lift has wrong C part");
        Coords rho = A.coords(ring.a_of(lift));
        for (std::size_t ai = 0; ai < A.size(); ++ai) {
            Coords alpha = A.sub(A.coords(ai), rho);
            std::vector<int64_t> pres(n, 0);
            for (std::size_t i = 0; i < k; ++i) pres[i] = alpha[i];
            for (std::size_t j = 0; j < r; ++j) pres[k + j] = c[j];
            std::size_t g = out.G.index(sd.forward(pres));
            std::size_t l = ring.idx(ai, ci);
            out.to_G[l] = g;
            if (hit[g]) throw InternalPresentationError("coordinate map is not injective");
            hit[g] = 1;
            out.from_G[g] = l;
        }
    }
    // verified isomorphism: additivity on all pairs
    for (std::size_t x = 0; x < ring.size(); ++x)
        for (std::size_t y = 0; y < ring.size(); ++y)
            if (out.to_G[ring.add(x, y)] !=
                out.G.add_idx(out.to_G[x], out.to_G[y]))
                throw InternalPresentationError("coordinate map is not additive");
    return out;
}

OrbitMethod::OrbitMethod(Class2Group B)
    : B_(std::move(B)), ring_(L_group(B_)), as_(additive_structure(ring_)) {}

int64_t OrbitMethod::eval(std::size_t chi, std::size_t lie_elt) const {
    return character_exponent(as_.G, as_.G.coords(chi), as_.G.coords(as_.to_G[lie_elt]));
}

std::size_t OrbitMethod::ad(std::size_t b, std::size_t l) const {
    return ring_.add(l, ring_.bracket(b, l));
}

std::size_t OrbitMethod::ad_conjugation(std::size_t b, std::size_t l) const {
    return B_.mul(B_.mul(b, l), B_.inv(b));
}

std::size_t OrbitMethod::coad(std::size_t b, std::size_t chi) const {
    const FinAbGroup& G = as_.G;
    const int64_t e = G.exponent();
    Coords t(G.rank());
    for (std::size_t j = 0; j < G.rank(); ++j) {
        Coords unit = G.zero();
        unit[j] = 1;
        std::size_t l = as_.from_G[G.index(unit)];
        std::size_t moved = ring_.sub(l, ring_.bracket(b, l));
        int64_t kexp = eval(chi, moved);
        int64_t m = G.moduli()[j];
        // chi'(u_j) has order dividing m_j, so kexp * m_j is divisible by e
        if ((kexp * m) % e != 0)
            throw InternalPresentationError("coadjoint image is not a character");
        t[j] = ((kexp * m / e) % m + m) % m;
    }
    return G.index(t);
}

const std::vector<Orbit>& OrbitMethod::orbits() const {
    if (!orbits_.empty() || character_count() == 0) return orbits_;
    const std::size_t n = character_count();
    std::vector<std::size_t> gens = B_.generators();
    orbit_index_.assign(n, SIZE_MAX);
    for (std::size_t seed = 0; seed < n; ++seed) {
        if (orbit_index_[seed] != SIZE_MAX) continue;
        std::vector<std::size_t> members{seed};
        orbit_index_[seed] = orbits_.size();
        for (std::size_t head = 0; head < members.size(); ++head)
            for (std::size_t g : gens) {
                std::size_t img = coad(g, members[head]);
                if (orbit_index_[img] == SIZE_MAX) {
                    orbit_index_[img] = orbits_.size();
                    members.push_back(img);
                }
            }
        std::sort(members.begin(), members.end());
        orbits_.push_back(Orbit{std::move(members)});
    }
    return orbits_;
}

std::size_t OrbitMethod::orbit_of(std::size_t chi) const {
    orbits();
    return orbit_index_[chi];
}

bool OrbitMethod::in_stabilizer(std::size_t b, std::size_t chi) const {
    for (std::size_t l : B_.generators())
        if (eval(chi, ring_.bracket(b, l)) != 0) return false;
    return true;
}

std::vector<std::size_t> OrbitMethod::stabilizer(std::size_t chi) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < B_.size(); ++b)
        if (in_stabilizer(b, chi)) out.push_back(b);
    return out;
}

std::vector<std::size_t> OrbitMethod::stabilizer_naive(std::size_t chi) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < B_.size(); ++b)
        if (coad(b, chi) == chi) out.push_back(b);
    return out;
}

int64_t OrbitMethod::orbit_dimension(const Orbit& orbit) {
    auto s = static_cast<int64_t>(orbit.size());
    auto n = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(s))));
    if (n * n != s) throw NotPerfectSquare("orbit size " + std::to_string(s));
    return n;
}

ExactValue OrbitMethod::orbit_character(const Orbit& orbit, std::size_t b) const {
    std::size_t chi = orbit.rep();
    if (!in_stabilizer(b, chi)) return {0, root_order(), 0};
    return {orbit_dimension(orbit), root_order(), eval(chi, b)};
}

Orbit OrbitMethod::dual_orbit(const Orbit& orbit) const {
    Orbit out;
    out.members.reserve(orbit.size());
    for (std::size_t chi : orbit.members) out.members.push_back(as_.G.neg_idx(chi));
    std::sort(out.members.begin(), out.members.end());
    return out;
}

std::size_t OrbitMethod::count_ad_orbits() const {
    const std::size_t n = ring_.size();
    std::vector<std::size_t> gens = B_.generators();
    std::vector<char> seen(n, 0);
    std::size_t count = 0;
    for (std::size_t seed = 0; seed < n; ++seed) {
        if (seen[seed]) continue;
        ++count;
        std::vector<std::size_t> stack{seed};
        seen[seed] = 1;
        while (!stack.empty()) {
            std::size_t l = stack.back();
            stack.pop_back();
            for (std::size_t g : gens) {
                std::size_t img = ad(g, l);
                if (!seen[img]) {
                    seen[img] = 1;
                    stack.push_back(img);
                }
            }
        }
    }
    return count;
}

void OrbitMethod::duality_count_check() const {
    std::size_t coad_count = orbits().size();
    std::size_t ad_count = count_ad_orbits();
    std::size_t classes = B_.conjugacy_classes().size();
    if (coad_count != ad_count || ad_count != classes)
        throw CountMismatch("orbit counts disagree: coadjoint " + std::to_string(coad_count) +
                            ", adjoint " + std::to_string(ad_count) + ", conjugacy classes " +
                            std::to_string(classes));
}

} // namespace orbitkit
