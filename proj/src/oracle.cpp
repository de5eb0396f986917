#include "orbitkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace orbitkit {

namespace {

constexpr int64_t kOracleBudget = 2187; // 3^7

struct ClassData {
    std::vector<std::vector<std::size_t>> classes; // ordered by (size, rep)
    std::vector<std::size_t> of_element;
};

ClassData class_data(const Class2Group& B) {
    ClassData cd;
    cd.classes = B.conjugacy_classes();
    std::stable_sort(cd.classes.begin(), cd.classes.end(),
                     [](const auto& a, const auto& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a.front() < b.front();
                     });
    cd.of_element.assign(B.size(), 0);
    for (std::size_t k = 0; k < cd.classes.size(); ++k)
        for (std::size_t x : cd.classes[k]) cd.of_element[x] = k;
    return cd;
}

} // namespace

OracleTable burnside_table(const Class2Group& B, uint64_t seed) {
    if (B.order() > kOracleBudget)
        throw BudgetExceeded("oracle class computations capped at |B| <= 3^7");
    const std::size_t n = B.size();
    ClassData cd = class_data(B);
    const std::size_t r = cd.classes.size();

    // a[i][j][k]: number of (x,y) in C_i x C_j with x y = rep_k; computed
    // from pair counts with product anywhere in C_k
    std::vector<Eigen::MatrixXd> M(r, Eigen::MatrixXd::Zero(static_cast<long>(r),
                                                            static_cast<long>(r)));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t x : cd.classes[i])
            for (std::size_t y = 0; y < n; ++y) {
                std::size_t j = cd.of_element[y];
                std::size_t k = cd.of_element[B.mul(x, y)];
                M[i](static_cast<long>(j), static_cast<long>(k)) += 1.0;
            }
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                M[i](static_cast<long>(j), static_cast<long>(k)) /=
                    static_cast<double>(cd.classes[k].size());
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    Eigen::MatrixXcd vectors;
    bool ok = false;
    for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(static_cast<long>(r), static_cast<long>(r));
        for (std::size_t i = 0; i < r; ++i) T += unif(rng) * M[i];
        Eigen::EigenSolver<Eigen::MatrixXd> es(T);
        if (es.info() != Eigen::Success) continue;
        // require well-separated eigenvalues so eigenvectors are the
        // one-dimensional common eigenspaces
        Eigen::VectorXcd ev = es.eigenvalues();
        double scale = ev.cwiseAbs().maxCoeff() + 1.0;
        bool separated = true;
        for (long i = 0; i < ev.size() && separated; ++i)
            for (long j = i + 1; j < ev.size() && separated; ++j)
                if (std::abs(ev(i) - ev(j)) < 1e-7 * scale) separated = false;
        if (!separated) continue;
        vectors = es.eigenvectors();
        ok = true;
    }
    if (!ok) throw DegenerateSpectrum("no spectral separation after 8 retries");

    OracleTable out;
    out.class_reps.reserve(r);
    out.class_sizes.reserve(r);
    for (const auto& cls : cd.classes) {
        out.class_reps.push_back(cls.front());
        out.class_sizes.push_back(cls.size());
    }

    // identity class is the first (size 1, representative 0)
    for (std::size_t row = 0; row < r; ++row) {
        Eigen::VectorXcd v = vectors.col(static_cast<long>(row));
        // M_i v = omega_i v with omega the central character; normalize so
        // omega(identity class) = 1
        if (std::abs(v(0)) < 1e-12) throw DegenerateSpectrum("eigenvector vanishes at identity");
        v /= v(0);
        double s = 0.0;
        for (std::size_t k = 0; k < r; ++k)
            s += std::norm(v(static_cast<long>(k))) / static_cast<double>(cd.classes[k].size());
        double d = std::sqrt(static_cast<double>(B.order()) / s);
        auto degree = static_cast<int64_t>(std::llround(d));
        if (std::abs(d - static_cast<double>(degree)) > 1e-6)
            throw DegenerateSpectrum("non-integral degree from central character");
        std::vector<std::complex<double>> chi(r);
        for (std::size_t k = 0; k < r; ++k)
            chi[k] = v(static_cast<long>(k)) * d / static_cast<double>(cd.classes[k].size());
        out.characters.push_back(std::move(chi));
        out.degrees.push_back(degree);
    }

    // canonical row order: ascending degree, then lexicographic on values
    // rounded to 1e-6
    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i < r; ++i) perm[i] = i;
    auto key = [&](std::size_t i) {
        std::vector<std::pair<int64_t, int64_t>> rounded;
        rounded.reserve(r);
        for (const auto& c : out.characters[i])
            rounded.emplace_back(static_cast<int64_t>(std::llround(c.real() * 1e6)),
                                 static_cast<int64_t>(std::llround(c.imag() * 1e6)));
        return rounded;
    };
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (out.degrees[a] != out.degrees[b]) return out.degrees[a] < out.degrees[b];
        return key(a) < key(b);
    });
    OracleTable sorted;
    sorted.class_reps = out.class_reps;
    sorted.class_sizes = out.class_sizes;
    for (std::size_t i : perm) {
        sorted.characters.push_back(out.characters[i]);
        sorted.degrees.push_back(out.degrees[i]);
    }

    // self-checks: row orthogonality with class-size weights, sum of
    // squared degrees
    int64_t sum_sq = 0;
    for (int64_t d : sorted.degrees) sum_sq += d * d;
    if (sum_sq != B.order()) throw DegenerateSpectrum("degrees fail sum-of-squares");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            std::complex<double> ip = 0.0;
            for (std::size_t k = 0; k < r; ++k)
                ip += static_cast<double>(sorted.class_sizes[k]) * sorted.characters[i][k] *
                      std::conj(sorted.characters[j][k]);
            ip /= static_cast<double>(B.order());
            double target = (i == j) ? 1.0 : 0.0;
            if (std::abs(ip - target) > 1e-9)
                throw DegenerateSpectrum("oracle rows fail orthogonality");
        }
    return sorted;
}

MatchReport match_tables(const OrbitMethod& om, const OracleTable& oracle) {
    const auto& orbits = om.orbits();
    const std::size_t r = oracle.class_reps.size();
    if (orbits.size() != r)
        throw NoBijection("orbit count differs from oracle irreducible count");

    // orbit rows in canonical order: ascending size, then representative
    std::vector<std::size_t> order(orbits.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (orbits[a].size() != orbits[b].size()) return orbits[a].size() < orbits[b].size();
        return orbits[a].rep() < orbits[b].rep();
    });

    MatchReport report;
    report.orbit_to_oracle.assign(orbits.size(), SIZE_MAX);
    std::vector<char> used(r, 0);
    for (std::size_t oi : order) {
        std::vector<std::complex<double>> row(r);
        for (std::size_t k = 0; k < r; ++k)
            row[k] = to_complex(om.orbit_character(orbits[oi], oracle.class_reps[k]));
        std::size_t best = SIZE_MAX;
        double best_dev = 0.0;
        for (std::size_t cand = 0; cand < r; ++cand) {
            if (used[cand]) continue;
            double dev = 0.0;
            for (std::size_t k = 0; k < r; ++k)
                dev = std::max(dev, std::abs(row[k] - oracle.characters[cand][k]));
            if (dev < 1e-6) {
                if (best != SIZE_MAX) throw NoBijection("orbit row matches two oracle rows");
                best = cand;
                best_dev = dev;
            }
        }
        if (best == SIZE_MAX) throw NoBijection("orbit row matches no oracle row");
        used[best] = 1;
        report.orbit_to_oracle[oi] = best;
        report.max_deviation = std::max(report.max_deviation, best_dev);
    }
    return report;
}

} // namespace orbitkit
