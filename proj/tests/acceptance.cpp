// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] is the path to the CLI binary (used by criteria 8 and 9).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "orbitkit/errors.hpp"
#include "orbitkit/groupalg.hpp"
#include "orbitkit/groupspec.hpp"
#include "orbitkit/oracle.hpp"

using namespace orbitkit;
using nlohmann::json;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<void()>& body) {
    try {
        body();
        std::printf("PASS  criterion %d: %s\n", n, what.c_str());
    } catch (const std::exception& e) {
        std::printf("FAIL  criterion %d: %s -- %s\n", n, what.c_str(), e.what());
        ++failures;
    }
    std::fflush(stdout);
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

std::vector<Class2Group> small_catalog() {
    std::vector<Class2Group> out;
    for (const auto& e : catalog_entries())
        if (e.order <= 243) out.push_back(e.build());
    return out;
}

// Random validated cocycles with |C| <= 81: bilinear forms, carry cocycles
// and coboundary shifts of both, over odd moduli.
std::vector<Cocycle> random_cocycles(std::size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int64_t>> c_shapes = {{3}, {9}, {3, 3}, {27}, {3, 9}, {3, 3, 3},
                                                  {81}, {9, 9}, {3, 27}, {3, 3, 9}};
    std::vector<std::vector<int64_t>> a_shapes = {{3}, {9}, {3, 3}, {27}, {5}, {15}};
    std::vector<Cocycle> out;
    while (out.size() < count) {
        const auto& cm = c_shapes[rng() % c_shapes.size()];
        FinAbGroup C(cm);
        Cocycle psi;
        if (rng() % 4 == 0 && cm.size() == 1) {
            psi = carry_cocycle(cm[0]);
        } else {
            const auto& am = a_shapes[rng() % a_shapes.size()];
            FinAbGroup A(am);
            BilinearMatrix M(cm.size(), std::vector<Coords>(cm.size(), Coords(am.size(), 0)));
            for (std::size_t i = 0; i < cm.size(); ++i)
                for (std::size_t j = 0; j < cm.size(); ++j)
                    for (std::size_t k = 0; k < am.size(); ++k) {
                        // keep the form well defined modulo both C moduli
                        int64_t step = am[k] / std::gcd(am[k], std::gcd(cm[i], cm[j]));
                        int64_t slots = am[k] / step;
                        M[i][j][k] = step * static_cast<int64_t>(rng() % slots);
                    }
            psi = from_bilinear(C, A, M);
        }
        if (rng() % 2) {
            Chain q(psi.C.size());
            for (auto& v : q) v = static_cast<uint32_t>(rng() % psi.A.size());
            psi = add_coboundary(psi, q);
        }
        if (!validate_cocycle(psi)) throw std::runtime_error("generator produced a non-cocycle");
        out.push_back(std::move(psi));
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& cli, const std::string& args) {
    std::string cmd = cli + " " + args + " > /dev/null 2> /dev/null";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "L_c/E_c round-trip on catalog and 100 random cocycles", [] {
        std::vector<Cocycle> pool;
        for (const auto& e : catalog_entries()) pool.push_back(e.build().psi());
        for (Cocycle& psi : random_cocycles(100, 20240817)) pool.push_back(std::move(psi));
        for (const Cocycle& raw : pool) {
            Cocycle psi = center(raw); // L_c is defined on centered cocycles
            auto [phi, eta] = L_c(psi);
            require(E_c(phi, eta) == psi, "E_c(L_c(psi)) != psi");
            auto [phi2, eta2] = L_c(E_c(phi, eta));
            require(phi2 == phi && eta2 == eta, "L_c(E_c(phi,eta)) != (phi,eta)");
        }
    });

    criterion(2, "E_ring(L_group(B)) = B on all catalog groups of order <= 243", [] {
        for (const Class2Group& B : small_catalog()) {
            Class2Group B2 = E_ring(L_group(B));
            for (std::size_t x = 0; x < B.size(); ++x)
                for (std::size_t y = 0; y < B.size(); ++y)
                    require(B2.mul(x, y) == B.mul(x, y), "multiplication tables differ");
        }
    });

    criterion(3, "group/Lie identity suite, exhaustive at 27/125/243, sampled at 343", [] {
        for (const Class2Group& B : {catalog_heisenberg(3), catalog_heisenberg(5),
                                     catalog_extraspecial_exp_p(3, 2)}) {
            IdentityReport r = lemma_identities(B);
            require(r.passed && r.pairs_checked == B.size() * B.size(),
                    "exhaustive identity check failed: " + r.failed_identity);
        }
        IdentityReport r =
            lemma_identities(catalog_heisenberg(7), /*pair_budget=*/300 * 300,
                             /*samples=*/100000, 20240817);
        require(r.passed && r.pairs_checked == 100000,
                "sampled identity check failed: " + r.failed_identity);
    });

    criterion(4, "orbit/class count chain; heisenberg(p) count = p^2+p-1", [] {
        for (const Class2Group& B : small_catalog()) OrbitMethod(B).duality_count_check();
        for (int64_t p : {3, 5, 7}) {
            OrbitMethod om(catalog_heisenberg(p));
            om.duality_count_check();
            require(om.orbits().size() == static_cast<std::size_t>(p * p + p - 1),
                    "heisenberg(" + std::to_string(p) + ") orbit count is wrong");
        }
    });

    criterion(5, "orbit sizes are perfect squares partitioning |B|", [] {
        for (const Class2Group& B : small_catalog()) {
            OrbitMethod om(B);
            int64_t total = 0;
            for (const Orbit& o : om.orbits()) {
                int64_t n = OrbitMethod::orbit_dimension(o);
                total += n * n;
            }
            require(total == B.order(), "orbit sizes do not sum to |B|");
        }
        OrbitMethod om(catalog_heisenberg(3));
        std::size_t ones = 0, nines = 0;
        for (const Orbit& o : om.orbits()) {
            if (o.size() == 1) ++ones;
            if (o.size() == 9) ++nines;
        }
        require(ones == 9 && nines == 2 && om.orbits().size() == 11,
                "heisenberg(3) orbit size profile is not {9x1, 2x9}");
    });

    criterion(6, "orbit-method tables match the class-sum oracle within 1e-6", [] {
        for (const char* name :
             {"heisenberg:3", "heisenberg:5", "extraspecial_exp_p:3,2", "abelian:[3,9]"}) {
            Class2Group B = catalog_by_name(name);
            OrbitMethod om(B);
            MatchReport m = match_tables(om, burnside_table(B, 20240817));
            require(m.max_deviation < 1e-6, std::string(name) + ": deviation too large");
        }
    });

    criterion(7, "group-algebra theorem at |B| = 27", [] {
        OrbitMethod om(catalog_heisenberg(3));
        GroupAlgebra alg(om);
        alg.check_gram_identity();
        for (std::size_t b = 0; b < 27; ++b)
            for (std::size_t chi = 0; chi < 27; ++chi) {
                alg.left_action(b, chi);   // throws on closed-form mismatch
                alg.right_action(chi, b);
            }
        require(om.orbits().size() == 11, "expected 11 orbits");
        for (const Orbit& o : om.orbits()) {
            alg.verify_ideal(o);
            for (std::size_t g = 0; g < 27; ++g) (void)alg.regular_trace(o, g);
        }
    });

    criterion(8, "even-order specs are rejected (exit code 3 from the CLI)", [&] {
        // dihedral and quaternion groups of order 8 as central extensions
        json d8 = {{"A", {2}},
                   {"C", {2, 2}},
                   {"psi", {{"kind", "bilinear"}, {"matrix", {{{0}, {1}}, {{0}, {0}}}}}}};
        json q8 = {{"A", {2}},
                   {"C", {2, 2}},
                   {"psi", {{"kind", "bilinear"}, {"matrix", {{{1}, {1}}, {{0}, {1}}}}}}};
        for (const json& spec : {d8, q8}) {
            Class2Group B = parse_group_spec(spec);
            require(B.order() == 8, "expected an order-8 group");
            try {
                (void)L_group(B);
                require(false, "L_group accepted an even-order group");
            } catch (const NotTwoDivisible&) {
            }
        }
        try {
            (void)equalize(carry_cocycle(2));
            require(false, "equalize accepted A = [2]");
        } catch (const NotTwoDivisible&) {
        }
        require(!cli.empty(), "CLI path missing (argv[1])");
        std::string spec_file = "acceptance_d8.json";
        std::ofstream(spec_file) << d8.dump();
        require(run_cli(cli, "chartable " + spec_file) == 3, "CLI exit code is not 3");
        std::remove(spec_file.c_str());
    });

    criterion(9, "verify --suite all on heisenberg:5 is byte-identical across runs", [&] {
        require(!cli.empty(), "CLI path missing (argv[1])");
        require(run_cli(cli, "verify heisenberg:5 --suite all --out acceptance_run1.json") == 0,
                "first verify run failed");
        require(run_cli(cli, "verify heisenberg:5 --suite all --out acceptance_run2.json") == 0,
                "second verify run failed");
        std::string a = slurp("acceptance_run1.json"), b = slurp("acceptance_run2.json");
        std::remove("acceptance_run1.json");
        std::remove("acceptance_run2.json");
        require(!a.empty() && a == b, "verify reports differ between runs");
    });

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures ? 1 : 0;
}
