#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitkit/groupspec.hpp"
#include "orbitkit/oracle.hpp"
#include "orbitkit/verify.hpp"

using namespace orbitkit;

namespace {

constexpr int kExitInvalidSpec = 2;
constexpr int kExitEvenOrder = 3;
constexpr int kExitClassGate = 4;
constexpr int kExitTableMismatch = 5;

uint64_t oracle_seed() {
    if (const char* env = std::getenv("ORBITKIT_SEED")) return std::strtoull(env, nullptr, 10);
    return 20240817ULL;
}

std::string format_complex(std::complex<double> z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

std::string format_exact(const ExactValue& v) {
    if (v.scale == 0) return "0";
    int64_t g = std::gcd(v.exponent, v.root_order);
    int64_t e = v.exponent == 0 ? 1 : v.root_order / g;
    int64_t k = v.exponent == 0 ? 0 : v.exponent / g;
    if (e == 1) return std::to_string(v.scale);
    return std::to_string(v.scale) + "*zeta(" + std::to_string(e) + ")^" + std::to_string(k);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

// scope gates: odd order, nilpotency class <= 2 (commutators central)
void gate(const Class2Group& B) {
    if (B.order() % 2 == 0) throw NotTwoDivisible("group has even order");
    std::vector<std::size_t> center = B.center_of();
    std::vector<char> central(B.size(), 0);
    for (std::size_t z : center) central[z] = 1;
    for (std::size_t x = 0; x < B.size(); ++x)
        for (std::size_t y = 0; y < B.size(); ++y)
            if (!central[B.commutator(x, y)])
                throw std::domain_error("nilpotency class exceeds 2");
}

std::string element_label(const Class2Group& B, std::size_t i) {
    GroupElement g = B.element(i);
    std::string s = "(";
    for (std::size_t k = 0; k < g.a.size(); ++k) s += (k ? "," : "") + std::to_string(g.a[k]);
    s += "|";
    for (std::size_t k = 0; k < g.c.size(); ++k) s += (k ? "," : "") + std::to_string(g.c[k]);
    return s + ")";
}

struct TableLayout {
    std::vector<std::size_t> orbit_order; // canonical row order
    OracleTable oracle;                   // class columns come from here
};

TableLayout layout(const OrbitMethod& om, uint64_t seed) {
    TableLayout t;
    t.oracle = burnside_table(om.group(), seed);
    const auto& orbits = om.orbits();
    t.orbit_order.resize(orbits.size());
    for (std::size_t i = 0; i < orbits.size(); ++i) t.orbit_order[i] = i;
    std::sort(t.orbit_order.begin(), t.orbit_order.end(), [&](std::size_t a, std::size_t b) {
        if (orbits[a].size() != orbits[b].size()) return orbits[a].size() < orbits[b].size();
        return orbits[a].rep() < orbits[b].rep();
    });
    return t;
}

int cmd_catalog() {
    for (const auto& e : catalog_entries()) {
        Class2Group B = e.build();
        std::cout << e.name << "  order=" << B.order()
                  << "  classes=" << B.conjugacy_classes().size() << "\n";
    }
    return 0;
}

int cmd_chartable(const std::string& spec, const std::string& format, bool exact,
                  bool with_oracle, const std::string& out_path) {
    Class2Group B = parse_group_arg(spec);
    gate(B);
    OrbitMethod om(B);
    uint64_t seed = oracle_seed();
    TableLayout t = layout(om, seed);
    const auto& orbits = om.orbits();

    std::ofstream file;
    std::ostream& out = open_out(file, out_path);

    if (format == "json") {
        nlohmann::json j;
        j["order"] = B.order();
        j["classes"] = t.oracle.class_reps;
        j["class_sizes"] = t.oracle.class_sizes;
        j["rows"] = nlohmann::json::array();
        for (std::size_t oi : t.orbit_order) {
            nlohmann::json row;
            row["orbit_rep"] = orbits[oi].rep();
            row["orbit_size"] = orbits[oi].size();
            row["degree"] = OrbitMethod::orbit_dimension(orbits[oi]);
            nlohmann::json vals = nlohmann::json::array();
            for (std::size_t rep : t.oracle.class_reps) {
                ExactValue v = om.orbit_character(orbits[oi], rep);
                if (exact)
                    vals.push_back({{"scale", v.scale},
                                    {"root_order", v.root_order},
                                    {"exponent", v.exponent}});
                else
                    vals.push_back(format_complex(to_complex(v)));
            }
            row["values"] = std::move(vals);
            j["rows"].push_back(std::move(row));
        }
        out << j.dump(2) << "\n";
    } else {
        out << "orbit_rep,degree";
        for (std::size_t rep : t.oracle.class_reps) out << "," << element_label(B, rep);
        out << "\n";
        for (std::size_t oi : t.orbit_order) {
            out << orbits[oi].rep() << "," << OrbitMethod::orbit_dimension(orbits[oi]);
            for (std::size_t rep : t.oracle.class_reps) {
                ExactValue v = om.orbit_character(orbits[oi], rep);
                out << "," << (exact ? format_exact(v) : format_complex(to_complex(v)));
            }
            out << "\n";
        }
    }

    if (with_oracle) {
        std::ostream& os = out_path.empty() ? std::cout : std::cerr;
        try {
            MatchReport m = match_tables(om, t.oracle);
            os << "oracle: bijective match, max deviation " << m.max_deviation << "\n";
        } catch (const NoBijection& e) {
            os << "oracle: MISMATCH: " << e.what() << "\n";
            return kExitTableMismatch;
        }
    }
    return 0;
}

int cmd_orbits(const std::string& spec, const std::string& out_path) {
    Class2Group B = parse_group_arg(spec);
    gate(B);
    OrbitMethod om(B);
    const auto& orbits = om.orbits();

    std::ofstream file;
    std::ostream& out = open_out(file, out_path);

    std::vector<std::size_t> order(orbits.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (orbits[a].size() != orbits[b].size()) return orbits[a].size() < orbits[b].size();
        return orbits[a].rep() < orbits[b].rep();
    });

    // size histogram summary
    std::map<std::size_t, std::size_t> hist;
    for (const auto& o : orbits) hist[o.size()]++;
    out << "orbits: " << orbits.size() << " (sizes:";
    for (auto [size, count] : hist) out << " " << count << "x" << size;
    out << ")\n";
    out << "rep,size,dim,stab_order,dual_rep\n";
    for (std::size_t oi : order) {
        const Orbit& o = orbits[oi];
        out << o.rep() << "," << o.size() << "," << OrbitMethod::orbit_dimension(o) << ","
            << om.stabilizer(o.rep()).size() << "," << om.dual_orbit(o).rep() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& spec, const std::string& suite, const std::string& out_path) {
    Class2Group B = parse_group_arg(spec);
    gate(B);
    nlohmann::json report = run_suite(B, suite, oracle_seed());
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << report.dump(2) << "\n";
    return report["passed"].get<bool>() ? 0 : 1;
}

int cmd_export(const std::string& spec, const std::string& out_path) {
    Class2Group B = parse_group_arg(spec);
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << serialize_group_spec(B).dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit-method character tables for odd-order groups of nilpotency class 2"};
    app.require_subcommand(1);

    std::string spec, format = "csv", suite = "all", out_path;
    bool exact = false, with_oracle = false;

    app.add_subcommand("catalog", "list built-in groups");

    auto* chartable = app.add_subcommand("chartable", "irreducible character table");
    chartable->add_option("spec", spec, "catalog name, shorthand, JSON file or inline JSON")
        ->required();
    chartable->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    chartable->add_flag("--exact", exact, "render exact root-of-unity values");
    chartable->add_flag("--oracle", with_oracle, "cross-check against the class-sum oracle");
    chartable->add_option("--out", out_path, "output file (default stdout)");

    auto* orbits_cmd = app.add_subcommand("orbits", "coadjoint orbit report");
    orbits_cmd->add_option("spec", spec)->required();
    orbits_cmd->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run theorem verification suites");
    verify->add_option("spec", spec)->required();
    verify->add_option("--suite", suite, "cocycle|lazard|orbits|groupalg|all")
        ->check(CLI::IsMember({"cocycle", "lazard", "orbits", "groupalg", "all"}));
    verify->add_option("--out", out_path);

    auto* export_cmd = app.add_subcommand("export", "serialize a group to the JSON spec format");
    export_cmd->add_option("spec", spec)->required();
    export_cmd->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("catalog")) return cmd_catalog();
        if (app.got_subcommand("chartable"))
            return cmd_chartable(spec, format, exact, with_oracle, out_path);
        if (app.got_subcommand("orbits")) return cmd_orbits(spec, out_path);
        if (app.got_subcommand("verify")) return cmd_verify(spec, suite, out_path);
        if (app.got_subcommand("export")) return cmd_export(spec, out_path);
    } catch (const NotTwoDivisible& e) {
        std::cerr << "error: NotTwoDivisible: " << e.what() << "\n";
        return kExitEvenOrder;
    } catch (const NotTwoRootable& e) {
        std::cerr << "error: NotTwoRootable: " << e.what() << "\n";
        return kExitEvenOrder;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClassGate;
    } catch (const NoBijection& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTableMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: invalid spec: " << e.what() << "\n";
        return kExitInvalidSpec;
    }
    return 0;
}
