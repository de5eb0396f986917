#include "orbitkit/groupspec.hpp"

#include <algorithm>
#include <fstream>

namespace orbitkit {

namespace {

std::vector<int64_t> parse_moduli(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) throw InvalidSpec(where + ": expected an array of moduli");
    std::vector<int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidSpec(where + ": moduli must be integers");
        out.push_back(v.get<int64_t>());
    }
    return out;
}

Coords parse_a_entry(const nlohmann::json& j, const FinAbGroup& A, const std::string& where) {
    if (j.is_number_integer()) {
        if (A.rank() != 1) throw InvalidSpec(where + ": scalar entry but A has rank != 1");
        return {j.get<int64_t>()};
    }
    if (!j.is_array() || j.size() != A.rank())
        throw InvalidSpec(where + ": entry must have one coordinate per A modulus");
    Coords a;
    for (const auto& v : j) a.push_back(v.get<int64_t>());
    return a;
}

Cocycle parse_psi(const nlohmann::json& psi, const FinAbGroup& C, const FinAbGroup& A) {
    const std::string kind = psi.value("kind", "");
    if (kind == "bilinear") {
        if (!psi.contains("matrix")) throw InvalidSpec("psi.matrix: missing");
        const auto& m = psi.at("matrix");
        if (!m.is_array() || m.size() != C.rank())
            throw InvalidSpec("psi.matrix: expected rank(C) rows");
        BilinearMatrix M;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i].is_array() || m[i].size() != C.rank())
                throw InvalidSpec("psi.matrix[" + std::to_string(i) +
                                  "]: expected rank(C) entries");
            std::vector<Coords> row;
            for (std::size_t j = 0; j < m[i].size(); ++j)
                row.push_back(parse_a_entry(m[i][j], A,
                                            "psi.matrix[" + std::to_string(i) + "][" +
                                                std::to_string(j) + "]"));
            M.push_back(std::move(row));
        }
        return from_bilinear(C, A, M);
    }
    if (kind == "table") {
        if (!psi.contains("entries")) throw InvalidSpec("psi.entries: missing");
        const auto& e = psi.at("entries");
        if (!e.is_array() || e.size() != C.size() * C.size())
            throw InvalidSpec("psi.entries: expected |C|^2 entries in canonical order");
        Cocycle out(C, A);
        for (std::size_t i = 0; i < e.size(); ++i) {
            Coords a = parse_a_entry(e[i], A, "psi.entries[" + std::to_string(i) + "]");
            out.table[i] = static_cast<uint32_t>(A.index(A.reduce(std::move(a))));
        }
        return out;
    }
    throw InvalidSpec("psi.kind: expected bilinear, table or catalog");
}

} // namespace

Class2Group parse_group_spec(const nlohmann::json& spec) {
    if (!spec.is_object()) throw InvalidSpec("group spec must be a JSON object");
    if (!spec.contains("psi")) throw InvalidSpec("psi: missing");
    const auto& psi = spec.at("psi");
    if (!psi.is_object()) throw InvalidSpec("psi: expected an object");
    try {
        if (psi.value("kind", "") == "catalog") {
            const std::string name = psi.value("name", "");
            const auto params = psi.value("params", nlohmann::json::object());
            if (name == "heisenberg") return catalog_heisenberg(params.value("p", int64_t{3}));
            if (name == "extraspecial_exp_p")
                return catalog_extraspecial_exp_p(params.value("p", int64_t{3}),
                                                  params.value("n", int64_t{1}));
            if (name == "abelian")
                return catalog_abelian(
                    parse_moduli(params.value("moduli", nlohmann::json::array()),
                                 "psi.params.moduli"));
            if (name == "direct_product")
                return direct_product(parse_group_spec(params.at("left")),
                                      parse_group_spec(params.at("right")));
            return catalog_by_name(name);
        }
        if (!spec.contains("A")) throw InvalidSpec("A: missing");
        if (!spec.contains("C")) throw InvalidSpec("C: missing");
        FinAbGroup A(parse_moduli(spec.at("A"), "A"));
        FinAbGroup C(parse_moduli(spec.at("C"), "C"));
        return Class2Group(A, C, parse_psi(psi, C, A), spec.value("strict_center", false));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec(std::string("malformed group spec: ") + e.what());
    }
}

nlohmann::json serialize_group_spec(const Class2Group& B) {
    nlohmann::json entries = nlohmann::json::array();
    for (uint32_t v : B.psi().table) {
        Coords a = B.A().coords(v);
        entries.push_back(a);
    }
    return {{"A", B.A().moduli()},
            {"C", B.C().moduli()},
            {"psi", {{"kind", "table"}, {"entries", entries}}},
            {"strict_center", B.strict_center()}};
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v{
            {"abelian:[3]", 3, [] { return catalog_abelian({3}); }},
            {"abelian:[5]", 5, [] { return catalog_abelian({5}); }},
            {"abelian:[9]", 9, [] { return catalog_abelian({9}); }},
            {"abelian:[3,9]", 27, [] { return catalog_abelian({3, 9}); }},
            {"heisenberg:3", 27, [] { return catalog_heisenberg(3); }},
            {"heisenberg:3xC3", 81,
             [] { return direct_product(catalog_heisenberg(3), catalog_abelian({3})); }},
            {"heisenberg:5", 125, [] { return catalog_heisenberg(5); }},
            {"extraspecial_exp_p:3,2", 243, [] { return catalog_extraspecial_exp_p(3, 2); }},
            {"heisenberg:7", 343, [] { return catalog_heisenberg(7); }},
        };
        std::sort(v.begin(), v.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
            if (a.order != b.order) return a.order < b.order;
            return a.name < b.name;
        });
        return v;
    }();
    return entries;
}

Class2Group catalog_by_name(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return e.build();
    throw InvalidSpec("unknown catalog group: " + name);
}

Class2Group parse_group_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') {
        nlohmann::json j = nlohmann::json::parse(arg, nullptr, false);
        if (j.is_discarded()) throw InvalidSpec("inline spec is not valid JSON");
        return parse_group_spec(j);
    }
    {
        std::ifstream in(arg);
        if (in.good()) {
            nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
            if (j.is_discarded()) throw InvalidSpec(arg + ": not valid JSON");
            return parse_group_spec(j);
        }
    }
    // shorthand: name:params
    auto colon = arg.find(':');
    std::string name = arg.substr(0, colon);
    std::string params = colon == std::string::npos ? "" : arg.substr(colon + 1);
    if (name == "heisenberg" && !params.empty() && params.find(',') == std::string::npos &&
        params.find('x') == std::string::npos)
        return catalog_heisenberg(std::stoll(params));
    if (name == "extraspecial_exp_p") {
        auto comma = params.find(',');
        if (comma == std::string::npos)
            throw InvalidSpec("extraspecial_exp_p needs p,n");
        return catalog_extraspecial_exp_p(std::stoll(params.substr(0, comma)),
                                          std::stoll(params.substr(comma + 1)));
    }
    if (name == "abelian") {
        std::vector<int64_t> moduli;
        std::string s = params;
        std::erase(s, '[');
        std::erase(s, ']');
        std::size_t pos = 0;
        while (pos < s.size()) {
            auto next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            moduli.push_back(std::stoll(s.substr(pos, next - pos)));
            pos = next + 1;
        }
        return catalog_abelian(moduli);
    }
    return catalog_by_name(arg);
}

} // namespace orbitkit
