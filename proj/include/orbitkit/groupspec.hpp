#pragma once

#include <string>

#include <json.hpp>

#include "orbitkit/nilgroup.hpp"

namespace orbitkit {

/// Parses the JSON group-spec format:
///   {"A": [...], "C": [...],
///    "psi": {"kind": "bilinear", "matrix": [[...]]}
///         | {"kind": "table", "entries": [...]}
///         | {"kind": "catalog", "name": "...", "params": {...}},
///    "strict_center": false}
/// Throws InvalidSpec with a positioned message on malformed input.
Class2Group parse_group_spec(const nlohmann::json& spec);

/// Shorthand forms accepted by the CLI: "heisenberg:3",
/// "extraspecial_exp_p:3,2", "abelian:[3,9]", a catalog entry name, or a
/// path to a JSON spec file.
Class2Group parse_group_arg(const std::string& arg);

/// Serializes to the dense-table spec; re-ingesting yields a group with an
/// identical multiplication table.
nlohmann::json serialize_group_spec(const Class2Group& B);

struct CatalogEntry {
    std::string name;
    int64_t order;
    Class2Group (*build)();
};

/// Built-in example groups, ordered by order then name.
const std::vector<CatalogEntry>& catalog_entries();

Class2Group catalog_by_name(const std::string& name);

} // namespace orbitkit
