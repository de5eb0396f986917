#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbitkit/groupalg.hpp"
#include "orbitkit/groupspec.hpp"
#include "orbitkit/oracle.hpp"
#include "orbitkit/verify.hpp"

namespace py = pybind11;
using namespace orbitkit;

namespace {

Class2Group group_from_arg(const std::string& arg) { return parse_group_arg(arg); }

py::dict chartable_dict(const std::string& arg, uint64_t seed) {
    Class2Group B = parse_group_arg(arg);
    OrbitMethod om(B);
    OracleTable oracle = burnside_table(B, seed);
    MatchReport match = match_tables(om, oracle);

    py::dict out;
    out["order"] = B.order();
    out["class_reps"] = oracle.class_reps;
    out["class_sizes"] = oracle.class_sizes;
    out["max_oracle_deviation"] = match.max_deviation;

    py::list rows;
    for (const Orbit& o : om.orbits()) {
        py::dict row;
        row["orbit_rep"] = o.rep();
        row["orbit_size"] = o.size();
        row["degree"] = OrbitMethod::orbit_dimension(o);
        py::list vals;
        for (std::size_t rep : oracle.class_reps)
            vals.append(to_complex(om.orbit_character(o, rep)));
        row["values"] = std::move(vals);
        rows.append(std::move(row));
    }
    out["rows"] = std::move(rows);
    return out;
}

py::list orbit_list(const std::string& arg) {
    OrbitMethod om(parse_group_arg(arg));
    py::list out;
    for (const Orbit& o : om.orbits()) {
        py::dict d;
        d["rep"] = o.rep();
        d["size"] = o.size();
        d["degree"] = OrbitMethod::orbit_dimension(o);
        d["members"] = o.members;
        d["stabilizer_order"] = om.stabilizer(o.rep()).size();
        out.append(std::move(d));
    }
    return out;
}

py::dict verify_dict(const std::string& arg, const std::string& suite, uint64_t seed) {
    nlohmann::json j = run_suite(parse_group_arg(arg), suite, seed);
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

} // namespace

PYBIND11_MODULE(_orbitkit, m) {
    m.doc() = "exact orbit-method character tables for odd-order class-2 groups";

    py::register_exception<NotTwoDivisible>(m, "NotTwoDivisible");
    py::register_exception<InvalidSpec>(m, "InvalidSpec");

    py::class_<Class2Group>(m, "Group")
        .def(py::init(&group_from_arg), py::arg("spec"))
        .def_property_readonly("order", &Class2Group::order)
        .def("mul", &Class2Group::mul)
        .def("inv", &Class2Group::inv)
        .def("commutator", &Class2Group::commutator)
        .def("element_order", &Class2Group::element_order)
        .def("center", &Class2Group::center_of)
        .def("conjugacy_classes", &Class2Group::conjugacy_classes)
        .def("__len__", &Class2Group::size)
        .def("__repr__", [](const Class2Group& B) {
            return "<Group of order " + std::to_string(B.order()) + ">";
        });

    m.def("catalog", [] {
        py::list out;
        for (const auto& e : catalog_entries()) out.append(py::make_tuple(e.name, e.order));
        return out;
    });
    m.def("chartable", &chartable_dict, py::arg("spec"), py::arg("seed") = 20240817ULL,
          "character table rows with an oracle cross-check");
    m.def("orbits", &orbit_list, py::arg("spec"), "coadjoint orbit decomposition");
    m.def("verify", &verify_dict, py::arg("spec"), py::arg("suite") = "all",
          py::arg("seed") = 20240817ULL, "run a verification suite, returns the JSON report");
}
