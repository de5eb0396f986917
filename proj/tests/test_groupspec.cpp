#include "orbitkit/groupspec.hpp"

#include <doctest.h>

#include "orbitkit/errors.hpp"

using namespace orbitkit;
using nlohmann::json;

TEST_CASE("bilinear spec parses to Heisenberg(3)") {
    json spec = {{"A", {3}},
                 {"C", {3, 3}},
                 {"psi", {{"kind", "bilinear"}, {"matrix", {{{0}, {1}}, {{0}, {0}}}}}}};
    Class2Group B = parse_group_spec(spec);
    Class2Group H = catalog_heisenberg(3);
    REQUIRE(B.order() == 27);
    for (std::size_t x = 0; x < 27; ++x)
        for (std::size_t y = 0; y < 27; ++y) CHECK(B.mul(x, y) == H.mul(x, y));
}

TEST_CASE("catalog spec and shorthand forms") {
    json spec = {{"A", json::array()},
                 {"C", json::array()},
                 {"psi", {{"kind", "catalog"}, {"name", "heisenberg"}, {"params", {{"p", 5}}}}}};
    CHECK(parse_group_spec(spec).order() == 125);

    CHECK(parse_group_arg("heisenberg:5").order() == 125);
    CHECK(parse_group_arg("extraspecial_exp_p:3,2").order() == 243);
    CHECK(parse_group_arg("abelian:[3,9]").order() == 27);
    CHECK(parse_group_arg("heisenberg:3xC3").order() == 81);
}

TEST_CASE("inline JSON is accepted by parse_group_arg") {
    Class2Group B = parse_group_arg(
        R"({"A":[3],"C":[3,3],"psi":{"kind":"bilinear","matrix":[[[0],[1]],[[0],[0]]]}})");
    CHECK(B.order() == 27);
    CHECK(B.conjugacy_classes().size() == 11);
}

TEST_CASE("malformed specs raise positioned errors") {
    CHECK_THROWS_AS(parse_group_spec(json{{"A", {3}}}), InvalidSpec);
    CHECK_THROWS_AS(parse_group_spec(json{{"A", {3}}, {"C", {3}}, {"psi", 17}}), InvalidSpec);
    CHECK_THROWS_AS(
        parse_group_spec(json{{"A", {3}}, {"C", {3}}, {"psi", {{"kind", "nope"}}}}),
        InvalidSpec);
    CHECK_THROWS_AS(parse_group_spec(json{{"A", {0}}, {"C", {3}}, {"psi", {{"kind", "table"}}}}),
                    InvalidSpec);
    CHECK_THROWS_AS(parse_group_arg("no_such_group:3"), InvalidSpec);
}

TEST_CASE("serialization round trip preserves the multiplication table") {
    for (const char* name : {"heisenberg:3", "abelian:[3,9]", "heisenberg:3xC3"}) {
        Class2Group B = parse_group_arg(name);
        Class2Group B2 = parse_group_spec(serialize_group_spec(B));
        REQUIRE(B2.size() == B.size());
        for (std::size_t x = 0; x < B.size(); ++x)
            for (std::size_t y = 0; y < B.size(); ++y) CHECK(B2.mul(x, y) == B.mul(x, y));
    }
}

TEST_CASE("catalog entries are ordered and self-consistent") {
    const auto& entries = catalog_entries();
    REQUIRE(!entries.empty());
    for (std::size_t i = 1; i < entries.size(); ++i) {
        CHECK(entries[i - 1].order <= entries[i].order);
        if (entries[i - 1].order == entries[i].order)
            CHECK(entries[i - 1].name < entries[i].name);
    }
    for (const auto& e : entries) {
        Class2Group B = e.build();
        CHECK(B.order() == e.order);
        CHECK(catalog_by_name(e.name).order() == e.order);
    }
}
