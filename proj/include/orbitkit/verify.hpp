#pragma once

#include <json.hpp>

#include "orbitkit/groupalg.hpp"
#include "orbitkit/nilgroup.hpp"

namespace orbitkit {

/// Runs one of the theorem-verification suites ("cocycle", "lazard",
/// "orbits", "groupalg", or "all") against a group. Returns a JSON report
/// {suite, checks: [{name, passed, witness?}], passed}. Deterministic for
/// a fixed seed.
nlohmann::json run_suite(const Class2Group& B, const std::string& suite, uint64_t seed);

} // namespace orbitkit
