#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "orbitkit/orbits.hpp"

namespace orbitkit {

/// Character table computed by the classical class-sum method, independent
/// of the orbit pipeline. Rows are irreducibles in canonical order
/// (ascending degree, then lexicographic on rounded values); columns are
/// conjugacy classes ordered by (size, representative index).
struct OracleTable {
    std::vector<std::size_t> class_reps;
    std::vector<std::size_t> class_sizes;
    std::vector<std::vector<std::complex<double>>> characters;
    std::vector<int64_t> degrees;
};

/// Simultaneous diagonalization of a random combination of the
/// class-multiplication matrices; deterministic for a fixed seed.
/// Throws DegenerateSpectrum after 8 failed retries.
OracleTable burnside_table(const Class2Group& B, uint64_t seed);

struct MatchReport {
    std::vector<std::size_t> orbit_to_oracle;
    double max_deviation = 0.0;
};

/// Bijection between the orbit-method character table and the oracle table
/// with pointwise agreement within 1e-6; throws NoBijection.
MatchReport match_tables(const OrbitMethod& om, const OracleTable& oracle);

} // namespace orbitkit
