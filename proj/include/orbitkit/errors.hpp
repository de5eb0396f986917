#pragma once

#include <stdexcept>
#include <string>

namespace orbitkit {

struct NotTwoDivisible : std::runtime_error {
    explicit NotTwoDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct NotTwoRootable : std::runtime_error {
    explicit NotTwoRootable(const std::string& what) : std::runtime_error(what) {}
};

struct InfiniteGroup : std::runtime_error {
    explicit InfiniteGroup(const std::string& what) : std::runtime_error(what) {}
};

struct IncompatibleModuli : std::runtime_error {
    explicit IncompatibleModuli(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct AsymmetricPhi : std::runtime_error {
    explicit AsymmetricPhi(const std::string& what) : std::runtime_error(what) {}
};

struct EvenPrime : std::runtime_error {
    explicit EvenPrime(const std::string& what) : std::runtime_error(what) {}
};

struct CenterMismatch : std::runtime_error {
    explicit CenterMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotAHomomorphism : std::runtime_error {
    explicit NotAHomomorphism(const std::string& what) : std::runtime_error(what) {}
};

struct IdentityViolation : std::runtime_error {
    explicit IdentityViolation(const std::string& what) : std::runtime_error(what) {}
};

struct InternalPresentationError : std::runtime_error {
    explicit InternalPresentationError(const std::string& what) : std::runtime_error(what) {}
};

struct NotPerfectSquare : std::runtime_error {
    explicit NotPerfectSquare(const std::string& what) : std::runtime_error(what) {}
};

struct FormulaMismatch : std::runtime_error {
    explicit FormulaMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct IdealViolation : std::runtime_error {
    explicit IdealViolation(const std::string& what) : std::runtime_error(what) {}
};

struct TraceMismatch : std::runtime_error {
    explicit TraceMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct CountMismatch : std::runtime_error {
    explicit CountMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateSpectrum : std::runtime_error {
    explicit DegenerateSpectrum(const std::string& what) : std::runtime_error(what) {}
};

struct NoBijection : std::runtime_error {
    explicit NoBijection(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidSpec : std::runtime_error {
    explicit InvalidSpec(const std::string& what) : std::runtime_error(what) {}
};

} // namespace orbitkit
