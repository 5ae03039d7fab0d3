#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvelab {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    size_t pos;
    ParseError(const std::string& msg, size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

// Division that was contractually exact left a remainder.  In family
// constructions this signals a construction bug, not a user error.
struct ExactDivisionError : Error {
    explicit ExactDivisionError(const std::string& msg) : Error(msg) {}
};

struct DegreeError : Error {
    explicit DegreeError(const std::string& msg) : Error(msg) {}
};

// Hilbert function of S/J_f failed to stabilize at degrees 3d-5, 3d-4.
struct NonReducedCurve : Error {
    explicit NonReducedCurve(const std::string& msg) : Error(msg) {}
};

// Sum of declared local Tjurina numbers does not match the global tau.
struct TauBudgetMismatch : Error {
    explicit TauBudgetMismatch(const std::string& msg) : Error(msg) {}
};

// A free / nearly free verdict failed its closed-form tau cross-check.
struct TauFormulaMismatch : Error {
    explicit TauFormulaMismatch(const std::string& msg) : Error(msg) {}
};

struct UnsupportedGermType : Error {
    explicit UnsupportedGermType(const std::string& msg) : Error(msg) {}
};

// Linear system handed to solve_linear was inconsistent or underdetermined.
struct SingularSystem : Error {
    explicit SingularSystem(const std::string& msg) : Error(msg) {}
};

// Implicitization kernel had unexpected dimension (0: wrong degree or no
// relation; >1: improper or degenerate parametrization).
struct KernelDimError : Error {
    int dim;
    KernelDimError(const std::string& msg, int kernel_dim) : Error(msg), dim(kernel_dim) {}
};

// mdr(f) = 0: d concurrent lines; profile is fine, deformation analysis is refused.
struct MdrZero : Error {
    explicit MdrZero(const std::string& msg) : Error(msg) {}
};

struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& msg) : Error(msg) {}
};

// An internal consistency check failed; indicates an engine bug.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace curvelab
