#pragma once
#include <stdexcept>
#include <string>

namespace lrk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Requested mode/configuration not supported.
struct UnsupportedModeError : Error {
    using Error::Error;
};

// The symbol is singular at the requested point (dispersion vanishes).
struct SingularPointError : Error {
    using Error::Error;
};

// A lattice momentum grid hits a zero of the dispersion.
struct GridSingularError : Error {
    using Error::Error;
};

// Multivalued function evaluated on or too close to its branch cut.
struct BranchError : Error {
    using Error::Error;
};

// Quadrature or iterative scheme failed to meet the requested tolerance.
struct ToleranceError : Error {
    ToleranceError(const std::string& msg, double achieved_)
        : Error(msg), achieved(achieved_) {}
    double achieved;
};

// A structural invariant of a computed object is violated (builder bug).
struct StructureError : Error {
    using Error::Error;
};

// Matrix singular to machine precision.
struct SingularMatrixError : Error {
    SingularMatrixError(const std::string& msg, double rcond_)
        : Error(msg), rcond(rcond_) {}
    double rcond;
};

// Symbol determinant winds around the origin (out-of-scope symbol class).
struct WindingError : Error {
    using Error::Error;
};

// Matrix ratio is defective; eigenvalue route unavailable.
struct NonDiagonalizableError : Error {
    using Error::Error;
};

// Problem size outside supported range.
struct SizeError : Error {
    using Error::Error;
};

// Fit window does not contain enough points.
struct WindowError : Error {
    using Error::Error;
};

// Mismatched inputs in a comparison.
struct ComparisonError : Error {
    using Error::Error;
};

}  // namespace lrk
