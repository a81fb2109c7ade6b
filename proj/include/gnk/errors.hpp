#pragma once

#include <stdexcept>
#include <string>

namespace gnk {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Incompatible vector/matrix shapes, or an underdetermined least-squares step.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// The R diagonal of the QR factorization fell below the rank threshold,
// or a square matrix could not be inverted.
class RankDeficient : public Error {
public:
    using Error::Error;
};

// A residual, Jacobian, or divided-difference evaluation produced NaN or Inf.
class NonFiniteEvaluation : public Error {
public:
    using Error::Error;
};

// Too few usable points for a convergence-order fit.
class InsufficientData : public Error {
public:
    using Error::Error;
};

// The denominator 1 - B*S(r) of the error-bound factor is not positive.
class BracketNonpositive : public Error {
public:
    using Error::Error;
};

// The characteristic roots of the majorant recurrence coincide.
class DegenerateRoots : public Error {
public:
    using Error::Error;
};

// The normal matrix at the reference solution is numerically singular.
class SingularAtSolution : public Error {
public:
    using Error::Error;
};

// A problem name is not in the registry.
class UnknownProblem : public Error {
public:
    using Error::Error;
};

// Grid scans require a two-dimensional problem.
class NonTwoDimensional : public Error {
public:
    using Error::Error;
};

// Invalid configuration value or violated call precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace gnk
