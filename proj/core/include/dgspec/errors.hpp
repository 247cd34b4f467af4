#pragma once

#include <stdexcept>
#include <string>

namespace dgspec {

// Base of all library errors. The CLI maps each subclass onto an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (edge lists, subset lists).
class ParseError : public Error {
public:
    using Error::Error;
};

// Input violates an operation's precondition: not strongly connected,
// periodic, zero outdegree, enumeration cap exceeded, bad parameters.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Numerical failure: QR non-convergence, singular matrix, defective
// eigenbasis, residual above tolerance.
class NumericalError : public Error {
public:
    using Error::Error;
};

// The matrix has no basis of eigenvectors at working precision.
class DefectiveMatrixError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace dgspec
