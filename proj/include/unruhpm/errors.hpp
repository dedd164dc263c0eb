#pragma once

#include <stdexcept>
#include <string>

namespace unruhpm {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected input: a parameter, matrix, or request outside its documented domain.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Operand or result dimensions outside the supported range.
class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A matrix required to be Hermitian is not, beyond tolerance.
class NonHermitianError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A density matrix whose trace differs from 1 beyond tolerance.
class NonUnitTraceError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A matrix required to be positive semidefinite has an eigenvalue below -tolerance.
class NegativeEigenvalueError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// The optimization objective does not depend on the reversal strength.
class DegenerateObjectiveError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// The protocol conditions on an outcome that occurs with probability zero.
class ZeroSuccessProbabilityError : public Error {
public:
    using Error::Error;
};

/// A file could not be created, written, or flushed.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace unruhpm
