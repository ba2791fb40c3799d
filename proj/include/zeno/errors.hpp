// errors.hpp: exception hierarchy shared by every zeno module

#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

// Input outside the physical or mathematical domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numeric invariant was violated (trace drift, negative eigenvalue,
// non-convergence, ...).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigensystem requested for a non-diagonalizable matrix.
class DefectiveMatrixError : public NumericError {
public:
    using NumericError::NumericError;
};

} // namespace zeno
