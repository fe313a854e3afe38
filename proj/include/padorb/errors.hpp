#pragma once

#include <stdexcept>
#include <string>

namespace padorb {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameters: non-prime p, p = 2, mismatched rings or shapes.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A mathematical hypothesis of an operation does not hold for its input.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Inversion of an element of positive valuation.
class NonUnitError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An enumeration would exceed its configured budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A condition that the algorithms guarantee was observed to fail.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace padorb
