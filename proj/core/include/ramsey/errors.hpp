#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Base class for all workbench errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A value lies outside the domain an operation is defined on
// (bad letter, bad index, word of the wrong length, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// An operation was invoked on an object that lacks required setup,
// e.g. a group action is needed but absent.
class ConfigError : public Error {
public:
    using Error::Error;
};

// An exhaustive enumeration would exceed a configured cap.
class EnumerationLimitError : public Error {
public:
    using Error::Error;
};

// Numeric parameters violate a stated relation (divisibility, range).
class ParameterError : public Error {
public:
    using Error::Error;
};

// A supplied certificate failed its from-scratch recheck.
class CertificateError : public Error {
public:
    using Error::Error;
};

} // namespace ramsey
