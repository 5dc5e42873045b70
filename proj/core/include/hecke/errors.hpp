#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Evaluation requested at (or too close to) a pole.
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

/// A truncation or tail bound could not be certified at the requested tolerance.
class CertificationError : public Error {
public:
    explicit CertificationError(const std::string& msg) : Error(msg) {}
};

/// Cancellation or series stall exceeded the precision budget.
class PrecisionError : public CertificationError {
public:
    explicit PrecisionError(const std::string& msg) : CertificationError(msg) {}
};

/// Malformed or inconsistent external data (e.g. spectral CSV files).
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

} // namespace hecke
