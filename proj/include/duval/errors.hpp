#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace duval {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in incompatible ring contexts, or a variable is missing.
struct ContextError : Error {
    using Error::Error;
};

/// Invalid mathematical input (non-prime modulus, bad Dynkin index, ...).
struct DomainError : Error {
    using Error::Error;
};

/// The requested (type, characteristic) pair ships no normal form.
struct NotInCatalogError : DomainError {
    using DomainError::DomainError;
};

/// Action or weight combination outside the supported quotient constructions.
struct UnsupportedError : DomainError {
    using DomainError::DomainError;
};

/// Exhaustive search would exceed the configured candidate budget.
struct SearchTooLargeError : DomainError {
    std::uint64_t candidates;
    SearchTooLargeError(const std::string& msg, std::uint64_t count)
        : DomainError(msg), candidates(count) {}
};

/// Intermediate polynomial exceeded the configured degree cap.
struct DegreeCapError : Error {
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct StructuralError : Error {
    using Error::Error;
};

/// Text input rejected by the expression parser; carries a position.
struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& msg, std::size_t l, std::size_t c)
        : Error(msg + " at line " + std::to_string(l) + ", column " + std::to_string(c)),
          line(l), column(c) {}
};

}  // namespace duval
