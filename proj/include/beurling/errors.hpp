#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace beurling {

// Base class for every error thrown by this library, so CLI code can map the
// whole taxonomy to exit codes in one place.
class BeurlingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid or contradictory configuration: bad JSON, unknown keys, decreasing
// prime lists, non-positive caps, and similar user-input problems.
class ConfigError : public BeurlingError {
public:
  using BeurlingError::BeurlingError;
};

// A resource cap was hit (entry count, memory estimate, integer overflow).
// partial_count reports how far the computation got before stopping.
class ResourceError : public BeurlingError {
public:
  ResourceError(const std::string& what, std::uint64_t partial = 0)
      : BeurlingError(what), partial_count(partial) {}
  std::uint64_t partial_count;
};

// An argument lies outside the mathematical domain of an operation
// (sigma <= 1 where a tail bound is requested, x beyond the table, ...).
class RangeError : public BeurlingError {
public:
  using BeurlingError::BeurlingError;
};

// The requested value is undefined for the given inputs (missing table
// entry for a prime power, vanishing Euler factor, complex-valued input
// where a real function is required).
class DomainError : public BeurlingError {
public:
  using BeurlingError::BeurlingError;
};

// A numerical consistency check failed, e.g. a quadrature error estimate
// exceeded its acceptance threshold.
class NumericalError : public BeurlingError {
public:
  using BeurlingError::BeurlingError;
};

}  // namespace beurling
