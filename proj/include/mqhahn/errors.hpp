#pragma once

#include <stdexcept>
#include <string>

namespace mqhahn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("exact division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Exponent constant part is not an integer after substitution.
struct NonIntegralExponent : Error {
  using Error::Error;
};

// A denominator q-Pochhammer vanished before the terminating parameter
// truncated the series.
struct DenominatorPoleBeforeTermination : Error {
  using Error::Error;
};

// Parameters violate a nonvanishing condition required by a closed form.
struct DegenerateContext : Error {
  using Error::Error;
};

// Two spectral values coincide where a recurrence divides by their difference.
struct DegenerateEigenvalues : Error {
  using Error::Error;
};

struct DimMismatch : Error {
  using Error::Error;
};

// The Casimir operator is not a multiple of the identity on this context.
struct NonScalarCasimir : Error {
  using Error::Error;
};

struct SingularBasisMatrix : Error {
  using Error::Error;
};

struct ConfigParseError : Error {
  using Error::Error;
};

struct GenericitySamplingExhausted : Error {
  using Error::Error;
};

}  // namespace mqhahn
