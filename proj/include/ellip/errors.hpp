#pragma once

#include <stdexcept>
#include <string>

namespace ellip {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Characteristic equation has a = c = 0; no classification possible.
struct DegenerateEquation : Error {
  using Error::Error;
};

/// A characteristic root lies within 1e-12 of the real axis; ellipticity
/// cannot be certified in floating point.
struct Inconclusive : Error {
  using Error::Error;
};

/// Two fields (or a field and a grid) do not share the same discretization.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Data carries an angular mode outside the representable band.
struct ModeOverflow : Error {
  using Error::Error;
};

/// Boundary sample count does not match the angular grid size.
struct SampleCountMismatch : Error {
  using Error::Error;
};

/// |omega'| fell below threshold somewhere on the sampled disk.
struct DerivativeVanishes : Error {
  using Error::Error;
};

/// tau * rho_hat >= 1 persisted; the series tail cannot be bounded.
struct NonContractive : Error {
  using Error::Error;
};

/// Invalid solve configuration; `field` names the offending entry.
struct ConfigError : Error {
  std::string field;
  ConfigError(std::string field_name, const std::string& message)
      : Error("config error in '" + field_name + "': " + message),
        field(std::move(field_name)) {}
};

}  // namespace ellip
