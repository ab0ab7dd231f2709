#pragma once

#include <stdexcept>
#include <string>

namespace mottlab {

/// Base of all library errors. The CLI maps each subclass to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value is out of contract (non-finite, wrong sign, ...).
class InvalidParameter : public Error {
 public:
  InvalidParameter(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Grids, tolerances or file schemas are inconsistent with the request.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A numeric routine failed to converge; carries the achieved residual.
class NumericFailure : public Error {
 public:
  NumericFailure(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  [[nodiscard]] double residual() const noexcept { return residual_; }

 private:
  double residual_ = 0.0;
};

/// The requested point lies outside the asymptotic regime (e.g. nu >= 2 I0).
class RegimeError : public Error {
 public:
  using Error::Error;
};

}  // namespace mottlab
