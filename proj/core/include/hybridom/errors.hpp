#pragma once

#include <stdexcept>
#include <string>

namespace hybridom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates its domain (non-positive rate, negative occupancy, ...).
class InvalidParameter : public Error {
 public:
  InvalidParameter(std::string field, const std::string& what)
      : Error("invalid parameter '" + field + "': " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A closed-form expression has a vanishing denominator for the given parameters.
class SingularConfiguration : public Error {
 public:
  using Error::Error;
};

/// The resolvent (-i w I - A) is singular at the requested frequency.
class PoleError : public Error {
 public:
  PoleError(double omega, const std::string& what)
      : Error(what + " (omega = " + std::to_string(omega) + ")"), omega_(omega) {}
  double omega() const noexcept { return omega_; }

 private:
  double omega_;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The drift matrix is not Hurwitz, so no stationary state exists.
class NoSteadyState : public Error {
 public:
  using Error::Error;
};

/// Spectra violate the purity discriminant; indicates an upstream bug.
class UnphysicalSpectra : public Error {
 public:
  using Error::Error;
};

/// Added noise is referred to the input through 1/G and G vanishes.
class UndefinedAddedNoise : public Error {
 public:
  using Error::Error;
};

class BandwidthUndefined : public Error {
 public:
  using Error::Error;
};

/// Parse or schema error in a sweep configuration, with 1-based location when known.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::string origin, int line = 0, int column = 0)
      : Error(format(what, origin, line, column)), origin_(std::move(origin)), line_(line), column_(column) {}
  const std::string& origin() const noexcept { return origin_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, const std::string& origin, int line, int column) {
    std::string loc = origin;
    if (line > 0) loc += ":" + std::to_string(line) + ":" + std::to_string(column);
    return loc + ": " + what;
  }
  std::string origin_;
  int line_;
  int column_;
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what) : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace hybridom
