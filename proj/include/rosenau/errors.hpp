#pragma once

#include <stdexcept>
#include <string>

namespace rosenau {

// Exit codes surfaced by the command-line runner.
enum class ErrorKind { Config = 2, Numerical = 3, Io = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(what), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Short machine-readable tag, e.g. "instability".
  const std::string& name() const noexcept { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorKind::Config, "config", what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what)
      : Error(ErrorKind::Io, "io", what) {}
};

class NumericalError : public Error {
 public:
  NumericalError(std::string name, const std::string& what)
      : Error(ErrorKind::Numerical, std::move(name), what) {}
};

// Inverse transform produced a field with a non-negligible imaginary part.
class SymmetryError : public NumericalError {
 public:
  explicit SymmetryError(const std::string& what)
      : NumericalError("symmetry_violation", what) {}
};

// u^{p+1} is undefined over the reals (negative base, fractional exponent).
class DomainError : public NumericalError {
 public:
  explicit DomainError(const std::string& what)
      : NumericalError("domain", what) {}
};

class InstabilityError : public NumericalError {
 public:
  InstabilityError(const std::string& what, double t, long step)
      : NumericalError("instability", what), t_(t), step_(step) {}
  double time() const noexcept { return t_; }
  long step() const noexcept { return step_; }

 private:
  double t_;
  long step_;
};

}  // namespace rosenau
