#pragma once

#include <stdexcept>
#include <string>

namespace kgnc {

/// Invalid argument to a mathematical operation (bad quantum numbers,
/// out-of-range order, scattering-regime energy, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A printed closed form has a vanishing denominator or a divergent Gamma
/// factor for the requested state.
class SingularFormulaError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An integrand produced a non-finite value at a quadrature node.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double node)
      : std::runtime_error(what), node_(node) {}
  double node() const noexcept { return node_; }

 private:
  double node_;
};

/// Finite-difference oracle diagnostics (bad grid, no bound mapping).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The perturbed level can no longer be matched to its unperturbed partner.
class AmbiguityError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, int line, const std::string& message)
      : std::runtime_error(format(key, line, message)), key_(key), line_(line) {}

  const std::string& key() const noexcept { return key_; }
  /// 0 when the offending value came from a command-line flag.
  int line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& key, int line, const std::string& message) {
    std::string where = line > 0 ? "line " + std::to_string(line) : "command line";
    return where + ": key '" + key + "': " + message;
  }

  std::string key_;
  int line_;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace kgnc
