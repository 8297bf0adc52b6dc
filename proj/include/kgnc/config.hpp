#pragma once

// Run configuration: flat "key = value" files plus command-line overrides.

#include <optional>
#include <string>
#include <string_view>

#include "kgnc/oracle.hpp"
#include "kgnc/spectrum.hpp"

namespace kgnc {

struct RouteSet {
  bool paper = true;
  bool matrix = true;
  bool oracle = false;

  bool empty() const { return !paper && !matrix && !oracle; }
  std::string to_string() const;  // "paper,matrix"
};

enum class OutputFormat { csv, json, svg_lines };

std::string_view to_string(OutputFormat format);

struct RunConfig {
  PhysicalParams params{1.0, 0.5, 1e-4, FormulaMode::rederived};
  int n_max = 4;
  std::optional<int> ell;
  RouteSet routes;
  std::optional<double> grid_rmax;  // per-state default when unset
  int grid_points = 4000;
  double tol = 1e-12;  // self-consistent iteration tolerance
  OutputFormat format = OutputFormat::csv;
  std::string out;  // empty: standard output

  /// Oracle grid for one state.
  GridSpec grid_for(const QuantumNumbers& qn) const;
};

/// Keys accepted in config files; flags use the same names in kebab-case.
inline constexpr std::string_view kConfigKeys[] = {"mass",     "z_alpha",   "theta",       "mode",
                                                   "n_max",    "ell",       "routes",      "grid_rmax",
                                                   "grid_points", "tol",    "format",      "out"};

/// Sets one key, validating the value. `line` is 0 for command-line values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value, int line);

/// Parses a config document on top of the defaults.
RunConfig parse_config(std::string_view source);

/// Applies a config document on top of an existing configuration.
void merge_config(RunConfig& config, std::string_view source);

/// Cross-key invariants (ell filter within n_max).
void validate(const RunConfig& config);

}  // namespace kgnc
