#include "kgnc/config.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <string>

#include "kgnc/errors.hpp"

namespace kgnc {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view key, std::string_view value, int line) {
  const std::string text(value);
  char* end = nullptr;
  errno = 0;
  const double result = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(result)) {
    throw ConfigError(std::string(key), line, "cannot parse '" + text + "' as a number");
  }
  return result;
}

int parse_int(std::string_view key, std::string_view value, int line) {
  int result = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), result);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(std::string(key), line, "cannot parse '" + std::string(value) + "' as an integer");
  }
  return result;
}

RouteSet parse_routes(std::string_view value, int line) {
  RouteSet routes{false, false, false};
  while (!value.empty()) {
    const auto comma = value.find(',');
    const auto item = trim(value.substr(0, comma));
    if (item == "paper") {
      routes.paper = true;
    } else if (item == "matrix") {
      routes.matrix = true;
    } else if (item == "oracle") {
      routes.oracle = true;
    } else if (!item.empty()) {
      throw ConfigError("routes", line, "unknown route '" + std::string(item) + "' (paper|matrix|oracle)");
    }
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  if (routes.empty()) throw ConfigError("routes", line, "at least one route is required");
  return routes;
}

}  // namespace

std::string RouteSet::to_string() const {
  std::string text;
  const auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!text.empty()) text += ',';
    text += name;
  };
  add(paper, "paper");
  add(matrix, "matrix");
  add(oracle, "oracle");
  return text;
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::json:
      return "json";
    case OutputFormat::svg_lines:
      return "svg-lines";
  }
  return "csv";
}

GridSpec RunConfig::grid_for(const QuantumNumbers& qn) const {
  if (grid_rmax) return {*grid_rmax, grid_points};
  return default_grid(params, qn, grid_points);
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value, int line) {
  const std::string name(key);
  value = trim(value);
  if (key == "mass") {
    const double v = parse_real(key, value, line);
    if (!(v > 0.0)) throw ConfigError(name, line, "mass must be > 0");
    config.params.mass = v;
  } else if (key == "z_alpha") {
    const double v = parse_real(key, value, line);
    if (!(v > 0.0)) throw ConfigError(name, line, "z_alpha must be > 0");
    config.params.z_alpha = v;
  } else if (key == "theta") {
    const double v = parse_real(key, value, line);
    if (!(v >= 0.0)) throw ConfigError(name, line, "theta must be >= 0");
    config.params.theta = v;
  } else if (key == "mode") {
    if (value == "paper") {
      config.params.mode = FormulaMode::paper;
    } else if (value == "rederived") {
      config.params.mode = FormulaMode::rederived;
    } else {
      throw ConfigError(name, line, "mode must be paper or rederived");
    }
  } else if (key == "n_max") {
    const int v = parse_int(key, value, line);
    if (v < 1) throw ConfigError(name, line, "n_max must be >= 1");
    config.n_max = v;
  } else if (key == "ell") {
    const int v = parse_int(key, value, line);
    if (v < 0) throw ConfigError(name, line, "ell must be >= 0");
    config.ell = v;
  } else if (key == "routes") {
    config.routes = parse_routes(value, line);
  } else if (key == "grid_rmax") {
    const double v = parse_real(key, value, line);
    if (!(v > 0.0)) throw ConfigError(name, line, "grid_rmax must be > 0");
    config.grid_rmax = v;
  } else if (key == "grid_points") {
    const int v = parse_int(key, value, line);
    if (v < 100) throw ConfigError(name, line, "grid_points must be >= 100");
    config.grid_points = v;
  } else if (key == "tol") {
    const double v = parse_real(key, value, line);
    if (!(v > 0.0)) throw ConfigError(name, line, "tol must be > 0");
    config.tol = v;
  } else if (key == "format") {
    if (value == "csv") {
      config.format = OutputFormat::csv;
    } else if (value == "json") {
      config.format = OutputFormat::json;
    } else if (value == "svg-lines") {
      config.format = OutputFormat::svg_lines;
    } else {
      throw ConfigError(name, line, "format must be csv, json or svg-lines");
    }
  } else if (key == "out") {
    config.out = std::string(value);
  } else {
    throw ConfigError(name, line, "unknown key");
  }
}

void merge_config(RunConfig& config, std::string_view source) {
  int line_number = 0;
  while (!source.empty()) {
    const auto newline = source.find('\n');
    std::string_view line = source.substr(0, newline);
    source = newline == std::string_view::npos ? std::string_view{} : source.substr(newline + 1);
    ++line_number;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(line), line_number, "expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("", line_number, "missing key before '='");
    apply_setting(config, key, line.substr(eq + 1), line_number);
  }
}

RunConfig parse_config(std::string_view source) {
  RunConfig config;
  merge_config(config, source);
  validate(config);
  return config;
}

void validate(const RunConfig& config) {
  if (config.ell && *config.ell > config.n_max - 1) {
    throw ConfigError("ell", 0, "ell filter " + std::to_string(*config.ell) + " has no states with n <= n_max");
  }
  if (config.routes.empty()) throw ConfigError("routes", 0, "at least one route is required");
}

}  // namespace kgnc
