#include "kgnc/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "kgnc/errors.hpp"

namespace kgnc {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_real(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_real(const std::optional<double>& value) {
  return value && std::isfinite(*value) ? format_real(*value, 12) : std::string{};
}

void write_json(std::ostream& out, const ordered_json& j) {
  switch (j.type()) {
    case ordered_json::value_t::object: {
      out << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ',';
        first = false;
        out << ordered_json(it.key()).dump() << ':';
        write_json(out, it.value());
      }
      out << '}';
      break;
    }
    case ordered_json::value_t::array: {
      out << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ',';
        write_json(out, j[i]);
      }
      out << ']';
      break;
    }
    case ordered_json::value_t::number_float: {
      const double v = j.get<double>();
      out << (std::isfinite(v) ? format_real(v, 17) : "null");
      break;
    }
    default:
      out << j.dump();
  }
}

ordered_json json_real(const std::optional<double>& value) {
  if (!value || !std::isfinite(*value)) return nullptr;
  return *value;
}

std::string route_flags(const LevelRow& level, const SublevelRow& row) {
  std::string flags;
  const auto add = [&](const std::string& flag) {
    if (!flags.empty()) flags += ';';
    flags += flag;
  };
  if (row.de_paper) add("paper");
  if (row.de_matrix) add("matrix");
  if (row.de_oracle) add("oracle");
  for (const auto& note : level.annotations) add(note);
  return flags;
}

}  // namespace

std::string to_csv(const SpectrumTable& table) {
  std::ostringstream out;
  out << kCsvHeader << "\r\n";
  for (const auto& level : table.levels) {
    if (level.sublevels.empty()) {
      out << level.n << ',' << level.ell << ",,,,,,," << csv_field(route_flags(level, SublevelRow{})) << "\r\n";
      continue;
    }
    for (const auto& row : level.sublevels) {
      out << level.n << ',' << level.ell << ',' << row.m << ',' << csv_real(level.e0) << ','
          << csv_real(row.de_paper) << ',' << csv_real(row.de_matrix) << ',' << csv_real(row.de_oracle) << ','
          << csv_real(row.e_total) << ',' << csv_field(route_flags(level, row)) << "\r\n";
    }
  }
  return out.str();
}

std::string to_json(const SpectrumTable& table) {
  const auto& config = table.config;
  ordered_json meta;
  meta["mass"] = config.params.mass;
  meta["z_alpha"] = config.params.z_alpha;
  meta["theta"] = config.params.theta;
  meta["mode"] = std::string(to_string(config.params.mode));
  meta["abs_e0_source"] = "energy_unperturbed under mode '" + std::string(to_string(config.params.mode)) + "'";
  meta["n_max"] = config.n_max;
  meta["ell"] = config.ell ? ordered_json(*config.ell) : ordered_json(nullptr);
  meta["routes"] = config.routes.to_string();
  meta["grid_rmax"] = config.grid_rmax ? ordered_json(*config.grid_rmax) : ordered_json("auto");
  meta["grid_points"] = config.grid_points;
  meta["tol"] = config.tol;
  meta["record_tolerance"] = kRecordTolerance;
  meta["identity_tolerance"] = kIdentityTolerance;

  ordered_json levels = ordered_json::array();
  for (const auto& level : table.levels) {
    ordered_json item;
    item["n"] = level.n;
    item["ell"] = level.ell;
    item["E0"] = json_real(level.e0);
    item["E0_over_M"] = level.e0 ? json_real(*level.e0 / config.params.mass) : ordered_json(nullptr);
    item["annotations"] = level.annotations;
    ordered_json subs = ordered_json::array();
    for (const auto& row : level.sublevels) {
      ordered_json s;
      s["m"] = row.m;
      s["dE_paper"] = json_real(row.de_paper);
      s["dE_matrix"] = json_real(row.de_matrix);
      s["dE_oracle"] = json_real(row.de_oracle);
      s["E_total"] = json_real(row.e_total);
      subs.push_back(std::move(s));
    }
    item["sublevels"] = std::move(subs);
    levels.push_back(std::move(item));
  }

  ordered_json records = ordered_json::array();
  for (const auto& r : table.discrepancies) {
    ordered_json item;
    item["quantity"] = r.quantity;
    item["kind"] = std::string(to_string(r.kind));
    item["n"] = r.n;
    item["ell"] = r.ell;
    item["reference"] = r.reference;
    item["paper_value"] = json_real(r.paper_value);
    item["oracle_value"] = json_real(r.oracle_value);
    item["relative_deviation"] = json_real(r.relative_deviation);
    item["tolerance"] = r.tolerance;
    item["verdict"] = std::string(to_string(r.verdict));
    item["note"] = r.note;
    records.push_back(std::move(item));
  }

  ordered_json doc;
  doc["meta"] = std::move(meta);
  doc["levels"] = std::move(levels);
  doc["discrepancies"] = std::move(records);
  std::ostringstream out;
  write_json(out, doc);
  out << '\n';
  return out.str();
}

double svg_magnification(const SpectrumTable& table) {
  std::vector<double> energies;
  double widest = 0.0;
  for (const auto& level : table.levels) {
    if (!level.e0) continue;
    energies.push_back(*level.e0);
    double lo = 0.0;
    double hi = 0.0;
    for (const auto& row : level.sublevels) {
      const double shift = level.primary_shift(row).value_or(0.0);
      lo = std::min(lo, shift);
      hi = std::max(hi, shift);
    }
    widest = std::max(widest, hi - lo);
  }
  if (widest <= 0.0) return 1.0;
  std::sort(energies.begin(), energies.end());
  const double resolution = 1e-12 * table.config.params.mass;
  double gap = 0.0;
  for (std::size_t i = 1; i < energies.size(); ++i) {
    const double d = energies[i] - energies[i - 1];
    if (d > resolution && (gap == 0.0 || d < gap)) gap = d;
  }
  if (gap == 0.0) gap = 0.1 * table.config.params.mass;
  return 0.1 * gap / widest;
}

std::string to_svg(const SpectrumTable& table) {
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 600.0;
  constexpr double kMarginX = 60.0;
  constexpr double kTop = 60.0;
  constexpr double kBottom = 540.0;
  constexpr double kLineLength = 120.0;
  constexpr double kTickHalf = 8.0;

  const double magnification = svg_magnification(table);
  double e_min = 0.0;
  double e_max = 0.0;
  int max_ell = 0;
  bool any = false;
  for (const auto& level : table.levels) {
    if (!level.e0) continue;
    for (const auto& row : level.sublevels) {
      const double e = *level.e0 + magnification * level.primary_shift(row).value_or(0.0);
      e_min = any ? std::min(e_min, e) : e;
      e_max = any ? std::max(e_max, e) : e;
      any = true;
    }
    max_ell = std::max(max_ell, level.ell);
  }
  const double span = e_max - e_min > 0.0 ? e_max - e_min : 1.0;
  const auto y_of = [&](double e) { return kBottom - (e - e_min) / span * (kBottom - kTop); };
  const double column = (kWidth - 2.0 * kMarginX) / (max_ell + 1);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "  <text class=\"legend\" x=\"" << kMarginX << "\" y=\"30\" font-size=\"14\">shift magnification x"
      << format_real(magnification, 6) << " (theta = " << format_real(table.config.params.theta, 6)
      << ", mode = " << to_string(table.config.params.mode) << ")</text>\n";
  for (int l = 0; l <= max_ell; ++l) {
    out << "  <text class=\"column-label\" x=\"" << format_real(kMarginX + l * column, 8) << "\" y=\"575\""
        << " font-size=\"12\">l = " << l << "</text>\n";
  }
  for (const auto& level : table.levels) {
    if (!level.e0) continue;
    const double x0 = kMarginX + level.ell * column;
    const double y0 = y_of(*level.e0);
    out << "  <g class=\"level\" id=\"level-n" << level.n << "-l" << level.ell << "\" data-n=\"" << level.n
        << "\" data-ell=\"" << level.ell << "\">\n";
    out << "    <line class=\"baseline\" x1=\"" << format_real(x0, 8) << "\" y1=\"" << format_real(y0, 8)
        << "\" x2=\"" << format_real(x0 + kLineLength, 8) << "\" y2=\"" << format_real(y0, 8)
        << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    const auto count = static_cast<double>(level.sublevels.size());
    for (std::size_t i = 0; i < level.sublevels.size(); ++i) {
      const auto& row = level.sublevels[i];
      const double x = x0 + kLineLength * (i + 1.0) / (count + 1.0);
      const double y = y_of(*level.e0 + magnification * level.primary_shift(row).value_or(0.0));
      out << "    <line class=\"tick\" data-m=\"" << row.m << "\" x1=\"" << format_real(x, 8) << "\" y1=\""
          << format_real(y - kTickHalf, 8) << "\" x2=\"" << format_real(x, 8) << "\" y2=\""
          << format_real(y + kTickHalf, 8) << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    }
    out << "    <text x=\"" << format_real(x0 + kLineLength + 6.0, 8) << "\" y=\"" << format_real(y0 + 4.0, 8)
        << "\" font-size=\"10\">n=" << level.n << " E0/M=" << format_real(*level.e0 / table.config.params.mass, 8)
        << "</text>\n";
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render(const SpectrumTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return to_csv(table);
    case OutputFormat::json:
      return to_json(table);
    case OutputFormat::svg_lines:
      return to_svg(table);
  }
  return to_csv(table);
}

void emit(const SpectrumTable& table, OutputFormat format, const std::string& path) {
  const std::string text = render(table, format);
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("<stdout>", "write failed");
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError(path, "cannot open for writing");
  file << text;
  file.close();
  if (!file) throw IoError(path, "write failed");
}

}  // namespace kgnc
