#pragma once

#include <string>

#include "kgnc/report.hpp"

namespace kgnc {

inline constexpr const char* kCsvHeader = "n,ell,m,E0,dE_paper,dE_matrix,dE_oracle,E_total,route_flags";

/// One row per sublevel, 12 significant digits, RFC 4180 quoting.
std::string to_csv(const SpectrumTable& table);

/// {meta, levels[], discrepancies[]} with fixed key order; reals at 17
/// significant digits, missing values as null.
std::string to_json(const SpectrumTable& table);

/// Spectral-line diagram: a baseline per (n, ell) level and 2l+1 ticks
/// displaced by the magnified shift.
std::string to_svg(const SpectrumTable& table);

/// Magnification that makes the widest splitting span 10% of the smallest
/// gap between distinct levels.
double svg_magnification(const SpectrumTable& table);

std::string render(const SpectrumTable& table, OutputFormat format);

/// Writes to `path`, or standard output when `path` is empty.
void emit(const SpectrumTable& table, OutputFormat format, const std::string& path);

}  // namespace kgnc
