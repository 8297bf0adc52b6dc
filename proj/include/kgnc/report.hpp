#pragma once

// Batch spectrum/splitting computation and the paper-vs-oracle discrepancy
// ledger.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgnc/config.hpp"

namespace kgnc {

enum class Verdict { match, mismatch, skipped };

std::string_view to_string(Verdict verdict);

/// paper_vs_reference: a printed closed form against an independent value.
/// internal_identity: quadrature against a closed Laguerre-integral identity.
/// route_cross_check: first-order matrix route against the FD oracle.
enum class RecordKind { paper_vs_reference, internal_identity, route_cross_check };

std::string_view to_string(RecordKind kind);

inline constexpr double kRecordTolerance = 1e-6;
inline constexpr double kIdentityTolerance = 1e-10;
inline constexpr double kDeviationFloor = 1e-300;

struct DiscrepancyRecord {
  std::string quantity;
  RecordKind kind = RecordKind::paper_vs_reference;
  int n = 0;
  int ell = 0;
  std::string reference;  // where oracle_value came from
  double paper_value = 0.0;
  double oracle_value = 0.0;
  double relative_deviation = 0.0;
  double tolerance = kRecordTolerance;
  Verdict verdict = Verdict::skipped;
  std::string note;
};

/// |paper - oracle| / max(|oracle|, 1e-300) with the verdict at `tolerance`.
DiscrepancyRecord make_record(std::string quantity, RecordKind kind, int n, int ell, std::string reference,
                              double paper_value, double oracle_value, double tolerance);

DiscrepancyRecord skipped_record(std::string quantity, RecordKind kind, int n, int ell, std::string reason);

struct SublevelRow {
  int m = 0;
  std::optional<double> de_paper;
  std::optional<double> de_matrix;
  std::optional<double> de_oracle;
  double e_total = 0.0;
};

struct LevelRow {
  int n = 0;
  int ell = 0;
  std::optional<double> e0;  // empty if the state could not be built
  std::vector<SublevelRow> sublevels;
  std::vector<std::string> annotations;

  /// The shift used for E_total and for the line diagram (matrix, then
  /// oracle, then paper).
  std::optional<double> primary_shift(const SublevelRow& row) const;
};

struct SpectrumTable {
  RunConfig config;
  std::vector<LevelRow> levels;
  std::vector<DiscrepancyRecord> discrepancies;
};

/// Every (n <= n_max, ell <= n-1) in (n, ell, m) order. Failures become row
/// annotations or skipped records; the batch never aborts on a bad state.
SpectrumTable run_spectrum(const RunConfig& config);

}  // namespace kgnc
