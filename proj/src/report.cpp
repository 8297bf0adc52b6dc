#include "kgnc/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "kgnc/perturbation.hpp"

namespace kgnc {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::match:
      return "match";
    case Verdict::mismatch:
      return "mismatch";
    case Verdict::skipped:
      return "skipped";
  }
  return "skipped";
}

std::string_view to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::paper_vs_reference:
      return "paper_vs_reference";
    case RecordKind::internal_identity:
      return "internal_identity";
    case RecordKind::route_cross_check:
      return "route_cross_check";
  }
  return "paper_vs_reference";
}

DiscrepancyRecord make_record(std::string quantity, RecordKind kind, int n, int ell, std::string reference,
                              double paper_value, double oracle_value, double tolerance) {
  DiscrepancyRecord record;
  record.quantity = std::move(quantity);
  record.kind = kind;
  record.n = n;
  record.ell = ell;
  record.reference = std::move(reference);
  record.paper_value = paper_value;
  record.oracle_value = oracle_value;
  record.tolerance = tolerance;
  if (!std::isfinite(paper_value) || !std::isfinite(oracle_value)) {
    record.relative_deviation = std::numeric_limits<double>::quiet_NaN();
    record.verdict = Verdict::skipped;
    record.note = "non-finite value";
    return record;
  }
  record.relative_deviation = std::abs(paper_value - oracle_value) / std::max(std::abs(oracle_value), kDeviationFloor);
  record.verdict = record.relative_deviation <= tolerance ? Verdict::match : Verdict::mismatch;
  return record;
}

DiscrepancyRecord skipped_record(std::string quantity, RecordKind kind, int n, int ell, std::string reason) {
  DiscrepancyRecord record;
  record.quantity = std::move(quantity);
  record.kind = kind;
  record.n = n;
  record.ell = ell;
  record.paper_value = std::numeric_limits<double>::quiet_NaN();
  record.oracle_value = std::numeric_limits<double>::quiet_NaN();
  record.relative_deviation = std::numeric_limits<double>::quiet_NaN();
  record.verdict = Verdict::skipped;
  record.note = std::move(reason);
  return record;
}

std::optional<double> LevelRow::primary_shift(const SublevelRow& row) const {
  if (row.de_matrix) return row.de_matrix;
  if (row.de_oracle) return row.de_oracle;
  return row.de_paper;
}

namespace {

std::string ratio_note(double measured, double candidate, const char* label) {
  std::ostringstream out;
  out.precision(12);
  out << "measured/" << label << " = " << measured / candidate;
  return out.str();
}

struct LevelContext {
  const RunConfig& config;
  int n;
  int ell;
  LevelRow& row;
  std::vector<DiscrepancyRecord>& records;
};

void add_state_records(LevelContext& ctx, const RadialState& state, std::optional<double> oracle_e0) {
  const int n = ctx.n;
  const int l = ctx.ell;
  const auto& params = ctx.config.params;
  const double measured_norm = state.measured_norm();
  const double abs_e = std::abs(state.energy());

  auto norm = make_record("norm", RecordKind::paper_vs_reference, n, l, "quadrature", 1.0, measured_norm,
                          kRecordTolerance);
  norm.note = ratio_note(measured_norm, 1.0 / (2.0 * abs_e), "(1/(2|E0|))");
  ctx.records.push_back(std::move(norm));

  for (int k : {3, 4}) {
    const std::string quantity = "rho_inv" + std::to_string(k);
    try {
      const double paper = expectation_inverse_power(state, k, ExpectationMethod::paper_closed_form).value;
      const double quad = expectation_inverse_power(state, k, ExpectationMethod::quadrature).value;
      ctx.records.push_back(
          make_record(quantity, RecordKind::paper_vs_reference, n, l, "quadrature", paper, quad, kRecordTolerance));
    } catch (const SingularFormulaError& e) {
      ctx.records.push_back(skipped_record(quantity, RecordKind::paper_vs_reference, n, l, e.what()));
    }
  }

  PhysicalParams paper_params = params;
  paper_params.mode = FormulaMode::paper;
  PhysicalParams rederived_params = params;
  rederived_params.mode = FormulaMode::rederived;
  const QuantumNumbers qn{n, l, 0};
  const double e0_paper = energy_unperturbed(paper_params, qn);
  if (oracle_e0) {
    ctx.records.push_back(make_record("E0", RecordKind::paper_vs_reference, n, l, "fd_oracle", e0_paper, *oracle_e0,
                                      kRecordTolerance));
  } else {
    ctx.records.push_back(make_record("E0", RecordKind::paper_vs_reference, n, l, "rederived_closed_form", e0_paper,
                                      energy_unperturbed(rederived_params, qn), kRecordTolerance));
  }

  const std::pair<const char*, int> identities[] = {{"norm_identity", 0}, {"rho_inv1_identity", -1},
                                                     {"rho_inv2_identity", -2}};
  for (const auto& [label, power] : identities) {
    ctx.records.push_back(make_record(label, RecordKind::internal_identity, n, l, "laguerre_identity",
                                      radial_moment(state, power), laguerre_identity_moment(state, power),
                                      kIdentityTolerance));
  }
}

void add_shift_records(LevelContext& ctx) {
  const int l = ctx.ell;
  const auto& routes = ctx.config.routes;
  if (l == 0) {
    ctx.records.push_back(skipped_record("dE", RecordKind::paper_vs_reference, ctx.n, l, "no splitting at ell = 0"));
    return;
  }
  // compare at the outermost sublevel m = ell
  const SublevelRow* top = nullptr;
  for (const auto& s : ctx.row.sublevels) {
    if (s.m == l) top = &s;
  }
  QuantumNumbers qn{ctx.n, l, l};
  const double paper = top && top->de_paper ? *top->de_paper : nc_energy_shift(ctx.config.params, qn, ShiftRoute::paper);
  std::optional<double> oracle = top ? top->de_oracle : std::nullopt;
  std::optional<double> matrix = top ? top->de_matrix : std::nullopt;
  if (!matrix && !oracle) matrix = nc_energy_shift(ctx.config.params, qn, ShiftRoute::matrix);

  if (routes.oracle && oracle) {
    ctx.records.push_back(
        make_record("dE", RecordKind::paper_vs_reference, ctx.n, l, "fd_oracle", paper, *oracle, kRecordTolerance));
  } else if (matrix) {
    ctx.records.push_back(
        make_record("dE", RecordKind::paper_vs_reference, ctx.n, l, "matrix", paper, *matrix, kRecordTolerance));
  } else {
    ctx.records.push_back(skipped_record("dE", RecordKind::paper_vs_reference, ctx.n, l, "oracle shift unavailable"));
  }

  if (routes.matrix && routes.oracle) {
    if (matrix && oracle) {
      ctx.records.push_back(make_record("dE_matrix_vs_oracle", RecordKind::route_cross_check, ctx.n, l, "fd_oracle",
                                        *matrix, *oracle, kRecordTolerance));
    } else {
      ctx.records.push_back(
          skipped_record("dE_matrix_vs_oracle", RecordKind::route_cross_check, ctx.n, l, "oracle shift unavailable"));
    }
  }
}

LevelRow compute_level(const RunConfig& config, int n, int l, std::vector<DiscrepancyRecord>& records) {
  LevelRow row;
  row.n = n;
  row.ell = l;
  LevelContext ctx{config, n, l, row, records};
  const auto& params = config.params;
  const QuantumNumbers qn{n, l, 0};

  std::optional<RadialState> state;
  try {
    state.emplace(params, qn);
    row.e0 = state->energy();
  } catch (const std::exception& e) {
    row.annotations.push_back(std::string("state error: ") + e.what());
    return row;
  }

  std::optional<double> oracle_e0;
  if (config.routes.oracle) {
    try {
      PhysicalParams commutative = params;
      commutative.theta = 0.0;
      const auto result = solve_selfconsistent(commutative, qn, config.grid_for(qn), {config.tol, 500, 0.5});
      if (result.converged) {
        oracle_e0 = result.energy;
      } else {
        row.annotations.push_back("oracle: E0 iteration did not converge");
      }
    } catch (const std::exception& e) {
      row.annotations.push_back(std::string("oracle: ") + e.what());
    }
  }

  if (l == 0) {
    row.sublevels.push_back({0, std::nullopt, std::nullopt, std::nullopt, *row.e0});
    row.annotations.push_back("no_splitting(ell=0)");
  } else {
    std::optional<double> paper_k;
    std::optional<double> matrix_k;
    if (config.routes.paper) paper_k = nc_shift_coefficient(params, qn, ShiftRoute::paper);
    if (config.routes.matrix) matrix_k = nc_shift_coefficient(params, qn, ShiftRoute::matrix);
    for (int m = -l; m <= l; ++m) {
      SublevelRow s;
      s.m = m;
      const double m_theta = m * params.theta;
      if (paper_k) s.de_paper = m_theta * *paper_k;
      if (matrix_k) s.de_matrix = m_theta * *matrix_k;
      if (config.routes.oracle && m == 0) {
        s.de_oracle = 0.0;
      } else if (config.routes.oracle) {
        try {
          s.de_oracle =
              nc_shift_nonperturbative(params, {n, l, m}, config.grid_for(qn), {config.tol, 500, 0.5});
        } catch (const std::exception& e) {
          row.annotations.push_back("oracle(m=" + std::to_string(m) + "): " + e.what());
        }
      }
      s.e_total = *row.e0 + row.primary_shift(s).value_or(0.0);
      row.sublevels.push_back(s);
    }
  }

  try {
    add_state_records(ctx, *state, oracle_e0);
    add_shift_records(ctx);
  } catch (const std::exception& e) {
    row.annotations.push_back(std::string("records: ") + e.what());
  }
  return row;
}

}  // namespace

SpectrumTable run_spectrum(const RunConfig& config) {
  validate(config);
  SpectrumTable table;
  table.config = config;
  for (int n = 1; n <= config.n_max; ++n) {
    for (int l = 0; l < n; ++l) {
      if (config.ell && *config.ell != l) continue;
      table.levels.push_back(compute_level(config, n, l, table.discrepancies));
    }
  }
  return table;
}

}  // namespace kgnc
