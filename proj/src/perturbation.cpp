#include "kgnc/perturbation.hpp"

#include <algorithm>
#include <cmath>

namespace kgnc {
namespace {

void require_coupled(const QuantumNumbers& qn) {
  if (qn.ell == 0) {
    throw SingularFormulaError("spin-orbit-like term singular at ell = 0: no non-commutative shift defined");
  }
}

}  // namespace

NCPotential nc_potential_term(const PhysicalParams& params, const RadialState& state, int m) {
  return nc_potential_term(params, state.energy(), state.qn().ell, m);
}

NCPotential nc_potential_term(const PhysicalParams& params, double energy, int l, int m) {
  if (m < -l || m > l) throw DomainError("magnetic number outside [-ell, ell]");
  const auto eff = effective_quantities(params, energy, l);
  const double root = std::sqrt(eff.e_eff);
  const double energy_factor =
      params.mode == FormulaMode::paper ? 1.0 + energy / params.mass : params.mass + energy;
  return {m * params.theta, 4.0 * l * (l + 1) * eff.e_eff, 2.0 * energy_factor * root * params.z_alpha};
}

Expectation expectation_inverse_power(const RadialState& state, int k, ExpectationMethod method) {
  const int n = state.qn().n;
  const int l = state.qn().ell;
  const double abs_e = std::abs(state.energy());
  if (method == ExpectationMethod::quadrature) {
    if (k < 1 || k > 4) throw DomainError("inverse power k must be in 1..4");
    return {radial_moment(state, -(k - 2)), state.measured_norm()};
  }
  if (k != 3 && k != 4) throw DomainError("closed forms exist only for k = 3 and k = 4");
  if (l == 0) throw SingularFormulaError("closed-form <rho^-" + std::to_string(k) + "> singular at ell = 0");
  if (k == 3) {
    const double value = 1.0 / (2.0 * abs_e) / (l * (2.0 * l + 1.0) * (2.0 * l + 2.0));
    return {value, state.measured_norm()};
  }
  if (2 * l - 1 <= 0) throw SingularFormulaError("Gamma(2l-1) diverges");
  const double gamma_ratio = std::exp(std::lgamma(2.0 * l - 1.0) - std::lgamma(2.0 * l + 4.0));
  const double value = 1.0 / (n * abs_e) * gamma_ratio * (3.0 * n * n - l * (l + 1.0));
  return {value, state.measured_norm()};
}

double laguerre_identity_moment(const RadialState& state, int power) {
  const double abs_e = std::abs(state.energy());
  const double n = state.qn().n;
  const double l = state.qn().ell;
  switch (power) {
    case 0:
      return 1.0 / abs_e;
    case -1:
      return 1.0 / (2.0 * abs_e * n);
    case -2:
      return 1.0 / (2.0 * abs_e * n * (2.0 * l + 1.0));
    default:
      throw DomainError("Laguerre identity available for powers 0, -1, -2 only");
  }
}

double bracket_eigenvalue(const PhysicalParams& params, int n, double energy) {
  const double s = varsigma(params, energy).for_mode(params.mode);
  return s * s / (4.0 * n * n) - 0.25;
}

double bracket_eigenvalue_slope(const PhysicalParams& params, int n, double energy) {
  const double gap = std::min(params.mass - energy, params.mass + energy);
  if (!(gap > 0.0)) throw DomainError("slope requires |E| < M");
  const double h = 1e-3 * gap;
  const auto f = [&](double e) { return bracket_eigenvalue(params, n, e); };
  return (f(energy - 2 * h) - 8 * f(energy - h) + 8 * f(energy + h) - f(energy + 2 * h)) / (12 * h);
}

std::string_view to_string(ShiftRoute route) { return route == ShiftRoute::paper ? "paper" : "matrix"; }

double nc_shift_coefficient(const PhysicalParams& params, const QuantumNumbers& qn, ShiftRoute route) {
  qn.validate();
  require_coupled(qn);
  const double n = qn.n;
  const double l = qn.ell;
  if (route == ShiftRoute::paper) {
    const double abs_e = std::abs(energy_unperturbed(params, qn));
    const double k = n - l;
    const double za_over_m = params.z_alpha / params.mass;
    const double first = (3.0 * n * n - l * (l + 1.0)) / (n * (2.0 * l - 1.0) * (2.0 * l + 3.0));
    const double second = 2.0 * k * k * params.z_alpha / (l * (l + 1.0) * (k * k + za_over_m * za_over_m));
    return (first - second) / (4.0 * (2.0 * l + 1.0) * abs_e);
  }
  // <W> / (m theta) from exact quadrature, then the implicit-function slope.
  const RadialState state(params, qn);
  const auto w = nc_potential_term(params, state, 0);
  const double norm = state.measured_norm();
  const double inv4 = radial_moment(state, -4) / norm;
  const double inv3 = radial_moment(state, -3) / norm;
  const double w_per_m_theta = w.inverse_quartic * inv4 - w.inverse_cubic * inv3;
  return w_per_m_theta / bracket_eigenvalue_slope(params, qn.n, state.energy());
}

double nc_energy_shift(const PhysicalParams& params, const QuantumNumbers& qn, ShiftRoute route) {
  qn.validate();
  require_coupled(qn);
  if (qn.m == 0 || params.theta == 0.0) return 0.0;
  return (qn.m * params.theta) * nc_shift_coefficient(params, qn, route);
}

NCShift nc_shift(const PhysicalParams& params, const QuantumNumbers& qn) {
  return {qn, nc_energy_shift(params, qn, ShiftRoute::paper), nc_energy_shift(params, qn, ShiftRoute::matrix),
          std::nullopt};
}

SplittingReport split_level(const PhysicalParams& params, int n, int ell, ShiftRoute route) {
  SplittingReport report;
  report.n = n;
  report.ell = ell;
  report.base_energy = energy_unperturbed(params, {n, ell, 0});
  if (ell == 0) {
    report.sublevels.push_back({0, 0.0, report.base_energy});
    report.annotation = "no splitting defined (ell = 0)";
    return report;
  }
  const double coefficient = nc_shift_coefficient(params, {n, ell, 0}, route);
  for (int m = -ell; m <= ell; ++m) {
    const double shift = (m * params.theta) * coefficient;
    report.sublevels.push_back({m, shift, report.base_energy + shift});
  }
  return report;
}

}  // namespace kgnc
