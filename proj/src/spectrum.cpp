#include "kgnc/spectrum.hpp"

#include <cmath>
#include <string>

#include "kgnc/quadrature.hpp"

namespace kgnc {

std::string_view to_string(FormulaMode mode) {
  return mode == FormulaMode::paper ? "paper" : "rederived";
}

FormulaMode formula_mode_from_string(std::string_view text) {
  if (text == "paper") return FormulaMode::paper;
  if (text == "rederived") return FormulaMode::rederived;
  throw DomainError("unknown formula mode '" + std::string(text) + "' (expected paper|rederived)");
}

void PhysicalParams::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("mass must be > 0");
  if (!(z_alpha > 0.0) || !std::isfinite(z_alpha)) throw DomainError("z_alpha must be > 0");
  if (!(theta >= 0.0) || !std::isfinite(theta)) throw DomainError("theta must be >= 0");
}

void QuantumNumbers::validate() const {
  if (ell < 0) throw DomainError("ell must be >= 0");
  if (n - ell - 1 < 0) {
    throw DomainError("no radial solution: n = " + std::to_string(n) + " requires n >= ell + 1 = " +
                      std::to_string(ell + 1));
  }
  if (m < -ell || m > ell) {
    throw DomainError("magnetic number m = " + std::to_string(m) + " outside [-ell, ell]");
  }
}

double energy_unperturbed(const PhysicalParams& params, const QuantumNumbers& qn) {
  params.validate();
  qn.validate();
  const double mass = params.mass;
  const double za2 = params.z_alpha * params.z_alpha;
  if (params.mode == FormulaMode::paper) {
    const double k = static_cast<double>(qn.n - qn.ell);
    const double km2 = k * k * mass * mass;
    return mass * (za2 - km2) / (za2 + km2);
  }
  // Z alpha sqrt((M+E)/(M-E)) = n
  const double n2 = static_cast<double>(qn.n) * qn.n;
  return mass * (n2 - za2) / (n2 + za2);
}

Varsigma varsigma(const PhysicalParams& params, double energy) {
  params.validate();
  const double mass = params.mass;
  if (!(energy < mass)) throw DomainError("varsigma requires E < M (scattering regime otherwise)");
  const double paper_radicand = 1.0 + 2.0 * energy / (mass - energy);
  const double rederived_radicand = (mass + energy) / (mass - energy);
  if (paper_radicand < 0.0 || rederived_radicand < 0.0) {
    throw DomainError("varsigma requires E >= -M");
  }
  return {params.z_alpha / mass * std::sqrt(paper_radicand), params.z_alpha * std::sqrt(rederived_radicand)};
}

EffectiveQuantities effective_quantities(const PhysicalParams& params, double energy, int ell) {
  params.validate();
  if (!(std::abs(energy) < params.mass)) throw DomainError("effective quantities require |E| < M");
  if (ell < 0) throw DomainError("ell must be >= 0");
  const double e_eff = params.mass * params.mass - energy * energy;
  return {e_eff, EffectivePotential{2.0 * (params.mass + energy) * params.z_alpha, ell}};
}

double rho_of_r(double r, double e_eff) {
  if (!(r > 0.0) || !(e_eff > 0.0)) throw DomainError("rho_of_r requires r > 0 and E_eff > 0");
  return 2.0 * r * std::sqrt(e_eff);
}

double r_of_rho(double rho, double e_eff) {
  if (!(rho > 0.0) || !(e_eff > 0.0)) throw DomainError("r_of_rho requires rho > 0 and E_eff > 0");
  return rho / (2.0 * std::sqrt(e_eff));
}

RadialState::RadialState(const PhysicalParams& params, const QuantumNumbers& qn)
    : params_(params), qn_(qn), energy_(energy_unperturbed(params, qn)) {
  const int n = qn.n;
  const int l = qn.ell;
  const int degree = qn.radial_degree();
  const double log_fact_2l1 = log_factorial_ratio(2 * l + 1, 0);
  norm_log_ = 0.5 * (log_factorial_ratio(n + l, degree) - std::log(2.0 * std::abs(energy_) * n)) - log_fact_2l1;
  log_amplitude_ = norm_log_ + log_factorial_ratio(degree, n + l) + log_fact_2l1;
  measured_norm_ = radial_moment(*this, 0);
}

double RadialState::operator()(double rho) const {
  if (!(rho >= 0.0)) throw DomainError("R(rho) requires rho >= 0");
  if (rho == 0.0) return 0.0;
  const double envelope = std::exp(log_amplitude_ + (qn_.ell + 1) * std::log(rho) - 0.5 * rho);
  return envelope * laguerre_eval(laguerre(), rho);
}

RadialState make_radial_state(const PhysicalParams& params, const QuantumNumbers& qn) {
  return RadialState(params, qn);
}

double radial_moment(const RadialState& state, int power) {
  const int exponent = 2 * state.qn().ell + 2 + power;
  if (exponent <= -1) {
    throw DomainError("integral of R^2 rho^" + std::to_string(power) + " diverges at the origin");
  }
  const auto spec = state.laguerre();
  const auto rule = gauss_laguerre_rule_unit_mass(exact_order_for_degree(2 * spec.degree), static_cast<double>(exponent));
  const double poly_integral = integrate_halfline(
      [&](double x) {
        const double l = laguerre_eval(spec, x);
        return l * l;
      },
      rule);
  return std::exp(2.0 * state.log_amplitude() + std::lgamma(exponent + 1.0)) * poly_integral;
}

}  // namespace kgnc
