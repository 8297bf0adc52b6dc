#pragma once

// Unperturbed Klein-Gordon Coulomb spectrum with equal scalar and vector
// potentials: energies, the rho-space coupling, effective quantities and the
// closed-form Laguerre bound states.

#include <string_view>

#include "kgnc/special_functions.hpp"

namespace kgnc {

/// `paper` reproduces the printed closed forms verbatim; `rederived` uses the
/// coefficients obtained by reducing the radial equation directly.
enum class FormulaMode { paper, rederived };

std::string_view to_string(FormulaMode mode);
FormulaMode formula_mode_from_string(std::string_view text);

/// Natural units (hbar = c = 1). theta is the z-component of the
/// non-commutativity parameter.
struct PhysicalParams {
  double mass = 1.0;
  double z_alpha = 0.5;
  double theta = 0.0;
  FormulaMode mode = FormulaMode::rederived;

  void validate() const;
};

/// n is the principal number: the Laguerre degree n - ell - 1 must be >= 0.
struct QuantumNumbers {
  int n = 1;
  int ell = 0;
  int m = 0;

  void validate() const;
  int radial_degree() const { return n - ell - 1; }
};

double energy_unperturbed(const PhysicalParams& params, const QuantumNumbers& qn);

/// Coefficient of 1/rho in the rho-space radial equation.
struct Varsigma {
  double paper;      // (Z alpha / M) sqrt(1 + 2E/(M-E)), as printed
  double rederived;  // Z alpha sqrt((M+E)/(M-E))

  double for_mode(FormulaMode mode) const { return mode == FormulaMode::paper ? paper : rederived; }
};

Varsigma varsigma(const PhysicalParams& params, double energy);

/// V_eff(r) = -2(M+E) Z alpha / r + ell(ell+1)/r^2.
struct EffectivePotential {
  double coulomb_strength;  // 2(M+E) Z alpha
  int ell;

  double operator()(double r) const {
    return -coulomb_strength / r + static_cast<double>(ell * (ell + 1)) / (r * r);
  }
};

struct EffectiveQuantities {
  double e_eff;  // M^2 - E^2
  EffectivePotential v_eff;
};

EffectiveQuantities effective_quantities(const PhysicalParams& params, double energy, int ell);

double rho_of_r(double r, double e_eff);
double r_of_rho(double rho, double e_eff);

/// Closed-form bound state
///   R(rho) = N rho^{l+1} (n-l-1)!/(n+l)! (2l+1)! L^{2l+1}_{n-l-1}(rho) e^{-rho/2},
///   N = sqrt((n+l)! / (2|E| n (n-l-1)!)) / (2l+1)!,
/// with every factorial held in log space.
class RadialState {
 public:
  RadialState(const PhysicalParams& params, const QuantumNumbers& qn);

  const QuantumNumbers& qn() const { return qn_; }
  const PhysicalParams& params() const { return params_; }
  double energy() const { return energy_; }
  /// ln N
  double norm_log() const { return norm_log_; }
  /// ln of the full constant in front of rho^{l+1} L e^{-rho/2}.
  double log_amplitude() const { return log_amplitude_; }
  /// Integral of R^2 over [0, inf) measured by Gauss-Laguerre quadrature.
  double measured_norm() const { return measured_norm_; }
  LaguerreSpec<double> laguerre() const { return {qn_.radial_degree(), 2.0 * qn_.ell + 1.0}; }

  double operator()(double rho) const;

 private:
  PhysicalParams params_;
  QuantumNumbers qn_;
  double energy_;
  double norm_log_;
  double log_amplitude_;
  double measured_norm_;
};

RadialState make_radial_state(const PhysicalParams& params, const QuantumNumbers& qn);

/// Exact integral of R(rho)^2 rho^power over [0, inf); requires
/// 2l + 2 + power > -1. The integrand is e^{-rho} rho^{2l+2+power} times a
/// polynomial, so the Gauss-Laguerre rule with that weight is exact.
double radial_moment(const RadialState& state, int power);

}  // namespace kgnc
