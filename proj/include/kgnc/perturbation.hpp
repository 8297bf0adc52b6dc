#pragma once

// First-order energy shift from the theta . L term of the non-commutative
// radial equation, and the resulting 2l+1 splitting of each level.

#include <optional>
#include <string>
#include <vector>

#include "kgnc/spectrum.hpp"

namespace kgnc {

/// W(rho) = m theta [4 l(l+1) E_eff / rho^4 - c3 / rho^3], the term subtracted
/// inside the bracket of the rho-space radial operator.
/// c3 = 2(1 + E/M) sqrt(E_eff) Z alpha in paper mode and 2(M + E) sqrt(E_eff) Z alpha
/// in rederived mode; the two agree at M = 1.
struct NCPotential {
  double m_theta;
  double inverse_quartic;  // 4 l(l+1) E_eff
  double inverse_cubic;    // c3

  double operator()(double rho) const {
    const double inv = 1.0 / rho;
    const double inv3 = inv * inv * inv;
    return m_theta * (inverse_quartic * inv3 * inv - inverse_cubic * inv3);
  }
};

NCPotential nc_potential_term(const PhysicalParams& params, const RadialState& state, int m);
NCPotential nc_potential_term(const PhysicalParams& params, double energy, int ell, int m);

enum class ExpectationMethod { paper_closed_form, quadrature };

/// An unnormalized expectation integral together with the state's measured
/// norm, so both the as-printed and the self-normalized readings are at hand.
struct Expectation {
  double value;
  double measured_norm;

  double self_normalized() const { return value / measured_norm; }
};

/// "<rho^-k>" with the pairing used in the printed closed forms:
/// k = 3 is the integral of R^2 / rho and k = 4 the integral of R^2 / rho^2.
/// In general the quadrature route integrates R^2 rho^{-(k-2)}, k in 1..4.
Expectation expectation_inverse_power(const RadialState& state, int k, ExpectationMethod method);

/// Closed Laguerre-integral values of the integral of R^2 rho^power for the
/// closed-form normalization, power in {0, -1, -2}:
///   1/|E|,  1/(2|E| n),  1/(2|E| n (2l+1)).
double laguerre_identity_moment(const RadialState& state, int power);

/// Lambda(E) = varsigma(E)^2 / (4 n^2) - 1/4: eigenvalue of the unperturbed
/// rho-space bracket operator for principal number n; its root is E0.
double bracket_eigenvalue(const PhysicalParams& params, int n, double energy);

/// dLambda/dE by a five-point central difference.
double bracket_eigenvalue_slope(const PhysicalParams& params, int n, double energy);

enum class ShiftRoute { paper, matrix };

std::string_view to_string(ShiftRoute route);

/// Energy shift per unit (m theta) for the given route; ell >= 1.
double nc_shift_coefficient(const PhysicalParams& params, const QuantumNumbers& qn, ShiftRoute route);

/// First-order shift Delta E = m theta K.
double nc_energy_shift(const PhysicalParams& params, const QuantumNumbers& qn, ShiftRoute route);

struct NCShift {
  QuantumNumbers qn;
  double delta_e_paper;
  double delta_e_matrix;
  std::optional<double> delta_e_oracle;
};

NCShift nc_shift(const PhysicalParams& params, const QuantumNumbers& qn);

struct Sublevel {
  int m;
  double shift;
  double total;
};

struct SplittingReport {
  int n = 0;
  int ell = 0;
  double base_energy = 0.0;
  std::vector<Sublevel> sublevels;
  std::string annotation;  // empty unless the level has no splitting
};

SplittingReport split_level(const PhysicalParams& params, int n, int ell, ShiftRoute route);

}  // namespace kgnc
