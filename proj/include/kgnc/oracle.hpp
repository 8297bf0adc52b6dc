#pragma once

// Nonperturbative finite-difference oracle for the radial Klein-Gordon
// equation in r, with the energy-dependent effective potential handled by a
// damped fixed-point iteration.

#include <Eigen/Dense>

#include "kgnc/spectrum.hpp"
#include "kgnc/tridiagonal.hpp"

namespace kgnc {

/// Uniform interior grid r_i = i h, i = 1..points, h = r_max / (points + 1),
/// Dirichlet at r = 0 and r = r_max.
struct GridSpec {
  double r_max = 60.0;
  int points = 4000;

  double spacing() const { return r_max / (points + 1); }
  void validate() const;
  /// Same r_max, half the spacing.
  GridSpec refined() const { return {r_max, 2 * points + 1}; }
};

/// r_max = 60 / kappa_est with the hydrogenic decay estimate
/// kappa_est = 2 M Z alpha / n (capped at M).
GridSpec default_grid(const PhysicalParams& params, const QuantumNumbers& qn, int points = 4000);

/// Second-difference discretization of
///   -d^2/dr^2 + V_eff(r; E) + W_r(r; E, m),
///   W_r = (m theta / 2r) [2 l(l+1)/r^3 - 2(E+M) Z alpha / r^2].
SymmetricTridiagonal radial_operator(const PhysicalParams& params, int ell, double trial_energy, int m,
                                     const GridSpec& grid);

/// Lowest `count` eigenvalues of radial_operator; at self-consistency the
/// eigenvalue of the tracked level equals E^2 - M^2.
Eigen::VectorXd eigen_fixed_e(const PhysicalParams& params, int ell, double trial_energy, int m,
                              const GridSpec& grid, int count = 3);

struct OracleResult {
  double energy = 0.0;
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;
  GridSpec grid;
};

struct IterationOptions {
  double tol = 1e-13;
  int max_iter = 500;
  double damping = 0.5;
};

/// Tracks the level with n - l - 1 radial nodes. Non-convergence is reported
/// through `converged`, not thrown.
OracleResult solve_selfconsistent(const PhysicalParams& params, const QuantumNumbers& qn, const GridSpec& grid,
                                  const IterationOptions& options = {});

struct RichardsonEstimate {
  double coarse;
  double fine;
  double extrapolated;  // (4 fine - coarse) / 3
};

RichardsonEstimate richardson(double coarse, double fine);

/// Self-consistent energy on `grid` and its refinement, extrapolated.
RichardsonEstimate solve_extrapolated(const PhysicalParams& params, const QuantumNumbers& qn, const GridSpec& grid,
                                      const IterationOptions& options = {});

/// E(theta) - E(0) from two self-consistent solves on one grid. Requires
/// ell >= 1. Throws AmbiguityError when the theta term reorders the levels.
double nc_shift_nonperturbative(const PhysicalParams& params, const QuantumNumbers& qn, const GridSpec& grid,
                                const IterationOptions& options = {});

}  // namespace kgnc
