#include "kgnc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kgnc {

void GridSpec::validate() const {
  if (points < 100) throw DomainError("grid needs at least 100 points, got " + std::to_string(points));
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw DomainError("grid r_max must be > 0");
}

GridSpec default_grid(const PhysicalParams& params, const QuantumNumbers& qn, int points) {
  params.validate();
  const double kappa = std::min(2.0 * params.mass * params.z_alpha / qn.n, params.mass);
  return {60.0 / kappa, points};
}

SymmetricTridiagonal radial_operator(const PhysicalParams& params, int ell, double trial_energy, int m,
                                     const GridSpec& grid) {
  params.validate();
  grid.validate();
  if (ell < 0) throw DomainError("ell must be >= 0");
  const double h = grid.spacing();
  const double coulomb = 2.0 * (params.mass + trial_energy) * params.z_alpha;
  const double centrifugal = static_cast<double>(ell * (ell + 1));
  // first interior node must sit well inside the Coulomb length and, for
  // ell >= 1, inside the centrifugal barrier
  if (coulomb > 0.0 && h > 0.2 / coulomb) {
    throw NumericError("grid too coarse: spacing " + std::to_string(h) + " exceeds 0.1 Coulomb lengths");
  }
  if (ell > 0 && centrifugal / (h * h) < coulomb / h) {
    throw NumericError("grid too coarse to resolve the centrifugal barrier at the first node");
  }
  const bool with_theta = params.theta > 0.0 && m != 0;
  const double m_theta = m * params.theta;

  SymmetricTridiagonal t;
  t.diagonal.resize(grid.points);
  t.off_diagonal = Eigen::VectorXd::Constant(grid.points - 1, -1.0 / (h * h));
  for (int i = 0; i < grid.points; ++i) {
    const double r = (i + 1) * h;
    double v = centrifugal / (r * r) - coulomb / r;
    if (with_theta) {
      v += m_theta / (2.0 * r) * (2.0 * centrifugal / (r * r * r) - coulomb / (r * r));
    }
    t.diagonal(i) = 2.0 / (h * h) + v;
  }
  return t;
}

Eigen::VectorXd eigen_fixed_e(const PhysicalParams& params, int ell, double trial_energy, int m,
                              const GridSpec& grid, int count) {
  return lowest_eigenvalues(radial_operator(params, ell, trial_energy, m, grid), count);
}

namespace {

double map_to_energy(double lambda, double mass, double current) {
  if (lambda <= -mass * mass) {
    throw NumericError("eigenvalue " + std::to_string(lambda) + " <= -M^2 has no bound-state energy");
  }
  // lambda >= 0 is at or above threshold; pin to E = M
  const double magnitude = std::sqrt(mass * mass + std::min(lambda, 0.0));
  return current >= 0.0 ? magnitude : -magnitude;
}

OracleResult iterate(const PhysicalParams& params, const QuantumNumbers& qn, int m, const GridSpec& grid,
                     const IterationOptions& options, double start) {
  const int index = qn.radial_degree();
  OracleResult result;
  result.grid = grid;
  double energy = start;
  for (int k = 1; k <= options.max_iter; ++k) {
    const auto lambdas = eigen_fixed_e(params, qn.ell, energy, m, grid, index + 1);
    const double mapped = map_to_energy(lambdas(index), params.mass, energy);
    const double next = (1.0 - options.damping) * energy + options.damping * mapped;
    result.iterations = k;
    result.residual = std::abs(next - energy);
    energy = next;
    if (result.residual <= options.tol) {
      result.converged = true;
      break;
    }
  }
  result.energy = energy;
  return result;
}

double starting_energy(const PhysicalParams& params, const QuantumNumbers& qn) {
  const double kappa = std::min(2.0 * params.mass * params.z_alpha / qn.n, params.mass);
  return std::sqrt(params.mass * params.mass - kappa * kappa);
}

}  // namespace

OracleResult solve_selfconsistent(const PhysicalParams& params, const QuantumNumbers& qn, const GridSpec& grid,
                                  const IterationOptions& options) {
  params.validate();
  qn.validate();
  if (!(options.tol > 0.0)) throw DomainError("tolerance must be > 0");
  return iterate(params, qn, qn.m, grid, options, starting_energy(params, qn));
}

RichardsonEstimate richardson(double coarse, double fine) { return {coarse, fine, (4.0 * fine - coarse) / 3.0}; }

RichardsonEstimate solve_extrapolated(const PhysicalParams& params, const QuantumNumbers& qn, const GridSpec& grid,
                                      const IterationOptions& options) {
  const auto coarse = solve_selfconsistent(params, qn, grid, options);
  const auto fine = solve_selfconsistent(params, qn, grid.refined(), options);
  if (!coarse.converged || !fine.converged) {
    throw NumericError("self-consistent iteration did not converge");
  }
  return richardson(coarse.energy, fine.energy);
}

double nc_shift_nonperturbative(const PhysicalParams& params, const QuantumNumbers& qn, const GridSpec& grid,
                                const IterationOptions& options) {
  params.validate();
  qn.validate();
  if (qn.ell < 1) throw SingularFormulaError("nonperturbative shift requires ell >= 1");

  PhysicalParams commutative = params;
  commutative.theta = 0.0;
  const auto base = iterate(commutative, qn, 0, grid, options, starting_energy(params, qn));
  if (!base.converged) throw NumericError("theta = 0 solve did not converge");
  if (params.theta == 0.0 || qn.m == 0) return base.energy - base.energy;

  // the theta term must leave the tracked level and those below it in place
  const int index = qn.radial_degree();
  const auto unperturbed = eigen_fixed_e(commutative, qn.ell, base.energy, 0, grid, index + 2);
  const auto perturbed = eigen_fixed_e(params, qn.ell, base.energy, qn.m, grid, index + 2);
  for (int j = 0; j <= index; ++j) {
    double gap = unperturbed(j + 1) - unperturbed(j);
    if (j > 0) gap = std::min(gap, unperturbed(j) - unperturbed(j - 1));
    if (std::abs(perturbed(j) - unperturbed(j)) > 0.5 * gap) {
      throw AmbiguityError("theta term reorders the radial levels (level crossing near the origin); use a smaller theta");
    }
  }

  const auto shifted = iterate(params, qn, qn.m, grid, options, base.energy);
  if (!shifted.converged) throw NumericError("theta > 0 solve did not converge");
  return shifted.energy - base.energy;
}

}  // namespace kgnc
