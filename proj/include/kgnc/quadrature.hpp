#pragma once

// Generalized Gauss-Laguerre quadrature on [0, inf) against e^{-x} x^alpha.

#include <Eigen/Dense>
#include <cmath>
#include <sstream>
#include <string>

#include "kgnc/errors.hpp"

namespace kgnc {

template <typename Scalar>
struct QuadratureRule {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  int order = 0;
  Scalar weight_exponent = Scalar(0);
  Vector nodes;
  Vector weights;
};

inline constexpr int kMaxQuadratureOrder = 512;

/// Golub-Welsch: the nodes are the eigenvalues of the symmetric tridiagonal
/// Jacobi matrix with diagonal 2k+alpha+1 and off-diagonal sqrt(k(k+alpha)).
/// The weight of node x is Gamma(alpha+1) times the squared first component of
/// its normalized eigenvector. That eigenvector is (p_0(x), ..., p_{n-1}(x))
/// in the orthonormal Laguerre basis, so the weight is
/// Gamma(alpha+1) / sum_k p_k(x)^2; summing positive terms keeps the tiny
/// tail weights accurate to full relative precision.
/// Tail weights below the smallest normal double flush to zero at large order.
template <typename Scalar>
QuadratureRule<Scalar> gauss_laguerre_rule_scaled(int order, Scalar weight_exponent, Scalar moment0) {
  using std::sqrt;
  using Vector = typename QuadratureRule<Scalar>::Vector;
  if (order < 1 || order > kMaxQuadratureOrder) {
    throw DomainError("quadrature order must be in [1, 512], got " + std::to_string(order));
  }
  if (!(weight_exponent > Scalar(-1))) {
    throw DomainError("weight exponent must be > -1");
  }
  const Scalar alpha = weight_exponent;

  Vector diag(order);
  Vector sub(order > 1 ? order - 1 : 0);
  for (int k = 0; k < order; ++k) diag(k) = Scalar(2 * k + 1) + alpha;
  for (int k = 1; k < order; ++k) sub(k - 1) = sqrt(Scalar(k) * (Scalar(k) + alpha));

  QuadratureRule<Scalar> rule;
  rule.order = order;
  rule.weight_exponent = alpha;
  rule.weights.resize(order);

  if (order == 1) {
    rule.nodes = diag;
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw DomainError("Jacobi matrix eigensolve failed");
    }
    rule.nodes = solver.eigenvalues();
  }

  constexpr Scalar kRescale = Scalar(1e100);
  for (int i = 0; i < order; ++i) {
    const Scalar x = rule.nodes(i);
    // orthonormal recurrence: b_{k+1} p_{k+1} = (x - a_k) p_k - b_k p_{k-1}
    Scalar p_prev = Scalar(0);
    Scalar p = Scalar(1);
    Scalar sum = Scalar(1);
    Scalar log_scale = Scalar(0);  // true values are stored values * exp(log_scale)
    for (int k = 0; k + 1 < order; ++k) {
      const Scalar b_prev = k > 0 ? sub(k - 1) : Scalar(0);
      const Scalar next = ((x - diag(k)) * p - b_prev * p_prev) / sub(k);
      p_prev = p;
      p = next;
      sum += p * p;
      if (std::abs(p) > kRescale) {
        p /= kRescale;
        p_prev /= kRescale;
        sum /= kRescale * kRescale;
        log_scale += std::log(kRescale);
      }
    }
    rule.weights(i) = moment0 / sum * std::exp(Scalar(-2) * log_scale);
  }
  return rule;
}

template <typename Scalar>
QuadratureRule<Scalar> gauss_laguerre_rule(int order, Scalar weight_exponent) {
  using std::tgamma;
  return gauss_laguerre_rule_scaled(order, weight_exponent, tgamma(weight_exponent + Scalar(1)));
}

/// Same nodes with weights rescaled to sum to one, for weight exponents whose
/// Gamma(alpha + 1) overflows; the caller carries lgamma(alpha + 1).
template <typename Scalar>
QuadratureRule<Scalar> gauss_laguerre_rule_unit_mass(int order, Scalar weight_exponent) {
  return gauss_laguerre_rule_scaled(order, weight_exponent, Scalar(1));
}

/// Returns sum_i w_i f(x_i); the weight e^{-x} x^alpha is not applied to f.
template <typename Scalar, typename F>
Scalar integrate_halfline(F&& f, const QuadratureRule<Scalar>& rule) {
  Scalar total = Scalar(0);
  for (int i = 0; i < rule.order; ++i) {
    const Scalar x = rule.nodes(i);
    const Scalar fx = f(x);
    if (!std::isfinite(static_cast<double>(fx))) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrand is not finite at quadrature node " << i << " (x = " << x << ")";
      throw EvaluationError(msg.str(), static_cast<double>(x));
    }
    total += rule.weights(i) * fx;
  }
  return total;
}

/// Smallest order integrating a polynomial of the given degree exactly, plus
/// `guard` extra nodes.
inline int exact_order_for_degree(int polynomial_degree, int guard = 8) {
  return (polynomial_degree + 2) / 2 + guard;
}

}  // namespace kgnc
