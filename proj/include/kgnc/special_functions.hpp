#pragma once

// Generalized Laguerre polynomials and log-space factorial ratios.

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "kgnc/errors.hpp"

namespace kgnc {

/// Degree k and order alpha of L^alpha_k.
template <typename Scalar>
struct LaguerreSpec {
  int degree = 0;
  Scalar order = Scalar(0);

  void validate() const {
    if (degree < 0) {
      throw DomainError("Laguerre degree must be >= 0, got " + std::to_string(degree));
    }
    if (!(order > Scalar(-1))) {
      throw DomainError("Laguerre order must be > -1");
    }
  }
};

/// Evaluates L^alpha_k(x) by the forward three-term recurrence
///   (j+1) L_{j+1} = (2j + 1 + alpha - x) L_j - (j + alpha) L_{j-1}.
template <typename Scalar>
Scalar laguerre_eval(const LaguerreSpec<Scalar>& spec, Scalar x) {
  spec.validate();
  if (!(x >= Scalar(0))) {
    throw DomainError("Laguerre evaluation restricted to x >= 0");
  }
  const Scalar alpha = spec.order;
  Scalar prev = Scalar(1);
  if (spec.degree == 0) return prev;
  Scalar curr = Scalar(1) + alpha - x;
  for (int j = 1; j < spec.degree; ++j) {
    Scalar next = ((Scalar(2 * j + 1) + alpha - x) * curr - (Scalar(j) + alpha) * prev) / Scalar(j + 1);
    prev = std::exchange(curr, next);
  }
  return curr;
}

/// d/dx L^alpha_k(x) = -L^{alpha+1}_{k-1}(x).
template <typename Scalar>
Scalar laguerre_derivative(const LaguerreSpec<Scalar>& spec, Scalar x) {
  spec.validate();
  if (!(x >= Scalar(0))) {
    throw DomainError("Laguerre evaluation restricted to x >= 0");
  }
  if (spec.degree == 0) return Scalar(0);
  return -laguerre_eval(LaguerreSpec<Scalar>{spec.degree - 1, spec.order + Scalar(1)}, x);
}

/// ln(a!/b!) summed over the shorter of the two ranges.
inline double log_factorial_ratio(int a, int b) {
  if (a < 0 || b < 0) {
    throw DomainError("factorial arguments must be nonnegative");
  }
  if (a == b) return 0.0;
  const int lo = a < b ? a : b;
  const int hi = a < b ? b : a;
  double sum = 0.0;
  for (int i = lo + 1; i <= hi; ++i) sum += std::log(static_cast<double>(i));
  return a > b ? sum : -sum;
}

}  // namespace kgnc
