#include "kgnc/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kgnc {

Eigen::Index sturm_count(const SymmetricTridiagonal& t, double x) {
  const Eigen::Index n = t.size();
  constexpr double kTiny = std::numeric_limits<double>::min();
  Eigen::Index negatives = 0;
  double pivot = t.diagonal(0) - x;
  if (pivot == 0.0) pivot = -kTiny;
  if (pivot < 0.0) ++negatives;
  for (Eigen::Index i = 1; i < n; ++i) {
    const double e = t.off_diagonal(i - 1);
    pivot = t.diagonal(i) - x - e * e / pivot;
    if (pivot == 0.0) pivot = -kTiny;
    if (pivot < 0.0) ++negatives;
  }
  return negatives;
}

Eigen::VectorXd lowest_eigenvalues(const SymmetricTridiagonal& t, Eigen::Index count) {
  const Eigen::Index n = t.size();
  count = std::min(count, n);
  // Gershgorin bounds
  double lower = std::numeric_limits<double>::infinity();
  double upper = -lower;
  for (Eigen::Index i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.off_diagonal(i - 1));
    if (i + 1 < n) radius += std::abs(t.off_diagonal(i));
    lower = std::min(lower, t.diagonal(i) - radius);
    upper = std::max(upper, t.diagonal(i) + radius);
  }
  const double scale = std::max(std::abs(lower), std::abs(upper));
  constexpr double eps = std::numeric_limits<double>::epsilon();

  Eigen::VectorXd values(count);
  double floor = lower;
  for (Eigen::Index j = 0; j < count; ++j) {
    double lo = floor;
    double hi = upper;
    // eigenvalue j is the smallest x with sturm_count(x) > j
    for (int iter = 0; iter < 2000; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (hi - lo <= 2.0 * eps * (std::abs(lo) + std::abs(hi)) + 1e-3 * eps * scale) break;
      if (sturm_count(t, mid) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    values(j) = 0.5 * (lo + hi);
    floor = lo;
  }
  return values;
}

Eigen::VectorXd eigenvector(const SymmetricTridiagonal& t, double eigenvalue) {
  const Eigen::Index n = t.size();
  const double shift =
      eigenvalue + 1e-10 * std::max(1.0, std::abs(eigenvalue));  // keeps T - shift nonsingular
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
  Eigen::VectorXd c(n);
  Eigen::VectorXd rhs(n);
  for (int sweep = 0; sweep < 3; ++sweep) {
    // Thomas algorithm on (T - shift I) x = v
    double denom = t.diagonal(0) - shift;
    c(0) = n > 1 ? t.off_diagonal(0) / denom : 0.0;
    rhs(0) = v(0) / denom;
    for (Eigen::Index i = 1; i < n; ++i) {
      const double e = t.off_diagonal(i - 1);
      denom = t.diagonal(i) - shift - e * c(i - 1);
      if (denom == 0.0) denom = std::numeric_limits<double>::min();
      c(i) = i + 1 < n ? t.off_diagonal(i) / denom : 0.0;
      rhs(i) = (v(i) - e * rhs(i - 1)) / denom;
    }
    for (Eigen::Index i = n - 2; i >= 0; --i) rhs(i) -= c(i) * rhs(i + 1);
    v = rhs.normalized();
  }
  return v;
}

int count_sign_changes(const Eigen::VectorXd& v, double floor) {
  const double cutoff = floor * v.cwiseAbs().maxCoeff();
  int changes = 0;
  double last = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) <= cutoff) continue;
    if (last != 0.0 && (v(i) > 0.0) != (last > 0.0)) ++changes;
    last = v(i);
  }
  return changes;
}

}  // namespace kgnc
