#pragma once

// Symmetric tridiagonal eigenvalues by Sturm-sequence bisection.

#include <Eigen/Dense>

namespace kgnc {

struct SymmetricTridiagonal {
  Eigen::VectorXd diagonal;
  Eigen::VectorXd off_diagonal;  // size diagonal.size() - 1

  Eigen::Index size() const { return diagonal.size(); }
};

/// Number of eigenvalues strictly less than x (count of negative pivots of
/// the LDL^T factorization of T - xI).
Eigen::Index sturm_count(const SymmetricTridiagonal& t, double x);

/// Lowest `count` eigenvalues in ascending order.
Eigen::VectorXd lowest_eigenvalues(const SymmetricTridiagonal& t, Eigen::Index count);

/// Unit eigenvector for a converged eigenvalue, by inverse iteration.
Eigen::VectorXd eigenvector(const SymmetricTridiagonal& t, double eigenvalue);

/// Interior sign changes, ignoring entries below `floor` * max|v|.
int count_sign_changes(const Eigen::VectorXd& v, double floor = 1e-10);

}  // namespace kgnc
