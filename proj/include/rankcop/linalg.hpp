#pragma once

#include <Eigen/Dense>

namespace rankcop {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
// Throws Error on an asymmetric input and NotPositiveDefiniteError when any
// pivot falls at or below 1e-12 times the largest diagonal entry.
Matrix cholesky(const Matrix& m);

// Inverse of a symmetric positive definite matrix via its Cholesky factor.
// The result is symmetrized exactly.
Matrix spd_inverse(const Matrix& m);

// Validated symmetric positive definite matrix. Construction runs the
// symmetry and pivot checks once and caches the Cholesky factor.
class SpdMatrix {
 public:
  explicit SpdMatrix(Matrix m);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }
  const Matrix& chol() const { return chol_; }

 private:
  Matrix mat_;
  Matrix chol_;
};

// Correlation matrix: exactly unit diagonal, off-diagonal entries in [-1, 1],
// positive semidefinite (checked to within a 1e-8 ridge).
class CorrelationMatrix {
 public:
  explicit CorrelationMatrix(Matrix m);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }
  double operator()(int i, int j) const { return mat_(i, j); }

 private:
  Matrix mat_;
};

// Rescale a covariance matrix to unit diagonal: c_ij = v_ij / sqrt(v_ii v_jj).
// Invariant under v -> D v D for positive diagonal D, and a fixed point on
// inputs that already have unit diagonal.
CorrelationMatrix cov_to_corr(const SpdMatrix& v);

}  // namespace rankcop
