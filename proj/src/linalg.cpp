#include "rankcop/linalg.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "rankcop/errors.hpp"

namespace rankcop {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(std::string(who) + ": matrix must be square and non-empty");
  }
}

void require_symmetric(const Matrix& m, const char* who) {
  const double scale = m.cwiseAbs().maxCoeff();
  const double tol = 1e-12 * (scale > 0.0 ? scale : 1.0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - m(j, i)) > tol) {
        throw Error(std::string(who) + ": matrix is not symmetric at (" +
                    std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace

Matrix cholesky(const Matrix& m) {
  require_square(m, "cholesky");
  require_symmetric(m, "cholesky");
  const Eigen::Index n = m.rows();
  const double pivot_tol = 1e-12 * m.diagonal().maxCoeff();
  Matrix l = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = m(j, j);
    for (Eigen::Index k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > pivot_tol)) {
      throw NotPositiveDefiniteError(
          "cholesky: pivot " + std::to_string(d) + " at index " +
          std::to_string(j) + " is not positive");
    }
    l(j, j) = std::sqrt(d);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

Matrix spd_inverse(const Matrix& m) {
  const Matrix l = cholesky(m);
  const Eigen::Index n = m.rows();
  Matrix inv = Matrix::Identity(n, n);
  l.triangularView<Eigen::Lower>().solveInPlace(inv);
  l.transpose().triangularView<Eigen::Upper>().solveInPlace(inv);
  // Triangular solves leave asymmetry at rounding level; remove it so the
  // result passes downstream symmetry checks.
  inv = ((inv + inv.transpose()) * 0.5).eval();
  return inv;
}

SpdMatrix::SpdMatrix(Matrix m) : mat_(std::move(m)) {
  require_square(mat_, "SpdMatrix");
  require_symmetric(mat_, "SpdMatrix");
  chol_ = cholesky(mat_);
}

CorrelationMatrix::CorrelationMatrix(Matrix m) : mat_(std::move(m)) {
  require_square(mat_, "CorrelationMatrix");
  require_symmetric(mat_, "CorrelationMatrix");
  const Eigen::Index n = mat_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (mat_(i, i) != 1.0) {
      throw Error("CorrelationMatrix: diagonal entry " + std::to_string(i) +
                  " is not exactly 1");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!(std::abs(mat_(i, j)) <= 1.0)) {
        throw Error("CorrelationMatrix: entry (" + std::to_string(i) + ", " +
                    std::to_string(j) + ") outside [-1, 1]");
      }
    }
  }
  // Positive semidefinite up to rounding: a small ridge must factor cleanly.
  Matrix ridged = mat_;
  ridged.diagonal().array() += 1e-8;
  try {
    cholesky(ridged);
  } catch (const NotPositiveDefiniteError&) {
    throw Error("CorrelationMatrix: matrix is not positive semidefinite");
  }
}

CorrelationMatrix cov_to_corr(const SpdMatrix& v) {
  const Matrix& m = v.mat();
  const Eigen::Index n = m.rows();
  const Vector inv_sd = m.diagonal().array().sqrt().inverse();
  Matrix c(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    c(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double r = m(i, j) * inv_sd(i) * inv_sd(j);
      // Cauchy-Schwarz bounds |r| by 1 exactly; clip rounding spill.
      if (r > 1.0) r = 1.0;
      if (r < -1.0) r = -1.0;
      c(i, j) = r;
      c(j, i) = r;
    }
  }
  return CorrelationMatrix(std::move(c));
}

}  // namespace rankcop
