#include "rankcop/sampling.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rankcop/errors.hpp"
#include "rankcop/normal.hpp"

namespace rankcop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this much CDF mass the inverse-CDF path has no resolution left.
constexpr double kDegenerateMass = 1e-14;
constexpr int kMaxRejection = 1000000;

// One-sided right-tail draw from the standard normal on (a, b) with a >= 0.
// Narrow intervals use a uniform proposal tilted by exp((a^2 - x^2)/2); wide
// or unbounded ones use Robert's exponential proposal. Returns a value
// strictly inside (a, b) or throws once the iteration budget is exhausted.
double right_tail_standard(RngStream& rng, double a, double b) {
  const bool narrow = std::isfinite(b) && (b - a) * std::max(a, 1.0) <= 0.5;
  if (narrow) {
    for (int iter = 0; iter < kMaxRejection; ++iter) {
      const double x = rng.uniform(a, b);
      if (x <= a || x >= b) continue;
      if (rng.uniform01() <= std::exp(0.5 * (a - x) * (a + x))) return x;
    }
  } else {
    const double alpha = 0.5 * (a + std::sqrt(a * a + 4.0));
    for (int iter = 0; iter < kMaxRejection; ++iter) {
      const double x = a - std::log(rng.uniform01()) / alpha;
      if (x <= a || x >= b) continue;
      const double d = x - alpha;
      if (rng.uniform01() <= std::exp(-0.5 * d * d)) return x;
    }
  }
  throw DegenerateIntervalError(
      "sample_truncated_normal: no draw strictly inside (" +
      std::to_string(a) + ", " + std::to_string(b) +
      ") on the standardized scale");
}

// Standard normal on (a, b) once the CDF mass is too small to invert.
double rejection_standard(RngStream& rng, double a, double b) {
  if (a >= 0.0) return right_tail_standard(rng, a, b);
  if (b <= 0.0) return -right_tail_standard(rng, -b, -a);
  // Interval straddles zero; reachable only through inverse-CDF fallback on
  // rounding, where acceptance is near certain.
  for (int iter = 0; iter < kMaxRejection; ++iter) {
    const double x = rng.normal();
    if (x > a && x < b) return x;
  }
  throw DegenerateIntervalError(
      "sample_truncated_normal: rejection failed on (" + std::to_string(a) +
      ", " + std::to_string(b) + ")");
}

}  // namespace

double sample_truncated_normal(RngStream& rng, double mu, double sigma,
                               double lo, double hi) {
  if (!(sigma > 0.0)) {
    throw Error("sample_truncated_normal: sigma must be positive");
  }
  if (!(lo < hi)) {
    throw Error("sample_truncated_normal: requires lo < hi");
  }
  if (lo == -kInf && hi == kInf) return rng.normal(mu, sigma);

  const double a = (lo - mu) / sigma;
  const double b = (hi - mu) / sigma;
  const double pa = (lo == -kInf) ? 0.0 : normal_cdf(a);
  const double pb = (hi == kInf) ? 1.0 : normal_cdf(b);

  if (pb - pa > kDegenerateMass) {
    for (int iter = 0; iter < 64; ++iter) {
      const double u = pa + (pb - pa) * rng.uniform01();
      if (u <= 0.0 || u >= 1.0) continue;
      const double x = mu + sigma * normal_quantile(u);
      if (x > lo && x < hi) return x;
    }
    // Rounding at the interval edge; fall through to rejection.
  }

  for (int iter = 0; iter < 64; ++iter) {
    const double z = rejection_standard(rng, a, b);
    const double x = mu + sigma * z;
    if (x > lo && x < hi) return x;
  }
  throw DegenerateIntervalError(
      "sample_truncated_normal: interval (" + std::to_string(lo) + ", " +
      std::to_string(hi) + ") admits no representable interior draw");
}

SpdMatrix sample_wishart(RngStream& rng, int dof, const SpdMatrix& scale) {
  const int p = scale.dim();
  if (dof < p) {
    throw Error("sample_wishart: dof " + std::to_string(dof) +
                " is below dimension " + std::to_string(p));
  }
  Matrix g(dof, p);
  for (int i = 0; i < dof; ++i) {
    for (int j = 0; j < p; ++j) g(i, j) = rng.normal();
  }
  const Matrix x = g * scale.chol().transpose();
  Matrix w = Matrix::Zero(p, p);
  w.selfadjointView<Eigen::Lower>().rankUpdate(x.transpose());
  Matrix full = w.selfadjointView<Eigen::Lower>();
  return SpdMatrix(std::move(full));
}

SpdMatrix sample_inverse_wishart(RngStream& rng, int dof,
                                 const SpdMatrix& scale) {
  const int p = scale.dim();
  if (dof < p) {
    throw Error("sample_inverse_wishart: dof " + std::to_string(dof) +
                " is below dimension " + std::to_string(p));
  }
  const SpdMatrix precision_scale(spd_inverse(scale.mat()));
  const SpdMatrix w = sample_wishart(rng, dof, precision_scale);
  return SpdMatrix(spd_inverse(w.mat()));
}

Vector sample_mvn(RngStream& rng, const Matrix& chol_lower) {
  Vector g(chol_lower.rows());
  for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = rng.normal();
  return chol_lower * g;
}

}  // namespace rankcop
