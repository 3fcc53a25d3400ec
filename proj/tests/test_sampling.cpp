#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "rankcop/errors.hpp"
#include "rankcop/normal.hpp"
#include "rankcop/sampling.hpp"

using rankcop::Matrix;
using rankcop::normal_cdf;
using rankcop::RngStream;
using rankcop::sample_inverse_wishart;
using rankcop::sample_mvn;
using rankcop::sample_truncated_normal;
using rankcop::sample_wishart;
using rankcop::SpdMatrix;
using rankcop::Vector;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("unbounded truncation is exactly a plain normal draw") {
  RngStream a(8), b(8);
  for (int i = 0; i < 50; ++i) {
    CHECK(sample_truncated_normal(a, 1.5, 2.0, -kInf, kInf) ==
          b.normal(1.5, 2.0));
  }
}

TEST_CASE("half-normal moments") {
  RngStream rng(101);
  const int n = 200000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = sample_truncated_normal(rng, 0.0, 1.0, 0.0, kInf);
    REQUIRE(x > 0.0);
    sum += x;
  }
  CHECK(std::abs(sum / n - std::sqrt(2.0 / M_PI)) < 0.01);
}

TEST_CASE("two-sided truncated mean matches the closed form") {
  // mean = mu + sigma (phi(a) - phi(b)) / (Phi(b) - Phi(a)).
  const double mu = 1.0, sigma = 2.0, lo = 0.5, hi = 3.5;
  const double a = (lo - mu) / sigma, b = (hi - mu) / sigma;
  const auto phi = [](double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * M_PI);
  };
  const double expected =
      mu + sigma * (phi(a) - phi(b)) / (normal_cdf(b) - normal_cdf(a));
  RngStream rng(7);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = sample_truncated_normal(rng, mu, sigma, lo, hi);
    REQUIRE(x > lo);
    REQUIRE(x < hi);
    sum += x;
  }
  CHECK(std::abs(sum / n - expected) < 0.01);
}

TEST_CASE("deep right tail stays strictly inside (8, 9)") {
  RngStream rng(55);
  double lo_seen = kInf, hi_seen = -kInf, sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double x = sample_truncated_normal(rng, 0.0, 1.0, 8.0, 9.0);
    REQUIRE(std::isfinite(x));
    REQUIRE(x > 8.0);
    REQUIRE(x < 9.0);
    lo_seen = std::min(lo_seen, x);
    hi_seen = std::max(hi_seen, x);
    sum += x;
  }
  // Tail mass concentrates just above the lower bound.
  CHECK(sum / n > 8.0);
  CHECK(sum / n < 8.3);
  CHECK(lo_seen < 8.01);
}

TEST_CASE("deep left tail mirrors the right tail") {
  RngStream rng(56);
  for (int i = 0; i < 20000; ++i) {
    const double x = sample_truncated_normal(rng, 0.0, 1.0, -9.0, -8.0);
    REQUIRE(x > -9.0);
    REQUIRE(x < -8.0);
  }
}

TEST_CASE("bounds beyond the CDF's resolution still produce draws") {
  // Phi(40) and Phi(41) both round to 1; the rejection fallback must engage.
  RngStream rng(57);
  for (int i = 0; i < 1000; ++i) {
    const double x = sample_truncated_normal(rng, 0.0, 1.0, 40.0, 41.0);
    REQUIRE(x > 40.0);
    REQUIRE(x < 41.0);
  }
}

TEST_CASE("draws stay strictly inside across a grid of intervals") {
  RngStream rng(58);
  const double bounds[] = {-6.0, -2.0, -0.5, 0.0, 0.3, 1.0, 4.5, 7.0};
  for (double lo : bounds) {
    for (double hi : bounds) {
      if (!(lo < hi)) continue;
      for (int i = 0; i < 300; ++i) {
        const double x = sample_truncated_normal(rng, 0.5, 1.5, lo, hi);
        REQUIRE(x > lo);
        REQUIRE(x < hi);
      }
    }
  }
}

TEST_CASE("an interval with no interior double is rejected") {
  RngStream rng(59);
  const double lo = 3.0;
  const double hi = std::nextafter(lo, 4.0);
  CHECK_THROWS_AS(sample_truncated_normal(rng, 0.0, 1.0, lo, hi),
                  rankcop::DegenerateIntervalError);
}

TEST_CASE("truncated normal precondition checks") {
  RngStream rng(60);
  CHECK_THROWS_AS(sample_truncated_normal(rng, 0.0, 0.0, 0.0, 1.0),
                  rankcop::Error);
  CHECK_THROWS_AS(sample_truncated_normal(rng, 0.0, -1.0, 0.0, 1.0),
                  rankcop::Error);
  CHECK_THROWS_AS(sample_truncated_normal(rng, 0.0, 1.0, 2.0, 2.0),
                  rankcop::Error);
  CHECK_THROWS_AS(sample_truncated_normal(rng, 0.0, 1.0, 2.0, 1.0),
                  rankcop::Error);
}

TEST_CASE("truncated draws are reproducible by seed") {
  RngStream a(61), b(61);
  for (int i = 0; i < 200; ++i) {
    CHECK(sample_truncated_normal(a, 0.3, 1.2, -0.5, 2.0) ==
          sample_truncated_normal(b, 0.3, 1.2, -0.5, 2.0));
  }
}

TEST_CASE("one-dimensional Wishart is a scaled chi-square") {
  Matrix s(1, 1);
  s << 2.0;
  const SpdMatrix scale(s);
  RngStream rng(70);
  const int n = 200000;
  const int dof = 5;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = sample_wishart(rng, dof, scale).mat()(0, 0);
    REQUIRE(w > 0.0);
    sum += w;
    sumsq += w * w;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::abs(mean - dof * 2.0) < 0.1);         // E = dof * s
  CHECK(std::abs(var - 2.0 * dof * 4.0) < 1.2);    // Var = 2 dof s^2
}

TEST_CASE("Wishart mean is dof times the scale matrix") {
  Matrix s(2, 2);
  s << 2.0, 0.5, 0.5, 1.0;
  const SpdMatrix scale(s);
  RngStream rng(71);
  const int n = 50000;
  const int dof = 50;
  Matrix acc = Matrix::Zero(2, 2);
  for (int i = 0; i < n; ++i) {
    acc += sample_wishart(rng, dof, scale).mat();
  }
  const Matrix mean = acc / (n * dof);
  CHECK((mean - s).cwiseAbs().maxCoeff() < 0.02);
}

TEST_CASE("Wishart draws at minimal dof are positive definite") {
  RngStream rng(72);
  const SpdMatrix scale(Matrix::Identity(3, 3));
  for (int i = 0; i < 500; ++i) {
    // SpdMatrix construction inside sample_wishart revalidates the draw.
    CHECK_NOTHROW(sample_wishart(rng, 3, scale));
  }
}

TEST_CASE("Wishart rejects dof below the dimension") {
  RngStream rng(73);
  const SpdMatrix scale(Matrix::Identity(3, 3));
  CHECK_THROWS_AS(sample_wishart(rng, 2, scale), rankcop::Error);
  CHECK_THROWS_AS(sample_inverse_wishart(rng, 2, scale), rankcop::Error);
}

TEST_CASE("inverse-Wishart precision has mean dof times inverse scale") {
  Matrix s = 2.0 * Matrix::Identity(2, 2);
  const SpdMatrix scale(s);
  RngStream rng(74);
  const int n = 30000;
  const int dof = 10;
  Matrix acc = Matrix::Zero(2, 2);
  for (int i = 0; i < n; ++i) {
    acc += rankcop::spd_inverse(sample_inverse_wishart(rng, dof, scale).mat());
  }
  const Matrix mean = acc / n;
  const Matrix expected = dof * rankcop::spd_inverse(s);  // 5 I
  CHECK((mean - expected).cwiseAbs().maxCoeff() < 0.1);
}

TEST_CASE("Wishart and inverse-Wishart draws are reproducible by seed") {
  const SpdMatrix scale(Matrix::Identity(3, 3));
  RngStream a(75), b(75);
  for (int i = 0; i < 20; ++i) {
    const Matrix wa = sample_wishart(a, 6, scale).mat();
    const Matrix wb = sample_wishart(b, 6, scale).mat();
    CHECK((wa - wb).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("multivariate normal draws recover the covariance") {
  Matrix c(2, 2);
  c << 1.0, 0.8, 0.8, 1.0;
  const Matrix l = rankcop::cholesky(c);
  RngStream rng(76);
  const int n = 100000;
  Matrix acc = Matrix::Zero(2, 2);
  for (int i = 0; i < n; ++i) {
    const Vector z = sample_mvn(rng, l);
    acc += z * z.transpose();
  }
  const Matrix cov = acc / n;
  CHECK((cov - c).cwiseAbs().maxCoeff() < 0.02);
}
