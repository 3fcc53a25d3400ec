#include "rankcop/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>
#include <string>

#include "rankcop/errors.hpp"
#include "rankcop/normal.hpp"
#include "rankcop/sampling.hpp"

namespace rankcop {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

PriorSpec::PriorSpec(int nu0_in, SpdMatrix v0_in)
    : nu0(nu0_in), v0(std::move(v0_in)) {
  if (nu0 < v0.dim() + 1) {
    throw UsageError("prior needs nu0 >= p + 1, got nu0 = " +
                     std::to_string(nu0) + " with p = " +
                     std::to_string(v0.dim()));
  }
}

PriorSpec PriorSpec::default_for(int p) {
  return PriorSpec(p + 2, SpdMatrix(Matrix::Identity(p, p)));
}

void McmcConfig::validate() const {
  if (burnin < 0 || nscan <= burnin) {
    throw UsageError("need nscan > burnin >= 0, got nscan = " +
                     std::to_string(nscan) + ", burnin = " +
                     std::to_string(burnin));
  }
  if (thin < 1) {
    throw UsageError("need thin >= 1, got " + std::to_string(thin));
  }
}

std::vector<double> PosteriorSamples::entry_series(int i, int j) const {
  std::vector<double> series;
  series.reserve(draws.size());
  for (const auto& c : draws) series.push_back(c(i, j));
  return series;
}

LatentState initialize_latent(const Dataset& data, RngStream& rng) {
  const int n = data.n();
  const int p = data.p();
  Matrix z(n, p);

  for (int j = 0; j < p; ++j) {
    const ObservedColumn& col = data.column(j);
    // Sort observed rows by (code, random tiebreak); position + 1 is the rank.
    std::vector<std::pair<std::pair<int, double>, int>> order;
    order.reserve(n);
    for (int i = 0; i < n; ++i) {
      if (!col.is_missing(i)) {
        order.push_back({{col.codes[i], rng.uniform01()}, i});
      }
    }
    std::sort(order.begin(), order.end());
    for (std::size_t r = 0; r < order.size(); ++r) {
      z(order[r].second, j) = normal_quantile((r + 1.0) / (n + 1.0));
    }
    for (int i = 0; i < n; ++i) {
      if (col.is_missing(i)) z(i, j) = rng.normal();
    }
  }

  if (n >= 2) {
    for (int j = 0; j < p; ++j) {
      const double mean = z.col(j).mean();
      z.col(j).array() -= mean;
      const double sd = std::sqrt(z.col(j).squaredNorm() / (n - 1));
      if (sd > 0.0) z.col(j) /= sd;
    }
    Matrix v = Matrix::Zero(p, p);
    v.selfadjointView<Eigen::Lower>().rankUpdate(z.transpose(),
                                                 1.0 / (n - 1));
    Matrix full = v.selfadjointView<Eigen::Lower>();
    if (n <= p) full.diagonal().array() += 1e-8;
    return LatentState{std::move(z), SpdMatrix(std::move(full))};
  }
  return LatentState{std::move(z), SpdMatrix(Matrix::Identity(p, p))};
}

ConditionalSpec conditional_spec(const SpdMatrix& v, int col) {
  const Matrix& m = v.mat();
  const int p = v.dim();
  Matrix rest(p - 1, p - 1);
  Vector cross(p - 1);
  for (int a = 0, i = 0; a < p; ++a) {
    if (a == col) continue;
    cross(i) = m(a, col);
    for (int b = 0, k = 0; b < p; ++b) {
      if (b == col) continue;
      rest(i, k) = m(a, b);
      ++k;
    }
    ++i;
  }
  ConditionalSpec spec;
  if (p == 1) {
    spec.weights = Vector(0);
    spec.sigma = std::sqrt(m(0, 0));
    return spec;
  }
  const Matrix l = cholesky(rest);
  Vector w = cross;
  l.triangularView<Eigen::Lower>().solveInPlace(w);
  l.transpose().triangularView<Eigen::Upper>().solveInPlace(w);
  spec.weights = std::move(w);
  const double s2 = m(col, col) - cross.dot(spec.weights);
  if (!(s2 > 0.0)) {
    throw NumericError("conditional variance for column " +
                       std::to_string(col) + " is not positive");
  }
  spec.sigma = std::sqrt(s2);
  return spec;
}

std::pair<double, double> conditional_normal_params(const LatentState& state,
                                                    int row, int col) {
  const ConditionalSpec spec = conditional_spec(state.v, col);
  const int p = static_cast<int>(state.z.cols());
  double mu = 0.0;
  for (int b = 0, k = 0; b < p; ++b) {
    if (b == col) continue;
    mu += state.z(row, b) * spec.weights(k);
    ++k;
  }
  return {mu, spec.sigma};
}

void update_latent_column(LatentState& state, int col, const Dataset& data,
                          RngStream& rng) {
  const ObservedColumn& column = data.column(col);
  const int n = data.n();
  const int p = data.p();
  const ConditionalSpec spec = conditional_spec(state.v, col);

  // Conditional means from the current other columns, fixed for the visit.
  Vector mu = Vector::Zero(n);
  for (int b = 0, k = 0; b < p; ++b) {
    if (b == col) continue;
    mu += state.z.col(b) * spec.weights(k);
    ++k;
  }

  const int levels = column.level_count();
  // Rows grouped by code, ascending row order inside each group.
  std::vector<int> offset(levels + 1, 0);
  for (int code : column.codes) {
    if (code >= 0) ++offset[code + 1];
  }
  for (int r = 0; r < levels; ++r) offset[r + 1] += offset[r];
  std::vector<int> rows_by_level(offset[levels]);
  {
    std::vector<int> fill = offset;
    for (int i = 0; i < n; ++i) {
      const int code = column.codes[i];
      if (code >= 0) rows_by_level[fill[code]++] = i;
    }
  }

  // Upper bounds come from levels not yet visited, so take suffix minima of
  // the pre-visit column; lower bounds track the maxima of fresh draws.
  std::vector<double> min_above(levels + 1, kInf);
  for (int i = 0; i < n; ++i) {
    const int code = column.codes[i];
    if (code >= 0) min_above[code] = std::min(min_above[code], state.z(i, col));
  }
  for (int r = levels - 1; r >= 0; --r) {
    min_above[r] = std::min(min_above[r], min_above[r + 1]);
  }

  double lower = -kInf;
  for (int r = 0; r < levels; ++r) {
    const double upper = min_above[r + 1];
    double level_max = -kInf;
    for (int idx = offset[r]; idx < offset[r + 1]; ++idx) {
      const int i = rows_by_level[idx];
      double draw;
      try {
        draw = sample_truncated_normal(rng, mu(i), spec.sigma, lower, upper);
      } catch (const NumericError& e) {
        throw NumericError("column " + column.name + ", row " +
                           std::to_string(i + 1) + ": " + e.what());
      }
      state.z(i, col) = draw;
      level_max = std::max(level_max, draw);
    }
    lower = std::max(lower, level_max);
  }

  for (int i = 0; i < n; ++i) {
    if (column.codes[i] < 0) state.z(i, col) = rng.normal(mu(i), spec.sigma);
  }
}

void update_covariance(LatentState& state, const PriorSpec& prior,
                       RngStream& rng) {
  const int p = static_cast<int>(state.z.cols());
  const int n = static_cast<int>(state.z.rows());
  Matrix scale = Matrix::Zero(p, p);
  scale.selfadjointView<Eigen::Lower>().rankUpdate(state.z.transpose());
  Matrix full = scale.selfadjointView<Eigen::Lower>();
  full += prior.nu0 * prior.v0.mat();
  state.v = sample_inverse_wishart(rng, prior.nu0 + n, SpdMatrix(full));
}

CorrelationMatrix gibbs_scan(LatentState& state, const Dataset& data,
                             const PriorSpec& prior, RngStream& rng) {
  const int p = data.p();
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = p - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_int(i + 1));
    std::swap(perm[i], perm[j]);
  }
  for (int col : perm) update_latent_column(state, col, data, rng);
  update_covariance(state, prior, rng);
  return cov_to_corr(state.v);
}

PosteriorSamples run_chain(const Dataset& data, const PriorSpec& prior,
                           const McmcConfig& config) {
  config.validate();
  if (prior.v0.dim() != data.p()) {
    throw UsageError("prior dimension " + std::to_string(prior.v0.dim()) +
                     " does not match data with p = " +
                     std::to_string(data.p()));
  }
  if (data.n() <= data.p()) {
    std::cerr << "warning: n = " << data.n() << " <= p = " << data.p()
              << "; the posterior is driven largely by the prior\n";
  }

  RngStream rng(config.seed);
  LatentState state = initialize_latent(data, rng);

  // Start the latent columns at their stationary scale under the prior.
  // The rank windows let a column's overall scale move only by a slow
  // random walk, so a chain started at unit scale under a prior with large
  // or uneven diagonal entries spends thousands of scans migrating, and the
  // prior's diagonal mass shrinks the correlation draws the whole way.
  {
    const int p = data.p();
    Vector scale(p);
    const double denom = std::max(1, prior.nu0 - p - 1);
    for (int j = 0; j < p; ++j) {
      scale(j) = std::sqrt(prior.nu0 * prior.v0.mat()(j, j) / denom);
      state.z.col(j) *= scale(j);
    }
    Matrix v = state.v.mat();
    v = scale.asDiagonal() * v * scale.asDiagonal();
    state.v = SpdMatrix(std::move(v));
  }

  PosteriorSamples out;
  out.column_names = data.column_names();
  out.config = config;
  out.draws.reserve(config.saved_count());
  out.scan_indices.reserve(config.saved_count());

  for (int scan = 1; scan <= config.nscan; ++scan) {
    try {
      CorrelationMatrix c = gibbs_scan(state, data, prior, rng);
      if (scan > config.burnin && (scan - config.burnin) % config.thin == 0) {
        out.draws.push_back(std::move(c));
        out.scan_indices.push_back(scan);
        if (config.save_latent) out.latent_snapshots.push_back(state.z);
      }
    } catch (const NumericError& e) {
      throw NumericError("scan " + std::to_string(scan) + ": " + e.what());
    }
  }
  return out;
}

bool satisfies_rank_constraints(const Matrix& z, const Dataset& data) {
  for (int j = 0; j < data.p(); ++j) {
    const ObservedColumn& col = data.column(j);
    const int levels = col.level_count();
    std::vector<double> level_min(levels, kInf);
    std::vector<double> level_max(levels, -kInf);
    for (int i = 0; i < data.n(); ++i) {
      const int code = col.codes[i];
      if (code < 0) continue;
      level_min[code] = std::min(level_min[code], z(i, j));
      level_max[code] = std::max(level_max[code], z(i, j));
    }
    for (int r = 0; r + 1 < levels; ++r) {
      if (!(level_max[r] < level_min[r + 1])) return false;
    }
  }
  return true;
}

}  // namespace rankcop
