#include "rankcop/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankcop/errors.hpp"

namespace rankcop {

double quantile_type7(std::vector<double> values, double p) {
  if (values.empty()) throw Error("quantile of an empty sample");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error("quantile probability must lie in [0, 1]");
  }
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  const double h = (n - 1) * p;
  const std::size_t k = static_cast<std::size_t>(std::floor(h));
  if (k + 1 >= n) return values[n - 1];
  return values[k] + (h - k) * (values[k + 1] - values[k]);
}

const QuantileTable::Entry& QuantileTable::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : entries) {
    if (e.i == i && e.j == j) return e;
  }
  throw Error("no quantile entry for (" + std::to_string(i) + ", " +
              std::to_string(j) + ")");
}

QuantileTable correlation_quantiles(const PosteriorSamples& samples,
                                    const std::vector<double>& probs) {
  if (samples.count() < 1) throw Error("no posterior draws to summarize");
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error("quantile probability must lie in [0, 1]");
    }
  }
  QuantileTable table;
  table.names = samples.column_names;
  table.probs = probs;
  const int p = samples.dim();
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j) {
      QuantileTable::Entry entry{i, j, {}};
      const std::vector<double> series = samples.entry_series(i, j);
      entry.values.reserve(probs.size());
      for (double q : probs) {
        entry.values.push_back(quantile_type7(series, q));
      }
      table.entries.push_back(std::move(entry));
    }
  }
  return table;
}

Vector regression_coefficients(const CorrelationMatrix& c, int target) {
  const Matrix& m = c.mat();
  const int p = c.dim();
  if (target < 0 || target >= p) {
    throw Error("regression target " + std::to_string(target) +
                " out of range");
  }
  if (p == 1) return Vector(0);
  Matrix rest(p - 1, p - 1);
  Vector cross(p - 1);
  for (int a = 0, i = 0; a < p; ++a) {
    if (a == target) continue;
    cross(i) = m(a, target);
    for (int b = 0, k = 0; b < p; ++b) {
      if (b == target) continue;
      rest(i, k) = m(a, b);
      ++k;
    }
    ++i;
  }
  Matrix l;
  try {
    l = cholesky(rest);
  } catch (const NotPositiveDefiniteError& e) {
    throw NumericError(
        "regression_coefficients: conditioning block is singular (" +
        std::string(e.what()) + ")");
  }
  Vector w = cross;
  l.triangularView<Eigen::Lower>().solveInPlace(w);
  l.transpose().triangularView<Eigen::Upper>().solveInPlace(w);
  return w;
}

DependenceGraph dependence_graph(const PosteriorSamples& samples,
                                 double level) {
  if (samples.count() < 2) {
    throw Error("dependence graph needs at least two posterior draws");
  }
  if (!(level > 0.0 && level < 1.0)) {
    throw Error("credible level must lie in (0, 1)");
  }
  const int p = samples.dim();
  const int s = samples.count();

  // coef[t][k][draw]: coefficient of predictor k (skipping t) for target t.
  std::vector<std::vector<std::vector<double>>> coef(
      p, std::vector<std::vector<double>>(p - 1,
                                          std::vector<double>(s, 0.0)));
  for (int d = 0; d < s; ++d) {
    for (int t = 0; t < p; ++t) {
      const Vector w = regression_coefficients(samples.draws[d], t);
      for (int k = 0; k < p - 1; ++k) coef[t][k][d] = w(k);
    }
  }

  DependenceGraph graph;
  graph.nodes = samples.column_names;
  graph.level = level;
  const double lo_p = (1.0 - level) / 2.0;
  const double hi_p = 1.0 - lo_p;

  // excl[t][b]: target t's interval for predictor b excludes zero.
  std::vector<std::vector<DependenceGraph::Coefficient>> directed(p);
  for (int t = 0; t < p; ++t) {
    for (int b = 0, k = 0; b < p; ++b) {
      if (b == t) continue;
      const std::vector<double>& series = coef[t][k];
      DependenceGraph::Coefficient c;
      c.target = t;
      c.predictor = b;
      c.low = quantile_type7(series, lo_p);
      c.median = quantile_type7(series, 0.5);
      c.high = quantile_type7(series, hi_p);
      c.excludes_zero = (c.low > 0.0) || (c.high < 0.0);
      directed[t].push_back(c);
      graph.coefficients.push_back(c);
      ++k;
    }
  }

  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      const auto find = [&](int t, int pred) {
        for (const auto& c : directed[t]) {
          if (c.predictor == pred) return c;
        }
        throw Error("missing coefficient record");
      };
      const auto ab = find(a, b);
      const auto ba = find(b, a);
      if (ab.excludes_zero || ba.excludes_zero) {
        const auto& lead = ab.excludes_zero ? ab : ba;
        graph.edges.push_back({a, b, lead.median > 0.0 ? 1 : -1});
      }
    }
  }
  return graph;
}

double autocorrelation(const std::vector<double>& series, int lag) {
  const int n = static_cast<int>(series.size());
  if (lag < 1 || lag >= n) {
    throw Error("autocorrelation needs 0 < lag < length");
  }
  double mean = 0.0;
  for (double x : series) mean += x;
  mean /= n;
  double denom = 0.0;
  for (double x : series) denom += (x - mean) * (x - mean);
  denom /= n;
  if (denom == 0.0) return 0.0;
  double num = 0.0;
  for (int t = 0; t + lag < n; ++t) {
    num += (series[t] - mean) * (series[t + lag] - mean);
  }
  num /= (n - lag);
  const double r = num / denom;
  return std::clamp(r, -1.0, 1.0);
}

double effective_sample_size(const std::vector<double>& series) {
  const int n = static_cast<int>(series.size());
  if (n < 2) throw Error("effective sample size needs at least 2 points");
  double mean = 0.0;
  for (double x : series) mean += x;
  mean /= n;
  double denom = 0.0;
  for (double x : series) denom += (x - mean) * (x - mean);
  if (denom == 0.0) return static_cast<double>(n);
  double sum = 0.0;
  for (int lag = 1; lag < n; ++lag) {
    const double r = autocorrelation(series, lag);
    if (r <= 0.0) break;
    sum += r;
  }
  return n / (1.0 + 2.0 * sum);
}

}  // namespace rankcop
