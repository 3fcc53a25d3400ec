#pragma once

#include <string>
#include <vector>

#include "rankcop/linalg.hpp"
#include "rankcop/sampler.hpp"

namespace rankcop {

// Type-7 sample quantile: linear interpolation of order statistics at
// h = (n - 1) p + 1. p = 0 gives the minimum, p = 1 the maximum.
double quantile_type7(std::vector<double> values, double p);

// Posterior quantiles for every correlation entry i <= j.
struct QuantileTable {
  struct Entry {
    int i, j;
    std::vector<double> values;  // one per prob
  };
  std::vector<std::string> names;
  std::vector<double> probs;
  std::vector<Entry> entries;  // ordered by (i, j), i <= j, diagonal included

  const Entry& at(int i, int j) const;
};

QuantileTable correlation_quantiles(const PosteriorSamples& samples,
                                    const std::vector<double>& probs);

// Coefficients of the best linear predictor of coordinate target from the
// others under correlation c: c[-t,-t]^{-1} c[-t,t], in ascending order of
// the remaining indices. These are the gradients of E[z_t | z_{-t}].
Vector regression_coefficients(const CorrelationMatrix& c, int target);

// Credible-interval summary of each directed regression coefficient, and the
// undirected edges where at least one direction's interval excludes zero.
struct DependenceGraph {
  struct Coefficient {
    int target, predictor;
    double low, median, high;
    bool excludes_zero;
  };
  struct Edge {
    int a, b;   // a < b
    int sign;   // sign of the excluding direction's median
  };
  std::vector<std::string> nodes;
  double level;
  std::vector<Coefficient> coefficients;  // all ordered (target, predictor)
  std::vector<Edge> edges;
};

DependenceGraph dependence_graph(const PosteriorSamples& samples,
                                 double level);

// Lag-k sample autocorrelation with the biased (1/n) variance normalizer,
// clamped to [-1, 1]; a zero-variance series returns 0.
double autocorrelation(const std::vector<double>& series, int lag);

// N / (1 + 2 sum of leading positive autocorrelations). A zero-variance
// series counts as fully independent: ESS = N.
double effective_sample_size(const std::vector<double>& series);

}  // namespace rankcop
