#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankcop/rng.hpp"

namespace rankcop {

// Average product of paired normal scores, the plug-in estimate of the latent
// correlation. Consistent for continuous margins, biased toward zero when a
// margin is coarse.
double pseudo_rho_product(const std::vector<double>& scores1,
                          const std::vector<double>& scores2);

// Pearson correlation of the paired normal scores. Throws NumericError when
// either side has zero variance.
double pseudo_rho_correlation(const std::vector<double>& scores1,
                              const std::vector<double>& scores2);

enum class Margin { kContinuous, kBinary, kOrdinal };

// Monte Carlo study of score-based estimators (optionally the posterior
// median) on bivariate Gaussian-copula data with the chosen margins.
struct BiasScenario {
  double rho = 0.5;
  std::vector<int> n_values = {100, 1000, 10000};
  int replicates = 200;
  Margin margin1 = Margin::kContinuous;
  Margin margin2 = Margin::kBinary;
  int ordinal_levels = 4;

  bool with_product = true;
  bool with_correlation = true;
  bool with_mcmc = false;
  int mcmc_replicates = 10;
  int mcmc_nscan = 600;
  int mcmc_burnin = 100;
  int mcmc_thin = 2;
};

struct BiasRow {
  std::string estimator;  // "product", "correlation", "mcmc"
  int n;
  double rho_true;
  double mean;
  double sd;  // across replicates
  int replicates;
};

// One row per (estimator, n), estimators in the order above, n ascending.
// Replicates draw from independent substreams of rng's seed.
std::vector<BiasRow> bias_study(const BiasScenario& scenario, RngStream& rng);

}  // namespace rankcop
