#include "rankcop/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "rankcop/analysis.hpp"
#include "rankcop/dataset.hpp"
#include "rankcop/errors.hpp"
#include "rankcop/normal.hpp"
#include "rankcop/sampler.hpp"

namespace rankcop {

double pseudo_rho_product(const std::vector<double>& scores1,
                          const std::vector<double>& scores2) {
  if (scores1.size() != scores2.size() || scores1.empty()) {
    throw Error("pseudo_rho_product: score vectors must have equal, "
                "positive length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < scores1.size(); ++i) {
    sum += scores1[i] * scores2[i];
  }
  return sum / scores1.size();
}

double pseudo_rho_correlation(const std::vector<double>& scores1,
                              const std::vector<double>& scores2) {
  if (scores1.size() != scores2.size() || scores1.empty()) {
    throw Error("pseudo_rho_correlation: score vectors must have equal, "
                "positive length");
  }
  const std::size_t n = scores1.size();
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    m1 += scores1[i];
    m2 += scores2[i];
  }
  m1 /= n;
  m2 /= n;
  double s11 = 0.0, s22 = 0.0, s12 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d1 = scores1[i] - m1;
    const double d2 = scores2[i] - m2;
    s11 += d1 * d1;
    s22 += d2 * d2;
    s12 += d1 * d2;
  }
  if (s11 == 0.0 || s22 == 0.0) {
    throw NumericError("pseudo_rho_correlation: a score vector has zero "
                       "variance");
  }
  return s12 / std::sqrt(s11 * s22);
}

namespace {

double apply_margin(double z, Margin margin, int ordinal_levels) {
  switch (margin) {
    case Margin::kContinuous:
      return z;
    case Margin::kBinary:
      return z > 0.0 ? 1.0 : 0.0;
    case Margin::kOrdinal: {
      // Equal-probability bins: floor(K * Phi(z)) lands in {0, ..., K-1}.
      const double u = normal_cdf(z);
      int bin = static_cast<int>(std::floor(ordinal_levels * u));
      bin = std::clamp(bin, 0, ordinal_levels - 1);
      return static_cast<double>(bin);
    }
  }
  return z;
}

struct Accumulator {
  double sum = 0.0;
  double sumsq = 0.0;
  int count = 0;

  void add(double x) {
    sum += x;
    sumsq += x * x;
    ++count;
  }
  double mean() const { return sum / count; }
  double sd() const {
    if (count < 2) return 0.0;
    const double var = (sumsq - sum * sum / count) / (count - 1);
    return std::sqrt(std::max(var, 0.0));
  }
};

}  // namespace

std::vector<BiasRow> bias_study(const BiasScenario& scenario, RngStream& rng) {
  if (!(scenario.rho > -1.0 && scenario.rho < 1.0)) {
    throw UsageError("bias study needs rho strictly inside (-1, 1)");
  }
  if (scenario.n_values.empty()) {
    throw UsageError("bias study needs at least one sample size");
  }
  for (int n : scenario.n_values) {
    if (n < 2) throw UsageError("bias study sample sizes must be >= 2");
  }
  if (scenario.replicates < 1 ||
      (scenario.with_mcmc && scenario.mcmc_replicates < 1)) {
    throw UsageError("bias study needs at least one replicate");
  }
  if (scenario.margin1 == Margin::kOrdinal ||
      scenario.margin2 == Margin::kOrdinal) {
    if (scenario.ordinal_levels < 2) {
      throw UsageError("ordinal margins need at least two levels");
    }
  }
  if (!scenario.with_product && !scenario.with_correlation &&
      !scenario.with_mcmc) {
    throw UsageError("bias study needs at least one estimator");
  }

  const double rho = scenario.rho;
  const double resid = std::sqrt(1.0 - rho * rho);

  struct Key {
    Accumulator product, correlation, mcmc;
  };
  std::vector<int> ns = scenario.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::vector<Key> keys(ns.size());

  const int max_reps =
      std::max(scenario.replicates,
               scenario.with_mcmc ? scenario.mcmc_replicates : 0);
  std::uint64_t stream_index = 0;
  for (std::size_t ni = 0; ni < ns.size(); ++ni) {
    const int n = ns[ni];
    for (int rep = 0; rep < max_reps; ++rep) {
      RngStream local = rng.substream(stream_index++);
      std::vector<double> y1(n), y2(n);
      for (int i = 0; i < n; ++i) {
        const double g1 = local.normal();
        const double g2 = rho * g1 + resid * local.normal();
        y1[i] = apply_margin(g1, scenario.margin1, scenario.ordinal_levels);
        y2[i] = apply_margin(g2, scenario.margin2, scenario.ordinal_levels);
      }

      if (rep < scenario.replicates &&
          (scenario.with_product || scenario.with_correlation)) {
        const auto col1 = make_column("y1", y1);
        const auto col2 = make_column("y2", y2);
        const auto z1 = normal_scores(col1);
        const auto z2 = normal_scores(col2);
        if (scenario.with_product) {
          keys[ni].product.add(pseudo_rho_product(z1, z2));
        }
        if (scenario.with_correlation) {
          keys[ni].correlation.add(pseudo_rho_correlation(z1, z2));
        }
      }

      if (scenario.with_mcmc && rep < scenario.mcmc_replicates) {
        Dataset data = Dataset::from_columns(
            {make_column("y1", std::move(y1)), make_column("y2", std::move(y2))});
        McmcConfig config;
        config.nscan = scenario.mcmc_nscan;
        config.burnin = scenario.mcmc_burnin;
        config.thin = scenario.mcmc_thin;
        config.seed = local.substream(1).seed();
        PosteriorSamples samples =
            run_chain(data, PriorSpec::default_for(2), config);
        keys[ni].mcmc.add(quantile_type7(samples.entry_series(0, 1), 0.5));
      }
    }
  }

  std::vector<BiasRow> rows;
  const auto emit = [&](const std::string& name,
                        Accumulator Key::*member) {
    for (std::size_t ni = 0; ni < ns.size(); ++ni) {
      const Accumulator& acc = keys[ni].*member;
      if (acc.count == 0) continue;
      rows.push_back({name, ns[ni], rho, acc.mean(), acc.sd(), acc.count});
    }
  };
  if (scenario.with_product) emit("product", &Key::product);
  if (scenario.with_correlation) emit("correlation", &Key::correlation);
  if (scenario.with_mcmc) emit("mcmc", &Key::mcmc);
  return rows;
}

}  // namespace rankcop
