#pragma once

#include <map>
#include <string>
#include <vector>

#include "rankcop/dataset.hpp"
#include "rankcop/rng.hpp"
#include "rankcop/sampler.hpp"

namespace rankcop {

// Draws count synthetic rows from the posterior predictive: each row picks a
// saved correlation draw uniformly, samples a latent normal vector under it,
// and maps each coordinate through the column's empirical quantile function.
// Every synthetic cell is therefore one of the column's observed levels, and
// no cell is missing.
Dataset sample_predictive(const PosteriorSamples& samples, const Dataset& data,
                          RngStream& rng, int count);

struct Condition {
  std::string column;
  double level;
};

// Distribution of the target column over the synthetic rows matching all
// conditions. Probabilities cover the target's full level set; quantiles are
// type-7 over the matching raw values; the mean maps each level through
// representatives (defaulting to the level value itself).
struct ConditionalSummary {
  std::string target;
  int matched;
  int total;
  std::vector<double> levels;
  std::vector<std::string> level_labels;  // empty for numeric targets
  std::vector<double> probabilities;
  std::vector<double> quantile_probs;
  std::vector<double> quantiles;
  double mean;
};

ConditionalSummary conditional_table(
    const Dataset& synthetic, const std::string& target,
    const std::vector<Condition>& given,
    const std::map<double, double>& representatives = {});

}  // namespace rankcop
