#include "rankcop/predictive.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "rankcop/analysis.hpp"
#include "rankcop/errors.hpp"
#include "rankcop/format.hpp"
#include "rankcop/normal.hpp"
#include "rankcop/sampling.hpp"

namespace rankcop {

Dataset sample_predictive(const PosteriorSamples& samples, const Dataset& data,
                          RngStream& rng, int count) {
  if (samples.count() < 1) throw Error("no posterior draws to predict from");
  if (count < 1) throw Error("synthetic row count must be positive");
  if (samples.column_names != data.column_names()) {
    throw DataError("posterior columns do not match the data columns");
  }
  const int p = data.p();
  const int s = samples.count();

  std::vector<EmpiricalMarginal> marginals;
  marginals.reserve(p);
  for (int j = 0; j < p; ++j) marginals.emplace_back(data.column(j));

  std::vector<Matrix> chols;
  chols.reserve(s);
  for (const auto& c : samples.draws) chols.push_back(cholesky(c.mat()));

  std::vector<std::vector<double>> cells(p);
  for (int j = 0; j < p; ++j) cells[j].reserve(count);
  for (int row = 0; row < count; ++row) {
    const std::size_t pick = rng.uniform_int(s);
    const Vector z = sample_mvn(rng, chols[pick]);
    for (int j = 0; j < p; ++j) {
      // Phi underflows to 0 around z < -38, far outside any reachable draw;
      // clamp so the quantile lookup stays defined.
      const double u = std::max(normal_cdf(z(j)), 1e-300);
      cells[j].push_back(marginals[j].quantile(u));
    }
  }

  std::vector<ObservedColumn> columns;
  columns.reserve(p);
  for (int j = 0; j < p; ++j) {
    columns.push_back(make_column(data.column(j).name, std::move(cells[j]),
                                  data.column(j).level_labels));
  }
  return Dataset::from_columns(std::move(columns));
}

namespace {

std::string describe(const std::vector<Condition>& given) {
  std::string s;
  for (const auto& g : given) {
    if (!s.empty()) s += ", ";
    s += g.column + " = " + format_double(g.level);
  }
  return s.empty() ? "(no conditions)" : s;
}

}  // namespace

ConditionalSummary conditional_table(
    const Dataset& synthetic, const std::string& target,
    const std::vector<Condition>& given,
    const std::map<double, double>& representatives) {
  const int t = synthetic.column_index(target);
  if (t < 0) throw DataError("unknown target column '" + target + "'");
  std::vector<int> cond_index;
  for (const auto& g : given) {
    const int j = synthetic.column_index(g.column);
    if (j < 0) throw DataError("unknown condition column '" + g.column + "'");
    const auto& levels = synthetic.column(j).levels;
    if (!std::binary_search(levels.begin(), levels.end(), g.level)) {
      throw DataError("condition level " + format_double(g.level) +
                      " is not an observed level of '" + g.column + "'");
    }
    cond_index.push_back(j);
  }

  const ObservedColumn& target_col = synthetic.column(t);
  std::vector<int> matches;
  for (int i = 0; i < synthetic.n(); ++i) {
    bool ok = !target_col.is_missing(i);
    for (std::size_t k = 0; ok && k < given.size(); ++k) {
      const ObservedColumn& col = synthetic.column(cond_index[k]);
      ok = !col.is_missing(i) && col.values[i] == given[k].level;
    }
    if (ok) matches.push_back(i);
  }
  if (matches.empty()) {
    throw DataError("no rows match " + describe(given) + " (0 of " +
                    std::to_string(synthetic.n()) + ")");
  }

  ConditionalSummary out;
  out.target = target;
  out.matched = static_cast<int>(matches.size());
  out.total = synthetic.n();
  out.levels = target_col.levels;
  if (!target_col.level_labels.empty()) {
    for (double level : out.levels) {
      out.level_labels.push_back(
          target_col.level_labels[static_cast<std::size_t>(level)]);
    }
  }

  std::vector<int> counts(target_col.level_count(), 0);
  std::vector<double> values;
  values.reserve(matches.size());
  for (int i : matches) {
    ++counts[target_col.codes[i]];
    values.push_back(target_col.values[i]);
  }
  out.probabilities.resize(counts.size());
  double mean = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    out.probabilities[k] = static_cast<double>(counts[k]) / out.matched;
    const auto rep = representatives.find(out.levels[k]);
    const double value =
        (rep != representatives.end()) ? rep->second : out.levels[k];
    mean += out.probabilities[k] * value;
  }
  out.mean = mean;

  out.quantile_probs = {0.05, 0.25, 0.5, 0.75, 0.95};
  for (double q : out.quantile_probs) {
    out.quantiles.push_back(quantile_type7(values, q));
  }
  return out;
}

}  // namespace rankcop
