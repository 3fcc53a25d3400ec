#include "rankcop/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankcop/analysis.hpp"
#include "rankcop/baseline.hpp"
#include "rankcop/dataset.hpp"
#include "rankcop/errors.hpp"
#include "rankcop/format.hpp"
#include "rankcop/posterior_io.hpp"
#include "rankcop/predictive.hpp"
#include "rankcop/sampler.hpp"
#include "rankcop/version.hpp"

namespace rankcop::cli {

namespace {

std::uint64_t resolve_seed(const std::string& flag_value) {
  std::string text = flag_value;
  if (text.empty()) {
    const char* env = std::getenv("RANKCOP_SEED");
    if (env != nullptr) text = env;
  }
  if (text.empty()) return 1;
  try {
    std::size_t used = 0;
    const std::uint64_t seed = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing text");
    return seed;
  } catch (const std::exception&) {
    throw UsageError("seed '" + text + "' is not an unsigned integer");
  }
}

std::string chain_path(const std::string& path, int chain, int chains) {
  if (chains == 1) return path;
  const std::string tag = ".chain" + std::to_string(chain);
  const std::size_t slash = path.find_last_of('/');
  const std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + tag;
  }
  return path.substr(0, dot) + tag + path.substr(dot);
}

SpdMatrix load_v0(const std::string& path, int p) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("'" + path + "': " + e.what());
  }
  if (!doc.is_array() || static_cast<int>(doc.size()) != p) {
    throw UsageError("--v0 must be a " + std::to_string(p) + "x" +
                     std::to_string(p) + " matrix for this data");
  }
  Matrix v0(p, p);
  for (int i = 0; i < p; ++i) {
    if (!doc[i].is_array() || static_cast<int>(doc[i].size()) != p) {
      throw UsageError("--v0 row " + std::to_string(i) + " must have " +
                       std::to_string(p) + " entries");
    }
    for (int j = 0; j < p; ++j) {
      if (!doc[i][j].is_number()) {
        throw UsageError("--v0 entries must be numbers");
      }
      v0(i, j) = doc[i][j].get<double>();
    }
  }
  try {
    return SpdMatrix(std::move(v0));
  } catch (const Error& e) {
    throw UsageError(std::string("--v0 is not usable: ") + e.what());
  }
}

std::string pair_name(const std::vector<std::string>& names, int i, int j) {
  return names[i] + ":" + names[j];
}

struct FitOptions {
  std::string input;
  std::string levels;
  std::string output = "posterior.csv";
  std::string metadata;
  std::string missing = "NA";
  std::string seed_text;
  std::string v0_path;
  int nscan = 25000;
  int burnin = -1;
  int thin = 10;
  int nu0 = 0;
  int chains = 1;
};

int cmd_fit(const FitOptions& opt) {
  ParseOptions popts;
  popts.missing_token = opt.missing;
  if (!opt.levels.empty()) load_level_orders(opt.levels, popts);
  const Dataset data = load_csv(opt.input, popts);
  const int p = data.p();

  const int nu0 = (opt.nu0 > 0) ? opt.nu0 : p + 2;
  SpdMatrix v0 = opt.v0_path.empty() ? SpdMatrix(Matrix::Identity(p, p))
                                     : load_v0(opt.v0_path, p);
  const PriorSpec prior(nu0, std::move(v0));

  McmcConfig base;
  base.nscan = opt.nscan;
  base.burnin = (opt.burnin >= 0) ? opt.burnin
                                  : McmcConfig::default_burnin(opt.nscan);
  base.thin = opt.thin;
  base.seed = resolve_seed(opt.seed_text);
  base.validate();
  if (opt.chains < 1) throw UsageError("--chains must be at least 1");

  const std::string input_hash = fnv1a64_file(opt.input);

  std::vector<McmcConfig> configs(opt.chains, base);
  if (opt.chains > 1) {
    const RngStream seeder(base.seed);
    for (int c = 0; c < opt.chains; ++c) {
      configs[c].seed = seeder.substream(c).seed();
    }
  }

  std::vector<PosteriorSamples> results(opt.chains);
  if (opt.chains == 1) {
    results[0] = run_chain(data, prior, configs[0]);
  } else {
    std::vector<std::exception_ptr> failures(opt.chains);
    std::vector<std::thread> workers;
    workers.reserve(opt.chains);
    for (int c = 0; c < opt.chains; ++c) {
      workers.emplace_back([&, c] {
        try {
          results[c] = run_chain(data, prior, configs[c]);
        } catch (...) {
          failures[c] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (int c = 0; c < opt.chains; ++c) {
      if (failures[c]) std::rethrow_exception(failures[c]);
    }
  }

  for (int c = 0; c < opt.chains; ++c) {
    const std::string post_path = chain_path(opt.output, c, opt.chains);
    // Default metadata sits beside its own chain's sample file, which is
    // where summarize and predict look when --metadata is omitted.
    const std::string meta_path = opt.metadata.empty()
                                      ? post_path + ".meta.json"
                                      : chain_path(opt.metadata, c, opt.chains);
    write_posterior_csv(results[c], post_path);

    RunMetadata meta;
    meta.version = kVersion;
    meta.seed = configs[c].seed;
    meta.chain = c;
    meta.chains = opt.chains;
    meta.nscan = configs[c].nscan;
    meta.burnin = configs[c].burnin;
    meta.thin = configs[c].thin;
    meta.nu0 = prior.nu0;
    meta.v0 = prior.v0.mat();
    meta.columns = data.column_names();
    meta.n = data.n();
    meta.p = p;
    meta.input_hash = input_hash;
    meta.posterior_hash = fnv1a64_file(post_path);
    write_metadata(meta, meta_path);
  }
  return 0;
}

struct SummarizeOptions {
  std::string posterior;
  std::string metadata;
  std::string output = "summary.json";
  std::string csv;
  double level = 0.95;
  int acf_lags = 10;
};

int cmd_summarize(const SummarizeOptions& opt) {
  if (!(opt.level > 0.0 && opt.level < 1.0)) {
    throw UsageError("--level must lie strictly inside (0, 1)");
  }
  if (opt.acf_lags < 1) throw UsageError("--acf-lags must be at least 1");

  const std::string meta_path =
      opt.metadata.empty() ? opt.posterior + ".meta.json" : opt.metadata;
  const RunMetadata meta = read_metadata(meta_path);
  const PosteriorSamples samples = read_posterior_csv(opt.posterior, meta);
  if (samples.count() < 2) {
    throw DataError("summarizing needs at least two posterior draws, got " +
                    std::to_string(samples.count()));
  }
  const int p = samples.dim();

  const std::vector<double> probs = {0.025, 0.25, 0.5, 0.75, 0.975};
  const QuantileTable table = correlation_quantiles(samples, probs);
  const DependenceGraph graph = dependence_graph(samples, opt.level);

  nlohmann::ordered_json doc;
  doc["version"] = kVersion;
  doc["posterior_hash"] = meta.posterior_hash;
  doc["columns"] = samples.column_names;
  doc["draws"] = samples.count();
  doc["quantile_probs"] = probs;

  nlohmann::ordered_json correlations = nlohmann::ordered_json::array();
  for (const auto& entry : table.entries) {
    nlohmann::ordered_json item;
    item["pair"] = pair_name(table.names, entry.i, entry.j);
    item["i"] = table.names[entry.i];
    item["j"] = table.names[entry.j];
    item["quantiles"] = entry.values;
    correlations.push_back(std::move(item));
  }
  doc["correlations"] = std::move(correlations);

  nlohmann::ordered_json coefficients = nlohmann::ordered_json::array();
  for (const auto& c : graph.coefficients) {
    nlohmann::ordered_json item;
    item["target"] = graph.nodes[c.target];
    item["predictor"] = graph.nodes[c.predictor];
    item["low"] = c.low;
    item["median"] = c.median;
    item["high"] = c.high;
    item["excludes_zero"] = c.excludes_zero;
    coefficients.push_back(std::move(item));
  }
  doc["coefficients"] = std::move(coefficients);

  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges) {
    nlohmann::ordered_json item;
    item["a"] = graph.nodes[e.a];
    item["b"] = graph.nodes[e.b];
    item["sign"] = e.sign;
    edges.push_back(std::move(item));
  }
  doc["graph"] = {{"level", graph.level}, {"edges", std::move(edges)}};

  const int lags = std::min(opt.acf_lags, samples.count() - 1);
  nlohmann::ordered_json diagnostics = nlohmann::ordered_json::array();
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      const std::vector<double> series = samples.entry_series(i, j);
      nlohmann::ordered_json item;
      item["pair"] = pair_name(samples.column_names, i, j);
      std::vector<double> acf;
      acf.reserve(lags);
      for (int lag = 1; lag <= lags; ++lag) {
        acf.push_back(autocorrelation(series, lag));
      }
      item["acf"] = acf;
      item["ess"] = effective_sample_size(series);
      diagnostics.push_back(std::move(item));
    }
  }
  doc["diagnostics"] = std::move(diagnostics);

  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw DataError("cannot write '" + opt.output + "'");
  out << doc.dump(2) << '\n';
  if (!out) throw DataError("write to '" + opt.output + "' failed");

  if (!opt.csv.empty()) {
    std::ofstream csv(opt.csv, std::ios::binary);
    if (!csv) throw DataError("cannot write '" + opt.csv + "'");
    csv << "pair";
    for (double q : probs) csv << ",p" << format_double(q);
    csv << '\n';
    for (const auto& entry : table.entries) {
      if (entry.i == entry.j) continue;
      csv << pair_name(table.names, entry.i, entry.j);
      for (double v : entry.values) csv << ',' << format_double(v);
      csv << '\n';
    }
    if (!csv) throw DataError("write to '" + opt.csv + "' failed");
  }
  return 0;
}

struct PredictOptions {
  std::string posterior;
  std::string metadata;
  std::string data;
  std::string levels;
  std::string missing = "NA";
  std::string output = "synthetic.csv";
  std::string seed_text;
  int count = 10000;
  std::string target;
  std::vector<std::string> given;
  std::string table = "conditional.json";
  std::string representatives;
};

// "column=value"; label columns match against their level labels.
Condition parse_condition(const std::string& text, const Dataset& data) {
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw UsageError("--given needs column=value, got '" + text + "'");
  }
  Condition cond;
  cond.column = text.substr(0, eq);
  const std::string value = text.substr(eq + 1);
  const int j = data.column_index(cond.column);
  if (j < 0) throw DataError("unknown condition column '" + cond.column + "'");
  const ObservedColumn& col = data.column(j);
  if (!col.level_labels.empty()) {
    const auto it = std::find(col.level_labels.begin(),
                              col.level_labels.end(), value);
    if (it == col.level_labels.end()) {
      throw DataError("'" + value + "' is not a label of column '" +
                      cond.column + "'");
    }
    cond.level = static_cast<double>(it - col.level_labels.begin());
    return cond;
  }
  const auto parsed = parse_double(value);
  if (!parsed) {
    throw UsageError("cannot parse condition value '" + value + "'");
  }
  cond.level = *parsed;
  return cond;
}

std::map<double, double> load_representatives(const std::string& path,
                                              const ObservedColumn& target) {
  std::map<double, double> reps;
  if (path.empty()) return reps;
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("'" + path + "': " + e.what());
  }
  if (!doc.is_object()) {
    throw DataError("'" + path + "': expected {column: {level: value}}");
  }
  const auto it = doc.find(target.name);
  if (it == doc.end()) return reps;
  if (!it->is_object()) {
    throw DataError("'" + path + "': entry for '" + target.name +
                    "' must map levels to numbers");
  }
  for (const auto& [key, value] : it->items()) {
    if (!value.is_number()) {
      throw DataError("'" + path + "': representative for '" + key +
                      "' must be a number");
    }
    double level;
    if (!target.level_labels.empty()) {
      const auto label = std::find(target.level_labels.begin(),
                                   target.level_labels.end(), key);
      if (label == target.level_labels.end()) {
        throw DataError("'" + path + "': '" + key +
                        "' is not a label of column '" + target.name + "'");
      }
      level = static_cast<double>(label - target.level_labels.begin());
    } else {
      const auto parsed = parse_double(key);
      if (!parsed) {
        throw DataError("'" + path + "': cannot parse level '" + key + "'");
      }
      level = *parsed;
    }
    reps[level] = value.get<double>();
  }
  return reps;
}

int cmd_predict(const PredictOptions& opt) {
  if (opt.count < 1) throw UsageError("--count must be positive");
  if (opt.target.empty() && !opt.given.empty()) {
    throw UsageError("--given requires --target");
  }

  const std::string meta_path =
      opt.metadata.empty() ? opt.posterior + ".meta.json" : opt.metadata;
  const RunMetadata meta = read_metadata(meta_path);
  if (fnv1a64_file(opt.data) != meta.input_hash) {
    throw DataError("'" + opt.data +
                    "' does not match the input hash in the metadata");
  }

  ParseOptions popts;
  popts.missing_token = opt.missing;
  if (!opt.levels.empty()) load_level_orders(opt.levels, popts);
  const Dataset data = load_csv(opt.data, popts);
  const PosteriorSamples samples = read_posterior_csv(opt.posterior, meta);

  RngStream rng(resolve_seed(opt.seed_text));
  const Dataset synthetic = sample_predictive(samples, data, rng, opt.count);
  write_csv(synthetic, opt.output, popts);

  if (opt.target.empty()) return 0;

  const int t = data.column_index(opt.target);
  if (t < 0) throw DataError("unknown target column '" + opt.target + "'");
  std::vector<Condition> conditions;
  conditions.reserve(opt.given.size());
  for (const auto& g : opt.given) {
    conditions.push_back(parse_condition(g, data));
  }
  const std::map<double, double> reps =
      load_representatives(opt.representatives, data.column(t));
  const ConditionalSummary summary =
      conditional_table(synthetic, opt.target, conditions, reps);

  nlohmann::ordered_json doc;
  doc["version"] = kVersion;
  doc["target"] = summary.target;
  nlohmann::ordered_json given = nlohmann::ordered_json::array();
  for (const auto& cond : conditions) {
    nlohmann::ordered_json item;
    item["column"] = cond.column;
    item["level"] = cond.level;
    const ObservedColumn& col = data.column(data.column_index(cond.column));
    if (!col.level_labels.empty()) {
      item["label"] = col.level_labels[static_cast<std::size_t>(cond.level)];
    }
    given.push_back(std::move(item));
  }
  doc["given"] = std::move(given);
  doc["matched"] = summary.matched;
  doc["total"] = summary.total;
  doc["levels"] = summary.levels;
  if (!summary.level_labels.empty()) doc["labels"] = summary.level_labels;
  doc["probabilities"] = summary.probabilities;
  doc["quantile_probs"] = summary.quantile_probs;
  doc["quantiles"] = summary.quantiles;
  doc["mean"] = summary.mean;

  std::ofstream out(opt.table, std::ios::binary);
  if (!out) throw DataError("cannot write '" + opt.table + "'");
  out << doc.dump(2) << '\n';
  if (!out) throw DataError("write to '" + opt.table + "' failed");
  return 0;
}

struct BiasOptions {
  double rho = 0.5;
  std::vector<int> n_values;
  int replicates = 200;
  std::string seed_text;
  std::string output = "bias.csv";
  std::string margin1 = "continuous";
  std::string margin2 = "binary";
  int ordinal_levels = 4;
  std::string estimators = "product,correlation";
  int mcmc_replicates = 10;
  int mcmc_nscan = 600;
  int mcmc_burnin = 100;
  int mcmc_thin = 2;
};

Margin parse_margin(const std::string& text) {
  if (text == "continuous") return Margin::kContinuous;
  if (text == "binary") return Margin::kBinary;
  if (text == "ordinal") return Margin::kOrdinal;
  throw UsageError("margin '" + text +
                   "' must be continuous, binary, or ordinal");
}

int cmd_simulate_bias(const BiasOptions& opt) {
  BiasScenario scenario;
  scenario.rho = opt.rho;
  if (!opt.n_values.empty()) scenario.n_values = opt.n_values;
  scenario.replicates = opt.replicates;
  scenario.margin1 = parse_margin(opt.margin1);
  scenario.margin2 = parse_margin(opt.margin2);
  scenario.ordinal_levels = opt.ordinal_levels;
  scenario.with_product = false;
  scenario.with_correlation = false;
  scenario.with_mcmc = false;
  std::stringstream names(opt.estimators);
  std::string name;
  while (std::getline(names, name, ',')) {
    if (name == "product") {
      scenario.with_product = true;
    } else if (name == "correlation") {
      scenario.with_correlation = true;
    } else if (name == "mcmc") {
      scenario.with_mcmc = true;
    } else {
      throw UsageError("unknown estimator '" + name + "'");
    }
  }
  if (!scenario.with_product && !scenario.with_correlation &&
      !scenario.with_mcmc) {
    throw UsageError("--estimators selected nothing");
  }
  scenario.mcmc_replicates = opt.mcmc_replicates;
  scenario.mcmc_nscan = opt.mcmc_nscan;
  scenario.mcmc_burnin = opt.mcmc_burnin;
  scenario.mcmc_thin = opt.mcmc_thin;

  RngStream rng(resolve_seed(opt.seed_text));
  const std::vector<BiasRow> rows = bias_study(scenario, rng);

  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw DataError("cannot write '" + opt.output + "'");
  out << "estimator,n,rho_true,mean,sd,replicates\n";
  for (const auto& row : rows) {
    out << row.estimator << ',' << row.n << ',' << format_double(row.rho_true)
        << ',' << format_double(row.mean) << ',' << format_double(row.sd)
        << ',' << row.replicates << '\n';
  }
  if (!out) throw DataError("write to '" + opt.output + "' failed");
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Bayesian copula correlation estimation from mixed data"};
  app.require_subcommand(1);

  FitOptions fit;
  CLI::App* fit_cmd = app.add_subcommand(
      "fit", "Sample the posterior of the correlation matrix");
  fit_cmd->add_option("--input", fit.input, "Data CSV")->required();
  fit_cmd->add_option("--levels", fit.levels,
                      "JSON map of text columns to ordered labels");
  fit_cmd->add_option("--output", fit.output, "Posterior sample CSV");
  fit_cmd->add_option("--metadata", fit.metadata,
                      "Metadata JSON (default: <output>.meta.json)");
  fit_cmd->add_option("--missing", fit.missing, "Missing-value token");
  fit_cmd->add_option("--nscan", fit.nscan, "Total Gibbs scans");
  fit_cmd->add_option("--burnin", fit.burnin,
                      "Scans to discard (default: nscan / 5)");
  fit_cmd->add_option("--thin", fit.thin, "Keep every thin-th scan");
  fit_cmd->add_option("--seed", fit.seed_text,
                      "RNG seed (default: RANKCOP_SEED or 1)");
  fit_cmd->add_option("--nu0", fit.nu0,
                      "Prior degrees of freedom (default: p + 2)");
  fit_cmd->add_option("--v0", fit.v0_path,
                      "Prior scale matrix as a JSON array of rows");
  fit_cmd->add_option("--chains", fit.chains, "Independent parallel chains");

  SummarizeOptions summarize;
  CLI::App* summarize_cmd = app.add_subcommand(
      "summarize", "Quantiles, coefficients, graph, and diagnostics");
  summarize_cmd->add_option("--posterior", summarize.posterior,
                            "Posterior sample CSV")->required();
  summarize_cmd->add_option("--metadata", summarize.metadata,
                            "Metadata JSON (default: <posterior>.meta.json)");
  summarize_cmd->add_option("--output", summarize.output, "Summary JSON");
  summarize_cmd->add_option("--csv", summarize.csv,
                            "Optional CSV of per-pair quantiles");
  summarize_cmd->add_option("--level", summarize.level,
                            "Credible level for intervals and the graph");
  summarize_cmd->add_option("--acf-lags", summarize.acf_lags,
                            "Autocorrelation lags to report");

  PredictOptions predict;
  CLI::App* predict_cmd = app.add_subcommand(
      "predict", "Draw synthetic rows from the posterior predictive");
  predict_cmd->add_option("--posterior", predict.posterior,
                          "Posterior sample CSV")->required();
  predict_cmd->add_option("--metadata", predict.metadata,
                          "Metadata JSON (default: <posterior>.meta.json)");
  predict_cmd->add_option("--data", predict.data, "Original data CSV")
      ->required();
  predict_cmd->add_option("--levels", predict.levels,
                          "JSON map of text columns to ordered labels");
  predict_cmd->add_option("--missing", predict.missing,
                          "Missing-value token");
  predict_cmd->add_option("--output", predict.output, "Synthetic data CSV");
  predict_cmd->add_option("--seed", predict.seed_text,
                          "RNG seed (default: RANKCOP_SEED or 1)");
  predict_cmd->add_option("--count", predict.count, "Synthetic rows to draw");
  predict_cmd->add_option("--target", predict.target,
                          "Column to tabulate conditionally");
  predict_cmd->add_option("--given", predict.given,
                          "Condition column=value (repeatable)");
  predict_cmd->add_option("--table", predict.table,
                          "Conditional table JSON (with --target)");
  predict_cmd->add_option("--representatives", predict.representatives,
                          "JSON map of levels to representative values");

  BiasOptions bias;
  CLI::App* bias_cmd = app.add_subcommand(
      "simulate-bias", "Monte Carlo bias of score-based estimators");
  bias_cmd->add_option("--rho", bias.rho, "True latent correlation");
  bias_cmd->add_option("--n", bias.n_values,
                       "Sample sizes (default: 100 1000 10000)");
  bias_cmd->add_option("--replicates", bias.replicates,
                       "Replicates per sample size");
  bias_cmd->add_option("--seed", bias.seed_text,
                       "RNG seed (default: RANKCOP_SEED or 1)");
  bias_cmd->add_option("--output", bias.output, "Result CSV");
  bias_cmd->add_option("--margin1", bias.margin1,
                       "continuous, binary, or ordinal");
  bias_cmd->add_option("--margin2", bias.margin2,
                       "continuous, binary, or ordinal");
  bias_cmd->add_option("--ordinal-levels", bias.ordinal_levels,
                       "Levels for ordinal margins");
  bias_cmd->add_option("--estimators", bias.estimators,
                       "Comma list of product, correlation, mcmc");
  bias_cmd->add_option("--mcmc-replicates", bias.mcmc_replicates,
                       "Replicates for the mcmc estimator");
  bias_cmd->add_option("--mcmc-nscan", bias.mcmc_nscan,
                       "Scans for the mcmc estimator");
  bias_cmd->add_option("--mcmc-burnin", bias.mcmc_burnin,
                       "Burn-in for the mcmc estimator");
  bias_cmd->add_option("--mcmc-thin", bias.mcmc_thin,
                       "Thinning for the mcmc estimator");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("rankcop");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return (code == 0) ? 0 : 2;
  }

  try {
    if (fit_cmd->parsed()) return cmd_fit(fit);
    if (summarize_cmd->parsed()) return cmd_summarize(summarize);
    if (predict_cmd->parsed()) return cmd_predict(predict);
    if (bias_cmd->parsed()) return cmd_simulate_bias(bias);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace rankcop::cli
