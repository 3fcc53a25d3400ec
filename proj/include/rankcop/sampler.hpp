#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rankcop/dataset.hpp"
#include "rankcop/linalg.hpp"
#include "rankcop/rng.hpp"

namespace rankcop {

// Inverse-Wishart prior on the latent covariance, parameterized so that
// E[V^{-1}] = v0^{-1}. Requires nu0 >= p + 1 for a proper prior.
struct PriorSpec {
  int nu0;
  SpdMatrix v0;

  PriorSpec(int nu0_in, SpdMatrix v0_in);
  // nu0 = p + 2, v0 = identity: proper and diffuse.
  static PriorSpec default_for(int p);
};

struct McmcConfig {
  int nscan = 25000;
  int burnin = 5000;
  int thin = 10;
  std::uint64_t seed = 1;
  bool save_latent = false;

  // Throws UsageError unless nscan > burnin >= 0 and thin >= 1.
  void validate() const;
  static int default_burnin(int nscan) { return nscan / 5; }
  int saved_count() const { return (nscan - burnin) / thin; }
};

// Latent normals (one row per observation) plus their covariance draw. The
// sampler maintains the rank constraints: within each column, latent values
// are ordered exactly as the observed codes order the rows.
struct LatentState {
  Matrix z;
  SpdMatrix v;
};

struct PosteriorSamples {
  std::vector<CorrelationMatrix> draws;
  std::vector<int> scan_indices;
  std::vector<std::string> column_names;
  McmcConfig config;
  std::vector<Matrix> latent_snapshots;  // filled when config.save_latent

  int count() const { return static_cast<int>(draws.size()); }
  int dim() const { return static_cast<int>(column_names.size()); }
  // Trace of entry (i, j) across the saved draws.
  std::vector<double> entry_series(int i, int j) const;
};

// Starting state: per column, observed cells get normal quantiles of their
// (randomly tie-broken) ranks over n + 1, missing cells get standard normal
// draws, each column is standardized, and v is the sample covariance of the
// result (ridged by 1e-8 when n <= p; identity when n < 2).
LatentState initialize_latent(const Dataset& data, RngStream& rng);

// Weights and residual sd of z_col given the other coordinates under v:
// mu_row = z[row, -col] * weights, sigma = sqrt(v_cc - v_c,-c * weights).
struct ConditionalSpec {
  Vector weights;
  double sigma;
};
ConditionalSpec conditional_spec(const SpdMatrix& v, int col);

// Mean and sd of z[row, col] given the rest of the row.
std::pair<double, double> conditional_normal_params(const LatentState& state,
                                                    int row, int col);

// Gibbs update of one latent column. Levels are visited in increasing order;
// each level's rows are redrawn from the conditional normal truncated to
// (max z over lower levels, min z over higher levels), where lower-level
// bounds reflect updates made earlier in this visit. Missing cells are
// redrawn without truncation. Other columns are untouched.
void update_latent_column(LatentState& state, int col, const Dataset& data,
                          RngStream& rng);

// Inverse-Wishart update of v given z: dof nu0 + n, scale nu0 * v0 + z'z.
void update_covariance(LatentState& state, const PriorSpec& prior,
                       RngStream& rng);

// One full scan: every column once in random order, then the covariance.
// Returns the correlation matrix induced by the new v.
CorrelationMatrix gibbs_scan(LatentState& state, const Dataset& data,
                             const PriorSpec& prior, RngStream& rng);

// Runs the sampler from a fresh seeded stream, saving the induced correlation
// (and optionally the latent matrix) at every thin-th scan past burnin.
// Numeric failures are rethrown with the scan index attached. Warns on
// stderr when n <= p.
PosteriorSamples run_chain(const Dataset& data, const PriorSpec& prior,
                           const McmcConfig& config);

// True when every column of z orders its rows exactly as the observed codes
// do; missing cells are unconstrained.
bool satisfies_rank_constraints(const Matrix& z, const Dataset& data);

}  // namespace rankcop
