#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankcop/linalg.hpp"
#include "rankcop/sampler.hpp"

namespace rankcop {

// FNV-1a 64-bit content hash, as 16 hex digits.
std::string fnv1a64(const std::string& bytes);
std::string fnv1a64_file(const std::string& path);

// Companion record for a posterior sample file. Hashes tie the three
// artifacts together: input_hash covers the data file the chain saw,
// posterior_hash covers the sample file as written.
struct RunMetadata {
  std::string version;
  std::uint64_t seed = 0;
  int chain = 0;
  int chains = 1;
  int nscan = 0;
  int burnin = 0;
  int thin = 0;
  int nu0 = 0;
  Matrix v0;
  std::vector<std::string> columns;
  int n = 0;
  int p = 0;
  std::string input_hash;
  std::string posterior_hash;
};

// Sample file layout: header "scan,<a>:<b>,..." over pairs a < b in column
// order, one row per saved draw, numbers in shortest round-trip form.
void write_posterior_csv(const PosteriorSamples& samples,
                         const std::string& path);

// Rebuilds the draws against the metadata's column list; the file must match
// the recorded posterior_hash and header.
PosteriorSamples read_posterior_csv(const std::string& path,
                                    const RunMetadata& meta);

void write_metadata(const RunMetadata& meta, const std::string& path);
RunMetadata read_metadata(const std::string& path);

}  // namespace rankcop
