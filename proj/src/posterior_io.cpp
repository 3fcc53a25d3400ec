#include "rankcop/posterior_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "rankcop/errors.hpp"
#include "rankcop/format.hpp"

namespace rankcop {

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

std::string fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a64(buf.str());
}

void write_posterior_csv(const PosteriorSamples& samples,
                         const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  const int p = samples.dim();
  out << "scan";
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      out << ',' << samples.column_names[i] << ':' << samples.column_names[j];
    }
  }
  out << '\n';
  for (int d = 0; d < samples.count(); ++d) {
    out << samples.scan_indices[d];
    const CorrelationMatrix& c = samples.draws[d];
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j < p; ++j) out << ',' << format_double(c(i, j));
    }
    out << '\n';
  }
  if (!out) throw DataError("write to '" + path + "' failed");
}

PosteriorSamples read_posterior_csv(const std::string& path,
                                    const RunMetadata& meta) {
  if (fnv1a64_file(path) != meta.posterior_hash) {
    throw DataError("'" + path +
                    "' does not match the posterior hash in the metadata");
  }
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");

  const int p = static_cast<int>(meta.columns.size());
  std::string expected = "scan";
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      expected += ',' + meta.columns[i] + ':' + meta.columns[j];
    }
  }
  std::string line;
  if (!std::getline(in, line)) throw DataError("'" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expected) {
    throw DataError("'" + path + "' header does not match the metadata "
                    "columns");
  }

  PosteriorSamples samples;
  samples.column_names = meta.columns;
  samples.config.nscan = meta.nscan;
  samples.config.burnin = meta.burnin;
  samples.config.thin = meta.thin;
  samples.config.seed = meta.seed;

  int row = 1;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t pos = line.find(',', start);
      const std::string cell = (pos == std::string::npos)
                                   ? line.substr(start)
                                   : line.substr(start, pos - start);
      const auto value = parse_double(cell);
      if (!value) {
        throw DataError("'" + path + "' row " + std::to_string(row) +
                        ": cannot parse '" + cell + "'");
      }
      fields.push_back(*value);
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    const std::size_t want = 1 + p * (p - 1) / 2;
    if (fields.size() != want) {
      throw DataError("'" + path + "' row " + std::to_string(row) + ": got " +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(want));
    }
    Matrix c = Matrix::Identity(p, p);
    std::size_t k = 1;
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j < p; ++j) {
        c(i, j) = fields[k];
        c(j, i) = fields[k];
        ++k;
      }
    }
    samples.scan_indices.push_back(static_cast<int>(fields[0]));
    samples.draws.emplace_back(std::move(c));
    ++row;
  }
  if (samples.draws.empty()) {
    throw DataError("'" + path + "' holds no posterior draws");
  }
  return samples;
}

void write_metadata(const RunMetadata& meta, const std::string& path) {
  nlohmann::ordered_json doc;
  doc["version"] = meta.version;
  doc["seed"] = meta.seed;
  doc["chain"] = meta.chain;
  doc["chains"] = meta.chains;
  doc["nscan"] = meta.nscan;
  doc["burnin"] = meta.burnin;
  doc["thin"] = meta.thin;
  doc["nu0"] = meta.nu0;
  std::vector<std::vector<double>> v0;
  for (Eigen::Index i = 0; i < meta.v0.rows(); ++i) {
    std::vector<double> row;
    for (Eigen::Index j = 0; j < meta.v0.cols(); ++j) {
      row.push_back(meta.v0(i, j));
    }
    v0.push_back(std::move(row));
  }
  doc["v0"] = v0;
  doc["columns"] = meta.columns;
  doc["n"] = meta.n;
  doc["p"] = meta.p;
  doc["input_hash"] = meta.input_hash;
  doc["posterior_hash"] = meta.posterior_hash;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
  if (!out) throw DataError("write to '" + path + "' failed");
}

RunMetadata read_metadata(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("'" + path + "': " + e.what());
  }
  RunMetadata meta;
  try {
    meta.version = doc.at("version").get<std::string>();
    meta.seed = doc.at("seed").get<std::uint64_t>();
    meta.chain = doc.at("chain").get<int>();
    meta.chains = doc.at("chains").get<int>();
    meta.nscan = doc.at("nscan").get<int>();
    meta.burnin = doc.at("burnin").get<int>();
    meta.thin = doc.at("thin").get<int>();
    meta.nu0 = doc.at("nu0").get<int>();
    const auto& v0 = doc.at("v0");
    const std::size_t p = v0.size();
    meta.v0 = Matrix(p, p);
    for (std::size_t i = 0; i < p; ++i) {
      if (v0[i].size() != p) {
        throw DataError("'" + path + "': v0 is not square");
      }
      for (std::size_t j = 0; j < p; ++j) {
        meta.v0(i, j) = v0[i][j].get<double>();
      }
    }
    meta.columns = doc.at("columns").get<std::vector<std::string>>();
    meta.n = doc.at("n").get<int>();
    meta.p = doc.at("p").get<int>();
    meta.input_hash = doc.at("input_hash").get<std::string>();
    meta.posterior_hash = doc.at("posterior_hash").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError("'" + path + "': " + e.what());
  }
  if (static_cast<int>(meta.columns.size()) != meta.p) {
    throw DataError("'" + path + "': column list does not match p");
  }
  return meta;
}

}  // namespace rankcop
