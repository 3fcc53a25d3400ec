#include "rankcop/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "rankcop/errors.hpp"
#include "rankcop/format.hpp"
#include "rankcop/normal.hpp"

namespace rankcop {

ObservedColumn make_column(std::string name, std::vector<double> values,
                           std::vector<std::string> level_labels) {
  ObservedColumn col;
  col.name = std::move(name);
  col.values = std::move(values);
  col.level_labels = std::move(level_labels);

  std::vector<double> observed;
  observed.reserve(col.values.size());
  for (double v : col.values) {
    if (!std::isnan(v)) observed.push_back(v);
  }
  if (observed.empty() && !col.values.empty()) {
    throw DataError("column '" + col.name + "' has no observed values");
  }
  std::sort(observed.begin(), observed.end());
  observed.erase(std::unique(observed.begin(), observed.end()),
                 observed.end());
  col.levels = std::move(observed);

  col.codes.resize(col.values.size());
  for (std::size_t i = 0; i < col.values.size(); ++i) {
    if (std::isnan(col.values[i])) {
      col.codes[i] = -1;
    } else {
      const auto it =
          std::lower_bound(col.levels.begin(), col.levels.end(), col.values[i]);
      col.codes[i] = static_cast<int>(it - col.levels.begin());
    }
  }
  return col;
}

Dataset Dataset::from_columns(std::vector<ObservedColumn> columns) {
  if (columns.empty()) throw DataError("dataset needs at least one column");
  Dataset d;
  d.n_ = columns.front().n();
  std::set<std::string> names;
  for (const auto& col : columns) {
    if (col.n() != d.n_) {
      throw DataError("column '" + col.name + "' has " +
                      std::to_string(col.n()) + " rows, expected " +
                      std::to_string(d.n_));
    }
    if (col.name.empty()) throw DataError("columns must be named");
    if (!names.insert(col.name).second) {
      throw DataError("duplicate column name '" + col.name + "'");
    }
  }
  d.columns_ = std::move(columns);
  return d;
}

int Dataset::column_index(const std::string& name) const {
  for (int j = 0; j < p(); ++j) {
    if (columns_[j].name == name) return j;
  }
  return -1;
}

std::vector<std::string> Dataset::column_names() const {
  std::vector<std::string> names;
  names.reserve(columns_.size());
  for (const auto& col : columns_) names.push_back(col.name);
  return names;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char delimiter) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delimiter, start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

Dataset load_csv(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw DataError("'" + path + "' is empty");

  std::vector<std::string> header = split(lines[0], options.delimiter);
  for (auto& h : header) h = trim(h);
  const std::size_t p = header.size();

  for (const auto& [name, order] : options.level_orders) {
    if (std::find(header.begin(), header.end(), name) == header.end()) {
      throw DataError("level order given for unknown column '" + name + "'");
    }
    if (order.empty()) {
      throw DataError("level order for column '" + name + "' is empty");
    }
  }

  std::vector<std::vector<double>> cells(p);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const std::vector<std::string> fields = split(lines[r], options.delimiter);
    if (fields.size() != p) {
      throw DataError("'" + path + "' row " + std::to_string(r) + ": got " +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(p));
    }
    for (std::size_t j = 0; j < p; ++j) {
      const std::string cell = trim(fields[j]);
      // Empty cells are always missing; the token covers spellings like NA.
      if (cell.empty() || cell == options.missing_token) {
        cells[j].push_back(std::nan(""));
        continue;
      }
      const auto order = options.level_orders.find(header[j]);
      if (order != options.level_orders.end()) {
        const auto& labels = order->second;
        const auto it = std::find(labels.begin(), labels.end(), cell);
        if (it == labels.end()) {
          throw DataError("'" + path + "' row " + std::to_string(r) +
                          ", column '" + header[j] + "': label '" + cell +
                          "' is not in the level order");
        }
        cells[j].push_back(static_cast<double>(it - labels.begin()));
        continue;
      }
      const auto value = parse_double(cell);
      if (!value) {
        throw DataError("'" + path + "' row " + std::to_string(r) +
                        ", column '" + header[j] + "': cannot parse '" + cell +
                        "' (text columns need a level-order map)");
      }
      cells[j].push_back(*value);
    }
  }

  std::vector<ObservedColumn> columns;
  columns.reserve(p);
  for (std::size_t j = 0; j < p; ++j) {
    std::vector<std::string> labels;
    const auto order = options.level_orders.find(header[j]);
    if (order != options.level_orders.end()) labels = order->second;
    columns.push_back(
        make_column(header[j], std::move(cells[j]), std::move(labels)));
  }
  return Dataset::from_columns(std::move(columns));
}

void write_csv(const Dataset& data, const std::string& path,
               const ParseOptions& options) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");

  for (int j = 0; j < data.p(); ++j) {
    if (j > 0) out << options.delimiter;
    out << data.column(j).name;
  }
  out << '\n';
  for (int i = 0; i < data.n(); ++i) {
    for (int j = 0; j < data.p(); ++j) {
      if (j > 0) out << options.delimiter;
      const ObservedColumn& col = data.column(j);
      if (col.is_missing(i)) {
        out << options.missing_token;
      } else if (!col.level_labels.empty()) {
        out << col.level_labels[static_cast<std::size_t>(col.values[i])];
      } else {
        out << format_double(col.values[i]);
      }
    }
    out << '\n';
  }
  if (!out) throw DataError("write to '" + path + "' failed");
}

void load_level_orders(const std::string& path, ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("'" + path + "': " + e.what());
  }
  if (!doc.is_object()) {
    throw DataError("'" + path + "': expected an object of column -> labels");
  }
  for (const auto& [name, labels] : doc.items()) {
    if (!labels.is_array() || labels.empty()) {
      throw DataError("'" + path + "': column '" + name +
                      "' needs a non-empty label array");
    }
    std::vector<std::string> order;
    for (const auto& label : labels) {
      if (!label.is_string()) {
        throw DataError("'" + path + "': labels for column '" + name +
                        "' must be strings");
      }
      order.push_back(label.get<std::string>());
    }
    options.level_orders[name] = std::move(order);
  }
}

EmpiricalMarginal::EmpiricalMarginal(const ObservedColumn& column) {
  unique_ = column.levels;
  if (unique_.empty()) {
    throw DataError("empirical marginal of column '" + column.name +
                    "' needs observed values");
  }
  cumulative_.assign(unique_.size(), 0);
  for (int code : column.codes) {
    if (code >= 0) ++cumulative_[code];
  }
  int running = 0;
  for (std::size_t k = 0; k < cumulative_.size(); ++k) {
    running += cumulative_[k];
    cumulative_[k] = running;
  }
  total_ = running;
}

double EmpiricalMarginal::cdf(double y) const {
  const auto it = std::upper_bound(unique_.begin(), unique_.end(), y);
  if (it == unique_.begin()) return 0.0;
  return static_cast<double>(cumulative_[it - unique_.begin() - 1]) / total_;
}

double EmpiricalMarginal::quantile(double u) const {
  if (!(u > 0.0 && u <= 1.0)) {
    throw NumericError("empirical_quantile: u must lie in (0, 1]");
  }
  // Smallest level whose cumulative fraction reaches u.
  std::size_t lo = 0, hi = unique_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (static_cast<double>(cumulative_[mid]) / total_ >= u) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return unique_[lo];
}

double empirical_quantile(const EmpiricalMarginal& marginal, double u) {
  return marginal.quantile(u);
}

std::vector<double> normal_scores(const ObservedColumn& column) {
  const int n = column.n();
  for (int i = 0; i < n; ++i) {
    if (column.is_missing(i)) {
      throw DataError("normal scores need a fully observed column, '" +
                      column.name + "' has a missing value at row " +
                      std::to_string(i + 1));
    }
  }
  // Count per level, then cumulative counts give n * F(y) per code.
  std::vector<int> cum(column.level_count(), 0);
  for (int code : column.codes) ++cum[code];
  int running = 0;
  for (auto& c : cum) {
    running += c;
    c = running;
  }
  std::vector<double> scores(n);
  const double shrink = static_cast<double>(n) / (n + 1.0);
  for (int i = 0; i < n; ++i) {
    const double frac = static_cast<double>(cum[column.codes[i]]) / n;
    scores[i] = normal_quantile(shrink * frac);
  }
  return scores;
}

}  // namespace rankcop
