#pragma once

#include <map>
#include <string>
#include <vector>

namespace rankcop {

// One observed variable. Missing cells are NaN in values and -1 in codes;
// levels holds the strictly increasing unique non-missing values, and each
// non-missing code is the index of its value in levels. Text columns carry
// level_labels (one per position in the caller-supplied ordering) and store
// each cell as its position in that ordering.
struct ObservedColumn {
  std::string name;
  std::vector<double> values;
  std::vector<int> codes;
  std::vector<double> levels;
  std::vector<std::string> level_labels;

  int n() const { return static_cast<int>(values.size()); }
  int level_count() const { return static_cast<int>(levels.size()); }
  bool is_missing(int row) const { return codes[row] < 0; }
};

// Builds codes and levels from raw cell values; NaN marks missing. Throws
// DataError if every value is missing while n > 0.
ObservedColumn make_column(std::string name, std::vector<double> values,
                           std::vector<std::string> level_labels = {});

class Dataset {
 public:
  static Dataset from_columns(std::vector<ObservedColumn> columns);

  int n() const { return n_; }
  int p() const { return static_cast<int>(columns_.size()); }
  const ObservedColumn& column(int j) const { return columns_[j]; }
  // Index of the named column, or -1.
  int column_index(const std::string& name) const;
  std::vector<std::string> column_names() const;

 private:
  std::vector<ObservedColumn> columns_;
  int n_ = 0;
};

struct ParseOptions {
  std::string missing_token = "NA";
  char delimiter = ',';
  // Columns listed here are read as text; every non-missing cell must match
  // one of the listed labels and is stored as its position in the list.
  std::map<std::string, std::vector<std::string>> level_orders;
};

// Reads a delimited file with a header row. Cells are numeric, the missing
// token, or (for columns named in level_orders) one of the ordered labels.
// Errors carry the 1-based row and the column name.
Dataset load_csv(const std::string& path, const ParseOptions& options = {});

// Writes the same dialect load_csv reads; numbers are emitted in shortest
// round-trip form so a write/load cycle reproduces every cell exactly.
void write_csv(const Dataset& data, const std::string& path,
               const ParseOptions& options = {});

// Loads {"column": ["label", ...], ...} into options.level_orders.
void load_level_orders(const std::string& path, ParseOptions& options);

// Empirical distribution of a column's non-missing values.
class EmpiricalMarginal {
 public:
  explicit EmpiricalMarginal(const ObservedColumn& column);

  // F(y) = fraction of observed values <= y.
  double cdf(double y) const;
  // Left-continuous pseudo-inverse: the smallest observed value y with
  // F(y) >= u. Throws NumericError unless u lies in (0, 1].
  double quantile(double u) const;
  int count() const { return total_; }
  const std::vector<double>& support() const { return unique_; }

 private:
  std::vector<double> unique_;
  std::vector<int> cumulative_;
  int total_ = 0;
};

// Free-function form of EmpiricalMarginal::quantile.
double empirical_quantile(const EmpiricalMarginal& marginal, double u);

// Normal scores Phi^{-1}[ n/(n+1) * F(y_i) ] for a fully observed column;
// tied observations get identical scores. Throws DataError on missing cells.
std::vector<double> normal_scores(const ObservedColumn& column);

}  // namespace rankcop
