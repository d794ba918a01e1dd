#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace irsfso::cfg {

// Column-named numeric results plus the metadata needed to reproduce the
// run (config hash, seed, tool version).
class ResultTable {
public:
  explicit ResultTable(std::vector<std::string> columns);

  void add_row(const std::vector<double>& row);
  void set_metadata(const std::string& key, const std::string& value);

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t rows() const { return data_.size() / columns_.size(); }
  double value(std::size_t row, std::size_t col) const;
  const std::vector<std::pair<std::string, std::string>>& metadata() const { return metadata_; }
  const std::string* metadata_value(const std::string& key) const;

  // CSV: '# key = value' metadata lines, a header row, then data rows with
  // shortest round-trip number formatting.
  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;

private:
  std::vector<std::string> columns_;
  std::vector<double> data_;  // row-major
  std::vector<std::pair<std::string, std::string>> metadata_;
};

}  // namespace irsfso::cfg
