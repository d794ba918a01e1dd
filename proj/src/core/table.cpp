#include "table.hpp"

#include <json.hpp>

#include "config.hpp"
#include "errors.hpp"

namespace irsfso::cfg {

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw Error(errc::domain_error, "result table needs columns");
}

void ResultTable::add_row(const std::vector<double>& row) {
  if (row.size() != columns_.size())
    throw Error(errc::domain_error, "row width does not match the column count");
  data_.insert(data_.end(), row.begin(), row.end());
}

void ResultTable::set_metadata(const std::string& key, const std::string& value) {
  for (auto& [k, v] : metadata_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  metadata_.emplace_back(key, value);
}

double ResultTable::value(std::size_t row, std::size_t col) const {
  if (col >= columns_.size() || row >= rows())
    throw Error(errc::domain_error, "table index out of range");
  return data_[row * columns_.size() + col];
}

const std::string* ResultTable::metadata_value(const std::string& key) const {
  for (const auto& [k, v] : metadata_)
    if (k == key) return &v;
  return nullptr;
}

void ResultTable::write_csv(std::ostream& os) const {
  for (const auto& [k, v] : metadata_) os << "# " << k << " = " << v << "\n";
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c) os << ',';
    os << columns_[c];
  }
  os << "\n";
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (c) os << ',';
      os << format_double(value(r, c));
    }
    os << "\n";
  }
}

void ResultTable::write_json(std::ostream& os) const {
  nlohmann::ordered_json j;
  for (const auto& [k, v] : metadata_) j["metadata"][k] = v;
  j["columns"] = columns_;
  auto rows_json = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < columns_.size(); ++c) row.push_back(value(r, c));
    rows_json.push_back(std::move(row));
  }
  j["rows"] = std::move(rows_json);
  os << j.dump(2) << "\n";
}

}  // namespace irsfso::cfg
