#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace irsfso::cfg {

// Flat key-value configuration with dotted section names, e.g.
//   beam.w0 = 1e-3
//   pointing.model = erf
//   sweep.values = [1, 2, 3]
// Values are numbers, booleans, identifiers/strings, or numeric arrays.
// '#' starts a comment; "inf" parses as infinity.
class Config {
public:
  using Value = std::variant<double, bool, std::string, std::vector<double>>;

  static Config parse(const std::string& text);
  static Config load(const std::string& path);

  bool has(const std::string& key) const;
  void set(const std::string& key, const std::string& raw_value);

  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  bool boolean_or(const std::string& key, bool fallback) const;
  std::string string(const std::string& key) const;
  std::string string_or(const std::string& key, const std::string& fallback) const;
  std::vector<double> array(const std::string& key) const;

  std::optional<double> maybe_number(const std::string& key) const;

  // Keys in sorted order (the canonical ordering).
  std::vector<std::string> keys() const;
  std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

  // Canonical text: sorted keys, shortest round-trip numbers. Equal configs
  // serialize identically, so the hash is reproducible.
  std::string canonical_text() const;
  std::uint64_t hash() const;  // FNV-1a over the canonical text

private:
  const Value& at(const std::string& key) const;
  std::map<std::string, Value> values_;
};

// Shortest round-trip decimal text for a double (std::to_chars).
std::string format_double(double v);

}  // namespace irsfso::cfg
