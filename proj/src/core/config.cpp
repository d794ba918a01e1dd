#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace irsfso::cfg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::optional<double> parse_number(const std::string& s) {
  if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return v;
}

Config::Value parse_value(const std::string& raw, const std::string& key) {
  const std::string s = trim(raw);
  if (s.empty()) throw Error(errc::config_error, key + ": empty value");

  if (s.front() == '[') {
    if (s.back() != ']') throw Error(errc::config_error, key + ": unterminated array");
    std::vector<double> out;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::string t = trim(item);
      if (t.empty()) {
        if (out.empty() && trim(body).empty()) break;  // empty array
        throw Error(errc::config_error, key + ": empty array element");
      }
      const auto num = parse_number(t);
      if (!num) throw Error(errc::config_error, key + ": non-numeric array element '" + t + "'");
      out.push_back(*num);
    }
    return out;
  }
  if (s == "true") return true;
  if (s == "false") return false;
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  if (const auto num = parse_number(s)) return *num;
  return s;  // bare identifier
}

}  // namespace

Config Config::parse(const std::string& text) {
  Config cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(errc::config_error,
                  "line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(t.substr(0, eq));
    if (key.empty())
      throw Error(errc::config_error, "line " + std::to_string(lineno) + ": empty key");
    cfg.values_[key] = parse_value(t.substr(eq + 1), key);
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::io_error, "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

void Config::set(const std::string& key, const std::string& raw_value) {
  if (trim(key).empty()) throw Error(errc::config_error, "empty key in override");
  values_[trim(key)] = parse_value(raw_value, key);
}

const Config::Value& Config::at(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw Error(errc::config_error, key + ": missing required key");
  return it->second;
}

double Config::number(const std::string& key) const {
  const Value& v = at(key);
  if (const double* d = std::get_if<double>(&v)) return *d;
  throw Error(errc::config_error, key + ": expected a number");
}

double Config::number_or(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

bool Config::boolean_or(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const Value& v = at(key);
  if (const bool* b = std::get_if<bool>(&v)) return *b;
  throw Error(errc::config_error, key + ": expected true/false");
}

std::string Config::string(const std::string& key) const {
  const Value& v = at(key);
  if (const std::string* s = std::get_if<std::string>(&v)) return *s;
  throw Error(errc::config_error, key + ": expected a string");
}

std::string Config::string_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? string(key) : fallback;
}

std::vector<double> Config::array(const std::string& key) const {
  const Value& v = at(key);
  if (const auto* a = std::get_if<std::vector<double>>(&v)) return *a;
  if (const double* d = std::get_if<double>(&v)) return {*d};
  throw Error(errc::config_error, key + ": expected an array");
}

std::optional<double> Config::maybe_number(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return number(key);
}

std::vector<std::string> Config::keys() const {
  std::vector<std::string> out;
  out.reserve(values_.size());
  for (const auto& [k, v] : values_) out.push_back(k);
  return out;
}

std::vector<std::string> Config::keys_with_prefix(const std::string& prefix) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : values_)
    if (k.rfind(prefix, 0) == 0) out.push_back(k);
  return out;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string Config::canonical_text() const {
  std::string out;
  for (const auto& [k, v] : values_) {
    out += k;
    out += " = ";
    if (const double* d = std::get_if<double>(&v)) {
      out += format_double(*d);
    } else if (const bool* b = std::get_if<bool>(&v)) {
      out += *b ? "true" : "false";
    } else if (const std::string* s = std::get_if<std::string>(&v)) {
      out += *s;
    } else {
      const auto& arr = std::get<std::vector<double>>(v);
      out += '[';
      for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += ", ";
        out += format_double(arr[i]);
      }
      out += ']';
    }
    out += '\n';
  }
  return out;
}

std::uint64_t Config::hash() const {
  const std::string text = canonical_text();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace irsfso::cfg
