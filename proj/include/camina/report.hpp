#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace camina {

/// Line-oriented `key = value` report. The first line is always
/// `report-version = 1`.
class Report {
 public:
  Report() { add("report-version", 1); }

  Report& add(const std::string& key, std::string value) {
    lines_.emplace_back(key, std::move(value));
    return *this;
  }
  Report& add(const std::string& key, const char* value) { return add(key, std::string(value)); }
  Report& add(const std::string& key, bool value) { return add(key, std::string(value ? "true" : "false")); }

  template <typename T>
    requires std::is_integral_v<T>
  Report& add(const std::string& key, T value) {
    return add(key, std::to_string(value));
  }

  template <typename T>
  Report& add(const std::string& key, const std::optional<T>& value) {
    if (!value) return add(key, "n/a");
    return add(key, *value);
  }

  template <typename T>
  Report& add(const std::string& key, const std::vector<T>& values) {
    std::string s;
    for (const auto& v : values) s += (s.empty() ? "" : ",") + std::to_string(v);
    return add(key, s.empty() ? std::string("-") : s);
  }

  /// Append another report's lines (without its version line) under a prefix.
  Report& merge(const Report& other, const std::string& prefix = {}) {
    for (std::size_t i = 1; i < other.lines_.size(); ++i)
      lines_.emplace_back(prefix + other.lines_[i].first, other.lines_[i].second);
    return *this;
  }

  const std::vector<std::pair<std::string, std::string>>& lines() const { return lines_; }

  std::optional<std::string> get(const std::string& key) const {
    for (const auto& [k, v] : lines_)
      if (k == key) return v;
    return std::nullopt;
  }

  std::string str() const {
    std::string out;
    for (const auto& [k, v] : lines_) out += k + " = " + v + "\n";
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Report& r) { return os << r.str(); }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

}  // namespace camina
