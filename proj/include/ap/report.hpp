#pragma once

#include <string>
#include <vector>

namespace ap {

/// Ordered key-value report document with deterministic serialization. Values are
/// preformatted strings; numeric helpers format doubles with fixed precision so
/// identical runs emit identical bytes.
class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  void put(const std::string& key, const std::string& value);
  void put(const std::string& key, double value);
  void put(const std::string& key, long long value);
  void put(const std::string& key, int value) { put(key, (long long)value); }
  void put(const std::string& key, size_t value) { put(key, (long long)value); }
  void put(const std::string& key, bool value) { put(key, std::string(value ? "yes" : "no")); }
  void put_section(const std::string& name);

  const std::string& get(const std::string& key) const;  // throws if missing
  bool has(const std::string& key) const;

  std::string to_text() const;
  const std::string& title() const { return title_; }

  /// Formats a double with 12 significant digits, no locale dependence.
  static std::string format_double(double v);

 private:
  std::string title_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Minimal CSV writer with RFC-style quoting.
class CsvWriter {
 public:
  void row(const std::vector<std::string>& cells);
  std::string str() const { return out_; }

 private:
  std::string out_;
};

}  // namespace ap
