#include "ap/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace ap {

void Report::put(const std::string& key, const std::string& value) {
  entries_.push_back({key, value});
}

void Report::put(const std::string& key, double value) { put(key, format_double(value)); }

void Report::put(const std::string& key, long long value) { put(key, std::to_string(value)); }

void Report::put_section(const std::string& name) { entries_.push_back({"", name}); }

const std::string& Report::get(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  throw std::out_of_range("report key not found: " + key);
}

bool Report::has(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return true;
  return false;
}

std::string Report::format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string Report::to_text() const {
  std::string out = "# " + title_ + "\n";
  for (const auto& [k, v] : entries_) {
    if (k.empty()) {
      out += "\n[" + v + "]\n";
    } else {
      out += k + " = " + v + "\n";
    }
  }
  return out;
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ",";
    const std::string& c = cells[i];
    bool quote = c.find_first_of(",\"\n") != std::string::npos;
    if (!quote) {
      out_ += c;
    } else {
      out_ += '"';
      for (char ch : c) {
        if (ch == '"') out_ += '"';
        out_ += ch;
      }
      out_ += '"';
    }
  }
  out_ += "\n";
}

}  // namespace ap
