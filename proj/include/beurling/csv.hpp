#pragma once

#include <charconv>
#include <fstream>
#include <string>
#include <vector>

#include "beurling/errors.hpp"

namespace beurling {

// Locale-independent formatting shared by every CSV and cache writer: 17
// significant digits round-trips any double bit-exactly through from_chars.
inline std::string csv_double(double v) {
  char buf[40];
  auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// Output file with pinned '\n' line endings regardless of platform.
class CsvFile {
public:
  explicit CsvFile(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw ConfigError("cannot open output file: " + path);
  }

  void line(const std::string& text) { out_ << text << '\n'; }

  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      out_ << fields[i];
    }
    out_ << '\n';
  }

private:
  std::ofstream out_;
};

}  // namespace beurling
