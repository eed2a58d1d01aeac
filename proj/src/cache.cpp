#include "beurling/cache.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "beurling/csv.hpp"
#include "beurling/errors.hpp"

namespace beurling {

namespace {

constexpr const char* kCacheFileName = "table_cache.csv";

std::string digest_hex(std::uint64_t digest) {
  char buf[17];
  auto res = std::to_chars(buf, buf + sizeof(buf), digest, 16);
  return std::string(buf, res.ptr);
}

bool parse_double(std::string_view text, double& out) {
  auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

bool parse_u32(std::string_view text, std::uint32_t& out) {
  auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

// `k:e` pairs joined by ';'; empty string for the entry 1.
bool parse_exponents(std::string_view text, ExponentVec& out) {
  out.clear();
  if (text.empty()) return true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    std::string_view pair = text.substr(
        pos, semi == std::string_view::npos ? std::string_view::npos
                                            : semi - pos);
    std::size_t colon = pair.find(':');
    if (colon == std::string_view::npos) return false;
    std::uint32_t k = 0, e = 0;
    if (!parse_u32(pair.substr(0, colon), k)) return false;
    if (!parse_u32(pair.substr(colon + 1), e)) return false;
    out.emplace_back(k, e);
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return true;
}

// Loads a cache file. Returns the table on success; `existed` reports whether
// there was a file at all, so the caller can distinguish "first run" from
// "stale cache".
std::optional<IntegerTable> try_load(const std::string& path,
                                     const GeneralizedPrimeSystem& system,
                                     double x_max, bool& existed) {
  std::ifstream in(path, std::ios::binary);
  existed = static_cast<bool>(in);
  if (!existed) return std::nullopt;

  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  std::string expect = "# " + digest_hex(table_digest(system, x_max)) + "," +
                       csv_double(x_max) + ",";
  if (line.compare(0, expect.size(), expect) != 0) return std::nullopt;
  std::uint64_t count = 0;
  {
    std::string_view tail(line);
    tail.remove_prefix(expect.size());
    auto res = std::from_chars(tail.data(), tail.data() + tail.size(), count);
    if (res.ec != std::errc() || res.ptr != tail.data() + tail.size()) {
      return std::nullopt;
    }
  }

  IntegerTable table;
  table.system = system;
  table.x_max = x_max;
  table.entries.reserve(count);
  while (std::getline(in, line)) {
    std::string_view row(line);
    std::size_t c1 = row.find(',');
    if (c1 == std::string_view::npos) return std::nullopt;
    std::size_t c2 = row.find(',', c1 + 1);
    if (c2 == std::string_view::npos) return std::nullopt;
    GeneralizedInteger entry;
    if (!parse_double(row.substr(0, c1), entry.log_value)) return std::nullopt;
    if (!parse_double(row.substr(c1 + 1, c2 - c1 - 1), entry.value)) {
      return std::nullopt;
    }
    if (!parse_exponents(row.substr(c2 + 1), entry.exponents)) {
      return std::nullopt;
    }
    table.entries.push_back(std::move(entry));
  }
  if (table.entries.size() != count) return std::nullopt;
  table.build_index();
  return table;
}

}  // namespace

std::uint64_t table_digest(const GeneralizedPrimeSystem& system, double x_max) {
  std::uint64_t h = fnv1a64(nullptr, 0);
  for (double p : system.primes) h = fnv1a64(&p, sizeof(p), h);
  return fnv1a64(&x_max, sizeof(x_max), h);
}

void write_table_csv(const IntegerTable& table, const std::string& path) {
  CsvFile out(path);
  std::ostringstream header;
  header << "# " << digest_hex(table_digest(table.system, table.x_max)) << ','
         << csv_double(table.x_max) << ',' << table.size();
  out.line(header.str());
  std::string exps;
  for (const auto& e : table.entries) {
    exps.clear();
    for (std::size_t i = 0; i < e.exponents.size(); ++i) {
      if (i) exps += ';';
      exps += std::to_string(e.exponents[i].first);
      exps += ':';
      exps += std::to_string(e.exponents[i].second);
    }
    out.row({csv_double(e.log_value), csv_double(e.value), exps});
  }
}

IntegerTable load_or_build(const GeneralizedPrimeSystem& system, double x_max,
                           const EnumerationCaps& caps,
                           const std::optional<std::string>& cache_dir) {
  std::string path;
  if (cache_dir) {
    path = *cache_dir + "/" + kCacheFileName;
    bool existed = false;
    if (auto loaded = try_load(path, system, x_max, existed)) {
      return std::move(*loaded);
    }
    if (existed) {
      std::cerr << "note: table cache at " << path
                << " is stale; rebuilding\n";
    }
  }
  IntegerTable table = enumerate(system, x_max, caps);
  if (cache_dir) write_table_csv(table, path);
  return table;
}

}  // namespace beurling
