#pragma once

#include <optional>
#include <string>

#include "beurling/system.hpp"

namespace beurling {

// Digest over the prime list and the range; identifies which table a cache
// file holds.
std::uint64_t table_digest(const GeneralizedPrimeSystem& system, double x_max);

// Table dump in the cache schema: header `# <digest_hex>,<x_max>,<count>`,
// then one row `log_value,value,exponent_list` per entry, where
// exponent_list is `k:e` pairs joined by ';' (empty for the entry 1). The
// 17-digit formatting makes a reloaded table bit-identical.
void write_table_csv(const IntegerTable& table, const std::string& path);

// Returns the cached table when the digest and range match, otherwise
// enumerates (and refreshes the cache file when cache_dir is set). A stale or
// unreadable cache is rebuilt with a notice on the standard error stream.
IntegerTable load_or_build(const GeneralizedPrimeSystem& system, double x_max,
                           const EnumerationCaps& caps,
                           const std::optional<std::string>& cache_dir);

}  // namespace beurling
