#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beurling/numeric.hpp"

namespace beurling {

enum class SystemKind { classical, explicit_list, li_spaced };

// Construction request for a prime system.
//  classical:     integer primes from an Eratosthenes sieve, p <= limit.
//  explicit_list: user-supplied non-decreasing reals > 1 (duplicates allowed,
//                 multiplicities are meaningful).
//  li_spaced:     real primes p_k solving li(p_k) = k, li(x) = int_2^x dt/log t,
//                 retained while p_k <= limit.
struct SystemSpec {
  SystemKind kind = SystemKind::classical;
  double limit = 0.0;
  std::vector<double> primes;
};

struct GeneralizedPrimeSystem {
  SystemKind kind = SystemKind::classical;
  double limit = 0.0;
  // True iff the primes are exact machine integers produced by the classical
  // sieve; enables exact 64-bit semigroup arithmetic downstream.
  bool exact_mode = false;
  std::vector<double> primes;      // non-decreasing, every value > 1
  std::vector<double> log_primes;  // cached logs, same order
};

// Validates the spec and materializes the prime sequence.
GeneralizedPrimeSystem build_system(const SystemSpec& spec);

// One element of the multiplicative semigroup. Distinct exponent vectors are
// distinct elements even when their values coincide (multiset semantics).
struct GeneralizedInteger {
  ExponentVec exponents;   // ascending prime index, exponents >= 1; empty = 1
  double log_value = 0.0;  // sum of e_k log p_k, compensated
  double value = 1.0;      // exp(log_value); exact integer product in exact_mode
};

struct EnumerationCaps {
  std::uint64_t max_entries = 100000000;               // 1e8 default
  std::uint64_t max_memory_bytes = 8ull << 30;         // 8 GiB estimate guard
};

// Sorted, divisor-closed enumeration of all semigroup elements with value
// <= x_max. Immutable after construction; lookups are read-only.
class IntegerTable {
public:
  GeneralizedPrimeSystem system;
  double x_max = 1.0;
  std::vector<GeneralizedInteger> entries;  // sorted by (log_value, exponents)

  std::size_t size() const { return entries.size(); }

  // Multiset count of entries with value <= x (the counting function N(x)).
  std::uint64_t count_leq(double x) const;

  // Index of the entry with exactly these exponents, if present.
  std::optional<std::uint32_t> index_of(const ExponentVec& exponents) const;

  // Measured density a_hat: N(v)/v averaged over 16 log-spaced sample points
  // in the top decade [x_max/10, x_max], with each sample snapped to the
  // largest entry value below it so the ratio is taken at an actual jump
  // point. On the classical system every ratio is exactly 1.0.
  double density_estimate() const;

  // If entry i is a prime power p_k^nu, reports (k, nu) and returns true.
  bool prime_power(std::size_t i, std::uint32_t& k, std::uint32_t& nu) const;

  // Rough resident-size estimate used by the memory cap.
  std::uint64_t memory_estimate() const;

  // Called once by enumerate()/cache loading after entries are final.
  void build_index();

private:
  // Open-addressing index over exponent vectors (power-of-two table, linear
  // probing). Keys live in `entries`; the map stores indices only, which
  // keeps the footprint at a few bytes per element.
  std::vector<std::uint32_t> slots_;
  std::uint32_t slot_mask_ = 0;
  static constexpr std::uint32_t kEmptySlot = 0xffffffffu;
};

// Depth-first enumeration of every exponent vector with value <= x_max,
// followed by a deterministic sort. Throws ResourceError (with the partial
// count) if a cap would be exceeded; never silently truncates.
IntegerTable enumerate(const GeneralizedPrimeSystem& system, double x_max,
                       const EnumerationCaps& caps = {});

// All componentwise-dominated exponent vectors of n, sorted by value.
std::vector<GeneralizedInteger> divisors(const GeneralizedInteger& n,
                                         const GeneralizedPrimeSystem& system);

// li(x) = int_2^x dt/log t via adaptive Simpson; exposed for tests and the
// li_spaced generator.
double logarithmic_integral(double x, double tol = 1e-12);

}  // namespace beurling
