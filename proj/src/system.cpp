#include "beurling/system.hpp"

#include <algorithm>
#include <cmath>

#include "beurling/errors.hpp"

namespace beurling {

namespace {

std::vector<double> sieve_primes(double limit) {
  if (limit > 4.0e9) {
    throw ResourceError("classical sieve limit too large: " +
                        std::to_string(limit));
  }
  std::uint64_t n = static_cast<std::uint64_t>(limit);
  std::vector<bool> composite(n + 1, false);
  std::vector<double> primes;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    primes.push_back(static_cast<double>(p));
    for (std::uint64_t m = p * p; m <= n; m += p) composite[m] = true;
  }
  return primes;
}

double simpson_rule(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// Adaptive Simpson on 1/log t. The integrand is smooth and monotone on
// [2, inf), so plain interval halving with the standard 15x error heuristic
// converges quickly.
double adaptive_simpson(double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = 1.0 / std::log(lm);
  double frm = 1.0 / std::log(rm);
  double left = simpson_rule(a, m, fa, flm, fm);
  double right = simpson_rule(m, b, fm, frm, fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double li_increment(double a, double b, double tol) {
  if (b <= a) return 0.0;
  double m = 0.5 * (a + b);
  double fa = 1.0 / std::log(a);
  double fm = 1.0 / std::log(m);
  double fb = 1.0 / std::log(b);
  double whole = simpson_rule(a, b, fa, fm, fb);
  return adaptive_simpson(a, b, fa, fm, fb, whole, tol, 48);
}

// Solves li(p) - li(prev) = 1 for p > prev by bracketing and bisection.
// Since li'(t) = 1/log t, consecutive roots are about log(prev) apart.
double next_li_prime(double prev) {
  double lo = prev;
  double hi = prev + 1.5 * std::log(std::max(prev, 2.72));
  while (li_increment(prev, hi, 1e-12) < 1.0) {
    lo = hi;
    hi = prev + 2.0 * (hi - prev);
  }
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval is at double resolution
    if (li_increment(prev, mid, 1e-12) < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> li_spaced_primes(double limit) {
  std::vector<double> primes;
  double prev = 2.0;  // li anchored at 2, so li(p_0) = 0 with p_0 = 2
  for (;;) {
    double p = next_li_prime(prev);
    if (p > limit * (1.0 + 1e-12)) break;
    primes.push_back(p);
    prev = p;
  }
  return primes;
}

}  // namespace

double logarithmic_integral(double x, double tol) {
  if (x < 2.0) throw RangeError("logarithmic_integral requires x >= 2");
  return li_increment(2.0, x, tol);
}

GeneralizedPrimeSystem build_system(const SystemSpec& spec) {
  GeneralizedPrimeSystem sys;
  sys.kind = spec.kind;
  switch (spec.kind) {
    case SystemKind::classical: {
      if (spec.limit <= 2.0) throw ConfigError("classical system needs limit > 2");
      sys.primes = sieve_primes(spec.limit);
      sys.limit = spec.limit;
      sys.exact_mode = true;
      break;
    }
    case SystemKind::explicit_list: {
      double prev = 1.0;
      for (double p : spec.primes) {
        if (p <= 1.0) {
          throw ConfigError("explicit prime " + std::to_string(p) +
                            " is not > 1");
        }
        if (p < prev) {
          throw ConfigError("explicit prime list is decreasing at " +
                            std::to_string(p));
        }
        prev = p;
      }
      sys.primes = spec.primes;
      sys.limit = sys.primes.empty() ? 0.0 : sys.primes.back();
      sys.exact_mode = false;
      break;
    }
    case SystemKind::li_spaced: {
      if (spec.limit <= 2.0) throw ConfigError("li_spaced system needs limit > 2");
      sys.primes = li_spaced_primes(spec.limit);
      sys.limit = spec.limit;
      sys.exact_mode = false;
      break;
    }
  }
  sys.log_primes.reserve(sys.primes.size());
  for (double p : sys.primes) sys.log_primes.push_back(std::log(p));
  return sys;
}

namespace {

// Shared state for the depth-first enumeration. The DFS picks, in ascending
// index order, which primes participate with which exponent; every exponent
// vector is visited exactly once. Duplicate prime values occupy distinct
// indices, so they yield distinct entries of equal value as required by the
// multiset semantics.
struct DfsState {
  const GeneralizedPrimeSystem* sys;
  double log_limit;
  std::uint64_t int_limit;  // floor(x_max) when exact_mode
  const EnumerationCaps* caps;
  std::vector<GeneralizedInteger>* out;
  ExponentVec stack;
  std::uint64_t pair_bytes = 0;

  void emit(double log_value, double value) {
    if (out->size() >= caps->max_entries) {
      throw ResourceError(
          "enumeration exceeds entry cap " + std::to_string(caps->max_entries) +
              " (partial count " + std::to_string(out->size()) + ")",
          out->size());
    }
    pair_bytes += stack.size() * sizeof(ExponentVec::value_type);
    std::uint64_t mem =
        (out->size() + 1) * (sizeof(GeneralizedInteger) + 16) + pair_bytes;
    if (mem > caps->max_memory_bytes) {
      throw ResourceError(
          "enumeration exceeds memory estimate cap (partial count " +
              std::to_string(out->size()) + ")",
          out->size());
    }
    GeneralizedInteger n;
    n.exponents = stack;
    n.log_value = log_value;
    n.value = value;
    out->push_back(std::move(n));
  }

  // Recomputes the stack's log with compensated summation; used at every
  // node so that pruning and the stored value agree bit for bit.
  double stack_log() const {
    KahanSum s;
    for (const auto& [k, e] : stack) s.add(e * sys->log_primes[k]);
    return s.value();
  }

  void dfs_real(std::size_t start, double log_value) {
    emit(log_value, stack.empty() ? 1.0 : std::exp(log_value));
    for (std::size_t k = start; k < sys->primes.size(); ++k) {
      // Primes are non-decreasing, so once one factor no longer fits,
      // neither does any later one.
      if (log_value + sys->log_primes[k] > log_limit) break;
      stack.emplace_back(static_cast<std::uint32_t>(k), 1u);
      for (std::uint32_t e = 1;; ++e) {
        stack.back().second = e;
        double lv = stack_log();
        if (lv > log_limit) break;
        dfs_real(k + 1, lv);
      }
      stack.pop_back();
    }
  }

  void dfs_exact(std::size_t start, std::uint64_t value) {
    emit(std::log(static_cast<double>(value)), static_cast<double>(value));
    for (std::size_t k = start; k < sys->primes.size(); ++k) {
      std::uint64_t p = static_cast<std::uint64_t>(sys->primes[k]);
      if (value > int_limit / p) break;
      stack.emplace_back(static_cast<std::uint32_t>(k), 1u);
      std::uint64_t v = value;
      for (std::uint32_t e = 1;; ++e) {
        if (v > int_limit / p) break;
        v *= p;
        stack.back().second = e;
        dfs_exact(k + 1, v);
      }
      stack.pop_back();
    }
  }
};

}  // namespace

IntegerTable enumerate(const GeneralizedPrimeSystem& system, double x_max,
                       const EnumerationCaps& caps) {
  if (x_max < 1.0) throw RangeError("enumerate requires x_max >= 1");
  if (caps.max_entries == 0) throw ConfigError("entry cap must be positive");

  IntegerTable table;
  table.system = system;
  table.x_max = x_max;

  DfsState st;
  st.sys = &system;
  st.log_limit = log_threshold(x_max);
  st.int_limit = static_cast<std::uint64_t>(x_max);
  st.caps = &caps;
  st.out = &table.entries;
  if (system.exact_mode) {
    st.dfs_exact(0, 1);
  } else {
    st.dfs_real(0, 0.0);
  }

  std::sort(table.entries.begin(), table.entries.end(),
            [](const GeneralizedInteger& a, const GeneralizedInteger& b) {
              if (a.log_value != b.log_value) return a.log_value < b.log_value;
              return a.exponents < b.exponents;
            });
  table.build_index();
  return table;
}

void IntegerTable::build_index() {
  if (entries.size() > 0xfffffffeull) {
    throw ResourceError("table too large for 32-bit indexing", entries.size());
  }
  std::uint32_t cap = 1;
  while (cap < entries.size() * 2 + 2) cap <<= 1;
  slots_.assign(cap, kEmptySlot);
  slot_mask_ = cap - 1;
  for (std::uint32_t i = 0; i < entries.size(); ++i) {
    std::uint32_t pos = static_cast<std::uint32_t>(
                            hash_exponents(entries[i].exponents)) &
                        slot_mask_;
    while (slots_[pos] != kEmptySlot) pos = (pos + 1) & slot_mask_;
    slots_[pos] = i;
  }
}

std::optional<std::uint32_t> IntegerTable::index_of(
    const ExponentVec& exponents) const {
  if (slots_.empty()) return std::nullopt;
  std::uint32_t pos =
      static_cast<std::uint32_t>(hash_exponents(exponents)) & slot_mask_;
  while (slots_[pos] != kEmptySlot) {
    if (entries[slots_[pos]].exponents == exponents) return slots_[pos];
    pos = (pos + 1) & slot_mask_;
  }
  return std::nullopt;
}

std::uint64_t IntegerTable::count_leq(double x) const {
  if (x < 1.0) return 0;
  auto it = entries.begin();
  if (system.exact_mode) {
    // Values are exact integers stored in doubles; compare directly.
    it = std::partition_point(
        entries.begin(), entries.end(),
        [x](const GeneralizedInteger& n) { return n.value <= x; });
  } else {
    double limit = log_threshold(x);
    it = std::partition_point(
        entries.begin(), entries.end(),
        [limit](const GeneralizedInteger& n) { return n.log_value <= limit; });
  }
  return static_cast<std::uint64_t>(it - entries.begin());
}

double IntegerTable::density_estimate() const {
  if (entries.empty()) return 0.0;
  double lo = std::max(x_max / 10.0, 1.0);
  KahanSum mean;
  int used = 0;
  for (int j = 0; j < 16; ++j) {
    double t = static_cast<double>(j) / 15.0;
    double sample = lo * std::pow(x_max / lo, t);
    std::uint64_t n = count_leq(sample);
    if (n == 0) continue;
    double v = entries[static_cast<std::size_t>(n - 1)].value;
    mean.add(static_cast<double>(n) / v);
    ++used;
  }
  if (used == 0) return 0.0;
  return mean.value() / used;
}

bool IntegerTable::prime_power(std::size_t i, std::uint32_t& k,
                               std::uint32_t& nu) const {
  const ExponentVec& e = entries[i].exponents;
  if (e.size() != 1) return false;
  k = e[0].first;
  nu = e[0].second;
  return true;
}

std::uint64_t IntegerTable::memory_estimate() const {
  std::uint64_t pair_bytes = 0;
  for (const auto& n : entries) {
    pair_bytes += n.exponents.size() * sizeof(ExponentVec::value_type);
  }
  return entries.size() * (sizeof(GeneralizedInteger) + 16) + pair_bytes +
         slots_.size() * sizeof(std::uint32_t);
}

std::vector<GeneralizedInteger> divisors(const GeneralizedInteger& n,
                                         const GeneralizedPrimeSystem& system) {
  std::vector<GeneralizedInteger> result;
  ExponentVec stack;
  // Recursive product over the factor list: position i chooses an exponent
  // 0..e_i for the i-th prime of n.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n.exponents.size()) {
      GeneralizedInteger d;
      d.exponents = stack;
      KahanSum lv;
      for (const auto& [k, e] : stack) lv.add(e * system.log_primes[k]);
      d.log_value = stack.empty() ? 0.0 : lv.value();
      if (system.exact_mode) {
        std::uint64_t v = 1;
        for (const auto& [k, e] : stack) {
          for (std::uint32_t j = 0; j < e; ++j) {
            v *= static_cast<std::uint64_t>(system.primes[k]);
          }
        }
        d.value = static_cast<double>(v);
      } else {
        d.value = stack.empty() ? 1.0 : std::exp(d.log_value);
      }
      result.push_back(std::move(d));
      return;
    }
    self(self, i + 1);  // exponent 0: prime absent
    stack.push_back({n.exponents[i].first, 0});
    for (std::uint32_t e = 1; e <= n.exponents[i].second; ++e) {
      stack.back().second = e;
      self(self, i + 1);
    }
    stack.pop_back();
  };
  rec(rec, 0);
  std::sort(result.begin(), result.end(),
            [](const GeneralizedInteger& a, const GeneralizedInteger& b) {
              if (a.log_value != b.log_value) return a.log_value < b.log_value;
              return a.exponents < b.exponents;
            });
  return result;
}

}  // namespace beurling
