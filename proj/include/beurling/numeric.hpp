#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace beurling {

using Complex = std::complex<double>;

// Kahan compensated summation. All long reductions in the library run through
// this so that results are reproducible and accurate to a few ulps regardless
// of the number of terms.
class KahanSum {
public:
  void add(double v) {
    double y = v - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Componentwise Kahan summation for complex accumulators.
class KahanComplexSum {
public:
  void add(const Complex& v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

private:
  KahanSum re_;
  KahanSum im_;
};

// Membership rule for "value <= x" comparisons on real-valued systems: an
// entry with logarithm lv counts as <= x when lv <= log(x) + 1e-12*|log(x)|.
// The relative slack absorbs roundoff in accumulated logarithms while staying
// far below the spacing of distinct semigroup elements at desk scale.
inline double log_threshold(double x) {
  double lx = std::log(x);
  return lx + 1e-12 * std::abs(lx);
}

inline bool log_within(double log_value, double x) {
  return log_value <= log_threshold(x);
}

// Sparse exponent vector: (prime index, exponent) pairs with ascending index
// and every exponent >= 1. The empty vector represents the integer 1.
using ExponentVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// FNV-1a over the (index, exponent) words. Used for the table's exponent
// vector index and for the cache digest.
inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t seed = 14695981039346656037ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t hash_exponents(const ExponentVec& e) {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& [k, nu] : e) {
    std::uint32_t words[2] = {k, nu};
    h = fnv1a64(words, sizeof(words), h);
  }
  return h;
}

// Pascal's triangle as doubles; exact for n <= 56, far beyond the exponent
// range reachable at desk scale (nu <= log2(x_max) ~ 40).
inline std::vector<std::vector<double>> binomial_table(std::size_t n_max) {
  std::vector<std::vector<double>> c(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    c[n].assign(n + 1, 1.0);
    for (std::size_t k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
  }
  return c;
}

// Deterministic integer power of a complex number by plain repeated
// multiplication (exponents stay tiny, and a fixed evaluation order matters
// more than the log-factor a square-and-multiply ladder would save).
inline Complex pow_int(const Complex& z, std::uint32_t n) {
  Complex r(1.0, 0.0);
  for (std::uint32_t i = 0; i < n; ++i) r *= z;
  return r;
}

}  // namespace beurling
