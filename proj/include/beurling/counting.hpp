#pragma once

#include <cstdint>
#include <vector>

#include "beurling/system.hpp"

namespace beurling {

// Weighted prime-power counts at a point x:
//   pi          = #{p <= x}
//   Pi          = sum over p^nu <= x of 1/nu
//   psi         = sum over p^nu <= x of log p
//   mertens_sum = sum over p^nu <= x of 1/(nu p^nu)
struct PrimeCounts {
  double x = 0.0;
  std::uint64_t pi = 0;
  double Pi = 0.0;
  double psi = 0.0;
  double mertens_sum = 0.0;
};

PrimeCounts prime_counts(const GeneralizedPrimeSystem& system, double x);

struct IntegerCounts {
  std::uint64_t N = 0;       // multiset count of semigroup elements <= x
  double log_density = 0.0;  // sum over n_k <= x of 1/n_k
};

IntegerCounts integer_counts(const IntegerTable& table, double x);

// Hypothesis checks at finite x. The flags are declared empirical verdicts:
//   positive_density     max over the top decade of |N(x)/x - a|/a <= 0.1
//   chebyshev_bounded    max over the grid of psi(x)/x <= 5
//   log_density_bounded  (sum 1/n_k)/log x within [0.2, 5] over the top decade
// where a is the mean of N(x)/x over grid points in the top decade.
struct DiagnosticsReport {
  struct Row {
    double x = 0.0;
    std::uint64_t N = 0;
    double N_over_x = 0.0;
    double psi = 0.0;
    double psi_over_x = 0.0;
    double mertens_dev = 0.0;        // mertens_sum - log log x (NaN for x <= e)
    double log_density_ratio = 0.0;  // (sum 1/n_k)/log x
  };
  std::vector<Row> rows;
  double density_estimate = 0.0;
  double chebyshev_sup = 0.0;
  std::vector<std::pair<double, double>> mertens_deviation;  // x > e rows only
  std::vector<std::pair<double, double>> log_density_ratio;
  bool positive_density = false;
  bool chebyshev_bounded = false;
  bool log_density_bounded = false;
};

DiagnosticsReport diagnostics(const GeneralizedPrimeSystem& system,
                              const IntegerTable& table,
                              const std::vector<double>& x_grid);

// Integral of |N(x) - a x| x^{-sigma-1} over [1, table.x_max], computed in
// closed form on each interval where the step function N is constant, with
// a sign split at x = N/a inside an interval when needed. tail_bound is the
// crude remainder envelope 2 a x_max^{1-sigma}/(sigma-1) for the dropped
// range; wrong_density fires when value*(sigma-1) > 0.5, the signature of a
// density mismatch (the integral then grows like 1/(sigma-1)).
struct L1Deviation {
  double value = 0.0;
  double tail_bound = 0.0;
  bool wrong_density = false;
};

L1Deviation l1_deviation(const IntegerTable& table, double a, double sigma);

}  // namespace beurling
