#pragma once

#include <vector>

#include "beurling/arithmetic.hpp"

namespace beurling {

enum class CriterionVerdict { converges, diverges, inconclusive };

// Partial sums of S(x) = sum over p^nu <= x of
// (1 - Re(g(p^nu) p^{-i nu alpha})) / (nu p^nu), with a slope verdict: the
// sum is sampled at x^{1/8}, x^{1/4}, x^{1/2}, x (three doublings of log x)
// and the average increment per doubling decides divergence (> 0.35),
// convergence (< 0.02), or neither. A divergent sum grows like c*loglog x
// with c >= 1/2, i.e. c*log 2 >= 0.35 per log-doubling, which is what the
// thresholds encode.
struct CriterionResult {
  double alpha = 0.0;
  std::vector<std::pair<double, double>> partial_sums;  // (x, S(x)) on the grid
  CriterionVerdict verdict = CriterionVerdict::inconclusive;
  double limit_estimate = 0.0;    // last partial sum
  double slope_per_doubling = 0.0;
  bool negative_summands = false;  // |g| > 1 somewhere on the sampled range
};

CriterionResult criterion(const PrimePowerFunction& g, double alpha,
                          const GeneralizedPrimeSystem& system,
                          const std::vector<double>& x_grid);

// Grid search over alpha: the winner minimizes the final partial sum, with
// ties broken toward smaller |alpha|, then toward the nonnegative value.
struct AlphaSearch {
  double best_alpha = 0.0;
  bool convergent_found = false;  // some grid point had verdict converges
  std::vector<CriterionResult> all;
};

AlphaSearch find_alpha(const PrimePowerFunction& g,
                       const GeneralizedPrimeSystem& system,
                       const std::vector<double>& alpha_grid, double x_max);

enum class PredictionMode { exp_integral, euler_product, zero };

// Predicted summatory function G(x):
//   exp_integral:  a_hat * x^{1+i alpha}/(1+i alpha)
//                    * exp(-sum_{p^nu<=x} (1 - g(p^nu) p^{-i nu alpha})/(nu p^nu))
//   euler_product: a_hat * x^{1+i alpha}/(1+i alpha)
//                    * prod_{p<=x} (1-1/p)(1 + sum_nu f(p^nu) p^{-nu(1+i alpha)})
//   zero:          identically 0 (the divergent branch).
// a_hat is the table's measured density (exactly 1 on classical tables), so
// the same formulas remain calibrated on systems whose integer density is
// not 1.
struct MeanValuePrediction {
  Complex c{0.0, 0.0};  // coefficient such that G(x) ~ c x^{1+i alpha} at the top sample
  double alpha = 0.0;
  PredictionMode mode = PredictionMode::exp_integral;
  std::vector<std::pair<double, Complex>> samples;  // (x, predicted G(x))
};

MeanValuePrediction predict_halasz(const MultiplicativePair& fg, double alpha,
                                   const GeneralizedPrimeSystem& system,
                                   const IntegerTable& table,
                                   const std::vector<double>& x_grid,
                                   PredictionMode mode);

// Real-valued mean value: exp(-sum (1 - g(p^nu))/(nu p^nu)) over p^nu <= x,
// or 0 when the criterion at alpha = 0 diverges. Requires f real.
double wirsing(const PrimePowerFunction& f, const GeneralizedPrimeSystem& system,
               double x);

// Side-by-side comparison of the brute-force summatory function against the
// prediction. The mode is chosen by the criterion verdict at the top grid
// point: zero when it diverges, exp_integral otherwise.
struct CompareRow {
  double x = 0.0;
  Complex G_over_x{0.0, 0.0};
  Complex pred_over_x{0.0, 0.0};
  double abs_err = 0.0;
};

std::vector<CompareRow> compare(const MultiplicativePair& fg,
                                const IntegerTable& table, double alpha,
                                const std::vector<double>& x_grid);

}  // namespace beurling
