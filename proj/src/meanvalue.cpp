#include "beurling/meanvalue.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "beurling/errors.hpp"

namespace beurling {

namespace {

// One pass over prime powers <= x accumulating the real criterion summand
// and, optionally, the complex exponent used by the prediction. The twist
// phase of g and the rotation by alpha combine into a single phase
// (theta - alpha) per factor, so shifting both by beta is an exact no-op.
struct CriterionSums {
  double real_sum = 0.0;
  Complex complex_sum{0.0, 0.0};
  bool negative_summands = false;
};

CriterionSums criterion_sums(const PrimePowerFunction& g, double alpha,
                             const GeneralizedPrimeSystem& system, double x) {
  CriterionSums out;
  double limit = log_threshold(x);
  double phase = g.theta() - alpha;
  KahanSum re;
  KahanComplexSum cplx;
  for (std::uint32_t k = 0; k < system.primes.size(); ++k) {
    double lp = system.log_primes[k];
    if (lp > limit) break;
    double pw = system.primes[k];
    for (std::uint32_t nu = 1; nu * lp <= limit; ++nu) {
      Complex rotated = g.base_value(system, k, nu);
      if (phase != 0.0) rotated *= std::polar(1.0, nu * phase * lp);
      if (std::abs(rotated) > 1.0 + 1e-12) out.negative_summands = true;
      double denom = nu * pw;
      re.add((1.0 - rotated.real()) / denom);
      cplx.add((Complex(1.0, 0.0) - rotated) / denom);
      pw *= system.primes[k];
    }
  }
  out.real_sum = re.value();
  out.complex_sum = cplx.value();
  return out;
}

CriterionVerdict slope_verdict(const PrimePowerFunction& g, double alpha,
                               const GeneralizedPrimeSystem& system,
                               double x_top, double& slope_out) {
  // Sample at x^{1/8}, x^{1/4}, x^{1/2}, x and average the increment per
  // doubling of log x.
  double s[4];
  for (int i = 0; i < 4; ++i) {
    double x = std::pow(x_top, 1.0 / (1 << (3 - i)));
    s[i] = criterion_sums(g, alpha, system, x).real_sum;
  }
  slope_out = (s[3] - s[0]) / 3.0;
  if (slope_out > 0.35) return CriterionVerdict::diverges;
  if (slope_out < 0.02) return CriterionVerdict::converges;
  return CriterionVerdict::inconclusive;
}

}  // namespace

CriterionResult criterion(const PrimePowerFunction& g, double alpha,
                          const GeneralizedPrimeSystem& system,
                          const std::vector<double>& x_grid) {
  if (x_grid.empty()) throw RangeError("criterion needs a non-empty grid");
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    if (x_grid[i] < 1.0 || (i > 0 && x_grid[i] <= x_grid[i - 1])) {
      throw RangeError("criterion grid must be increasing and >= 1");
    }
  }
  CriterionResult out;
  out.alpha = alpha;
  for (double x : x_grid) {
    CriterionSums s = criterion_sums(g, alpha, system, x);
    out.partial_sums.emplace_back(x, s.real_sum);
    out.negative_summands = out.negative_summands || s.negative_summands;
  }
  out.limit_estimate = out.partial_sums.back().second;
  out.verdict =
      slope_verdict(g, alpha, system, x_grid.back(), out.slope_per_doubling);
  return out;
}

AlphaSearch find_alpha(const PrimePowerFunction& g,
                       const GeneralizedPrimeSystem& system,
                       const std::vector<double>& alpha_grid, double x_max) {
  if (alpha_grid.empty()) throw RangeError("find_alpha needs a non-empty grid");
  AlphaSearch out;
  std::vector<double> x_grid;
  for (int i = 3; i >= 0; --i) x_grid.push_back(std::pow(x_max, 1.0 / (1 << i)));
  double best_value = 0.0;
  bool first = true;
  for (double alpha : alpha_grid) {
    CriterionResult r = criterion(g, alpha, system, x_grid);
    if (r.verdict == CriterionVerdict::converges) out.convergent_found = true;
    bool better;
    if (first) {
      better = true;
      first = false;
    } else if (r.limit_estimate < best_value) {
      better = true;
    } else if (r.limit_estimate == best_value) {
      better = std::abs(alpha) < std::abs(out.best_alpha) ||
               (std::abs(alpha) == std::abs(out.best_alpha) &&
                alpha > out.best_alpha);
    } else {
      better = false;
    }
    if (better) {
      best_value = r.limit_estimate;
      out.best_alpha = alpha;
    }
    out.all.push_back(std::move(r));
  }
  return out;
}

namespace {

Complex main_term(double x, double alpha) {
  // x^{1+i alpha}/(1+i alpha), written so alpha = 0 yields exactly x.
  Complex xs = x * std::polar(1.0, alpha * std::log(x));
  return xs / Complex(1.0, alpha);
}

}  // namespace

MeanValuePrediction predict_halasz(const MultiplicativePair& fg, double alpha,
                                   const GeneralizedPrimeSystem& system,
                                   const IntegerTable& table,
                                   const std::vector<double>& x_grid,
                                   PredictionMode mode) {
  if (x_grid.empty()) throw RangeError("predict_halasz needs a grid");
  MeanValuePrediction out;
  out.alpha = alpha;
  out.mode = mode;
  double a_hat = table.density_estimate();

  for (double x : x_grid) {
    Complex pred(0.0, 0.0);
    switch (mode) {
      case PredictionMode::zero:
        break;
      case PredictionMode::exp_integral: {
        Complex S = criterion_sums(fg.g, alpha, system, x).complex_sum;
        pred = a_hat * main_term(x, alpha) * std::exp(-S);
        break;
      }
      case PredictionMode::euler_product: {
        // prod over p <= x of (1 - 1/p)(1 + sum_nu f(p^nu) p^{-nu(1+i alpha)})
        // with nu running to the largest power with p^nu <= x.
        double limit = log_threshold(x);
        Complex prod(1.0, 0.0);
        for (std::uint32_t k = 0; k < system.primes.size(); ++k) {
          double lp = system.log_primes[k];
          if (lp > limit) break;
          std::uint32_t m = static_cast<std::uint32_t>(limit / lp);
          KahanComplexSum factor;
          factor.add(Complex(1.0, 0.0));
          for (std::uint32_t nu = 1; nu <= m; ++nu) {
            Complex fv = fg.f.value(system, k, nu);
            // p^{-nu(1+i alpha)} = exp(-(nu lp)) * rotation.
            Complex decay = std::exp(-static_cast<double>(nu) * lp) *
                            std::polar(1.0, -alpha * nu * lp);
            factor.add(fv * decay);
          }
          Complex fac =
              (1.0 - 1.0 / system.primes[k]) * factor.value();
          if (std::abs(fac) == 0.0) {
            throw DomainError("euler_product factor vanishes at prime index " +
                              std::to_string(k));
          }
          prod *= fac;
        }
        pred = a_hat * main_term(x, alpha) * prod;
        break;
      }
    }
    out.samples.emplace_back(x, pred);
  }
  // Coefficient at the top sample: G(x) ~ c x^{1+i alpha}/(1+i alpha).
  out.c = out.samples.back().second / main_term(x_grid.back(), alpha);
  return out;
}

double wirsing(const PrimePowerFunction& f, const GeneralizedPrimeSystem& system,
               double x) {
  if (!f.is_real(system, x)) {
    throw DomainError("wirsing requires a real-valued function");
  }
  MultiplicativePair fg = pair_from_f(f, system, x);
  double slope = 0.0;
  CriterionVerdict verdict = slope_verdict(fg.g, 0.0, system, x, slope);
  if (verdict == CriterionVerdict::diverges) return 0.0;
  return std::exp(-criterion_sums(fg.g, 0.0, system, x).real_sum);
}

std::vector<CompareRow> compare(const MultiplicativePair& fg,
                                const IntegerTable& table, double alpha,
                                const std::vector<double>& x_grid) {
  if (x_grid.empty()) throw RangeError("compare needs a grid");
  double slope = 0.0;
  CriterionVerdict verdict =
      slope_verdict(fg.g, alpha, table.system, x_grid.back(), slope);
  PredictionMode mode = verdict == CriterionVerdict::diverges
                            ? PredictionMode::zero
                            : PredictionMode::exp_integral;
  MeanValuePrediction pred =
      predict_halasz(fg, alpha, table.system, table, x_grid, mode);
  std::vector<CompareRow> rows;
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    CompareRow row;
    row.x = x_grid[i];
    row.G_over_x = summatory(fg.f, table, row.x) / row.x;
    row.pred_over_x = pred.samples[i].second / row.x;
    row.abs_err = std::abs(row.G_over_x - row.pred_over_x);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace beurling
