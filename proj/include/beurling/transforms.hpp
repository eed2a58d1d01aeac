#pragma once

#include <vector>

#include "beurling/arithmetic.hpp"

namespace beurling {

// Truncated Mellin-Stieltjes transform sum_{n_k <= x_trunc} f(n_k) n_k^{-s}
// together with tail information:
//   value         the truncated sum itself, in table order, compensated
//   tail_estimate signed model of the dropped tail, c_hat x^{1-s}/(s-1),
//                 where c_hat is the measured weighted density of f dN over
//                 the top decade (complex in general)
//   tail_bound    envelope sup|f| * a_hat * x^{1-sigma} * sigma/(sigma-1)
//   tail_valid    false when the system fails the density stability check,
//                 i.e. the linear-growth tail model has no empirical basis
// A twist phase theta on f is folded into the exponent (s_eff = s - i theta)
// so twisted evaluations are bit-identical to shifted plain ones.
struct MellinEvaluation {
  Complex s{0.0, 0.0};
  double x_trunc = 0.0;
  Complex value{0.0, 0.0};
  Complex tail_estimate{0.0, 0.0};
  double tail_bound = 0.0;
  bool tail_valid = false;
};

// Truncated sum plus the modeled tail; the best available point estimate.
inline Complex completed(const MellinEvaluation& m) {
  return m.value + m.tail_estimate;
}

// Requires Re(s) > 1 unless allow_no_tail is set (then tail fields are zero
// and tail_valid is false).
MellinEvaluation mellin(const PrimePowerFunction& f, const IntegerTable& table,
                        Complex s, double x_trunc, bool allow_no_tail = false);

MellinEvaluation zeta(const IntegerTable& table, Complex s, double x_trunc,
                      bool allow_no_tail = false);

// Residue comparison rows for the candidate density a:
//   value    = truncated zeta + tail_estimate (the completed evaluation)
//   residual = value - a/(s-1)
//   scaled   = |residual| * (sigma-1)
// scaled stays small along sigma -> 1+ exactly when a matches the true
// density.
struct ResidueScanRow {
  double sigma = 0.0;
  double t = 0.0;
  Complex value{0.0, 0.0};
  Complex residual{0.0, 0.0};
  double scaled = 0.0;
  double tail_bound = 0.0;
};

std::vector<ResidueScanRow> zeta_residue_scan(const IntegerTable& table,
                                              const std::vector<double>& sigma_list,
                                              double a,
                                              const std::vector<double>& t_list);

// F(x) = sum_{n_k <= x} f(n_k) log(n_k) log(x/n_k), the doubly log-weighted
// average; equals the iterated integral of G since G is a step function.
Complex F_of(const PrimePowerFunction& f, const IntegerTable& table, double x);

// Contour parameters for the Perron check; sigma_x = 1 + 1/log x.
struct ContourSpec {
  double x = 0.0;
  double T = 0.0;
  double step = 0.0;
};

// Compares F(x)/x against the truncated Perron integral
//   (1/2 pi) int_{-T}^{T} x^{sigma_x - 1 + it} (-Ghat'(sigma_x + it))
//                          / (sigma_x + it)^2 dt,
// with Ghat'(s) = -sum f(n_k) log(n_k) n_k^{-s}. The quadrature runs the
// trapezoid rule at step/2; the coarse result on the even points gives the
// step-halving error estimate. Throws NumericalError when that estimate
// exceeds 0.5.
struct PerronResult {
  double x = 0.0;
  Complex contour{0.0, 0.0};
  Complex direct{0.0, 0.0};
  double rel_err = 0.0;      // |contour - direct| / max(|direct|, 1)
  double halving_err = 0.0;  // |fine - coarse|, both scaled by 1/(2 pi)
};

PerronResult perron_check(const PrimePowerFunction& f, const IntegerTable& table,
                          const ContourSpec& spec);

// Matched-scale residuals for G(x) ~ c x^{1+i alpha}/(1+i alpha):
//   lhs_resid = |sum_{n_k<=x} f(n_k) log(x/n_k) - c x^{1+i alpha}/(1+i alpha)^2| / x
//   rhs_resid = |Ghat(sigma_x + i alpha) - c/(sigma_x - 1)| * (sigma_x - 1)
// with sigma_x = 1 + 1/log x and Ghat the completed Mellin evaluation.
struct EquivalenceRow {
  double x = 0.0;
  double lhs_resid = 0.0;
  double rhs_resid = 0.0;
};

std::vector<EquivalenceRow> equivalence_report(const PrimePowerFunction& f,
                                               const IntegerTable& table,
                                               Complex c, double alpha,
                                               const std::vector<double>& x_grid);

}  // namespace beurling
