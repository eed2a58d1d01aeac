#include "beurling/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "beurling/errors.hpp"

namespace beurling {

namespace {

// Untwisted multiplicative value over the factorization. The twist phase is
// handled by shifting s instead, which keeps twisted evaluations bit-identical
// to plain evaluations at the shifted point.
Complex base_eval(const PrimePowerFunction& f, const GeneralizedInteger& n,
                  const GeneralizedPrimeSystem& system) {
  Complex v(1.0, 0.0);
  for (const auto& [k, nu] : n.exponents) v *= f.base_value(system, k, nu);
  return v;
}

void check_x_in_table(double x, const IntegerTable& table, const char* who) {
  if (!(x >= 1.0) || x > table.x_max * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << who << ": x = " << x << " outside table range [1, " << table.x_max
        << "]";
    throw RangeError(msg.str());
  }
}

// Density and weighted-density samples over the decade below x_top: 16
// log-spaced points, each snapped down to an actual entry value so the ratios
// are taken at jump points of the step functions.
struct TailModel {
  double a_hat = 0.0;   // mean N(v)/v
  Complex c_hat{0.0, 0.0};  // mean W(v)/v, W the running sum of f base values
  bool stable = false;  // max |N(v)/v - a_hat| / a_hat <= 0.1
};

TailModel measure_tail_model(const IntegerTable& table,
                             const std::vector<Complex>& prefix_base,
                             double x_top) {
  TailModel out;
  std::vector<double> ratios;
  KahanSum a_acc;
  KahanComplexSum c_acc;
  for (int j = 0; j < 16; ++j) {
    double v = x_top * std::pow(10.0, (j - 15) / 15.0);
    double lim = log_threshold(v);
    auto it = std::upper_bound(
        table.entries.begin(), table.entries.end(), lim,
        [](double t, const GeneralizedInteger& e) { return t < e.log_value; });
    if (it == table.entries.begin()) continue;
    std::size_t idx = static_cast<std::size_t>(it - table.entries.begin());
    double snapped = table.entries[idx - 1].value;
    double ratio = static_cast<double>(idx) / snapped;
    ratios.push_back(ratio);
    a_acc.add(ratio);
    c_acc.add(prefix_base[idx] / snapped);
  }
  if (ratios.empty()) return out;
  out.a_hat = a_acc.value() / static_cast<double>(ratios.size());
  out.c_hat = c_acc.value() / static_cast<double>(ratios.size());
  double worst = 0.0;
  for (double r : ratios) worst = std::max(worst, std::abs(r - out.a_hat));
  out.stable = out.a_hat > 0.0 && worst <= 0.1 * out.a_hat;
  return out;
}

}  // namespace

MellinEvaluation mellin(const PrimePowerFunction& f, const IntegerTable& table,
                        Complex s, double x_trunc, bool allow_no_tail) {
  check_x_in_table(x_trunc, table, "mellin");
  bool with_tail = s.real() > 1.0;
  if (!with_tail && !allow_no_tail) {
    std::ostringstream msg;
    msg << "mellin: Re(s) = " << s.real()
        << " <= 1 has no tail bound; pass allow_no_tail for the bare sum";
    throw RangeError(msg.str());
  }

  // The twist n^{i theta} merges with n^{-s} into n^{-(s - i theta)}.
  Complex s_eff = s - Complex(0.0, f.theta());

  MellinEvaluation out;
  out.s = s;
  out.x_trunc = x_trunc;

  double lim = log_threshold(x_trunc);
  KahanComplexSum sum;        // truncated transform, table order
  KahanComplexSum base_sum;   // running summatory of base values, for c_hat
  std::vector<Complex> prefix_base;
  prefix_base.reserve(table.size() + 1);
  prefix_base.push_back(Complex(0.0, 0.0));
  for (const auto& e : table.entries) {
    if (e.log_value > lim) break;
    Complex b = base_eval(f, e, table.system);
    sum.add(b * std::exp(-s_eff * e.log_value));
    base_sum.add(b);
    prefix_base.push_back(base_sum.value());
  }
  out.value = sum.value();

  if (!with_tail) return out;

  // Linear-growth tail model: if W(u) = sum_{n<=u} f_base(n) grows like
  // c_hat u over the top sampled decade, the dropped tail is approximately
  //   int_x^inf u^{-s_eff} dW(u) ~= c_hat x^{1-s_eff} / (s_eff - 1),
  // and |tail| <= sup|f| a_hat x^{1-sigma} sigma/(sigma-1) by Abel summation
  // against N(u) ~= a_hat u.
  TailModel model = measure_tail_model(table, prefix_base, x_trunc);
  double sigma = s.real();
  out.tail_estimate =
      model.c_hat * std::exp((1.0 - s_eff) * std::log(x_trunc)) / (s_eff - 1.0);
  out.tail_bound = f.sup_abs(table.system, table.x_max) * model.a_hat *
                   std::pow(x_trunc, 1.0 - sigma) * sigma / (sigma - 1.0);
  out.tail_valid = model.stable;
  return out;
}

MellinEvaluation zeta(const IntegerTable& table, Complex s, double x_trunc,
                      bool allow_no_tail) {
  return mellin(PrimePowerFunction::unity(), table, s, x_trunc, allow_no_tail);
}

std::vector<ResidueScanRow> zeta_residue_scan(const IntegerTable& table,
                                              const std::vector<double>& sigma_list,
                                              double a,
                                              const std::vector<double>& t_list) {
  for (double sigma : sigma_list) {
    if (!(sigma > 1.0)) {
      throw RangeError("zeta_residue_scan: every sigma must exceed 1");
    }
  }
  std::vector<ResidueScanRow> rows;
  rows.reserve(sigma_list.size() * t_list.size());
  for (double sigma : sigma_list) {
    for (double t : t_list) {
      Complex s(sigma, t);
      MellinEvaluation ev = zeta(table, s, table.x_max);
      ResidueScanRow row;
      row.sigma = sigma;
      row.t = t;
      row.value = completed(ev);
      row.residual = row.value - a / (s - 1.0);
      row.scaled = std::abs(row.residual) * (sigma - 1.0);
      row.tail_bound = ev.tail_bound;
      rows.push_back(row);
    }
  }
  return rows;
}

Complex F_of(const PrimePowerFunction& f, const IntegerTable& table, double x) {
  check_x_in_table(x, table, "F_of");
  double lx = std::log(x);
  double lim = log_threshold(x);
  KahanComplexSum sum;
  for (const auto& e : table.entries) {
    if (e.log_value > lim) break;
    if (e.exponents.empty()) continue;  // n = 1 carries weight log(1) = 0
    sum.add(evaluate(f, e, table.system) * (e.log_value * (lx - e.log_value)));
  }
  return sum.value();
}

PerronResult perron_check(const PrimePowerFunction& f, const IntegerTable& table,
                          const ContourSpec& spec) {
  check_x_in_table(spec.x, table, "perron_check");
  if (!(spec.x > 1.0)) throw RangeError("perron_check: x must exceed 1");
  if (!(spec.T > 0.0)) throw RangeError("perron_check: T must be positive");
  if (!(spec.step > 0.0) || spec.step > spec.T / 100.0 * (1.0 + 1e-12)) {
    throw RangeError("perron_check: need 0 < step <= T/100");
  }

  double lx = std::log(spec.x);
  double sigma_x = 1.0 + 1.0 / lx;

  // Grid shared by both trapezoid passes: the coarse rule uses every other
  // fine point, so one integrand evaluation pass serves both.
  std::size_t n_coarse = static_cast<std::size_t>(
      std::max<long long>(2, std::llround(2.0 * spec.T / spec.step)));
  std::size_t n_fine = 2 * n_coarse;
  double h_fine = 2.0 * spec.T / static_cast<double>(n_fine);

  // -Ghat'(sigma_x + it) = sum f(n) log(n) n^{-sigma_x} e^{-it log n}; fold
  // the x^{it} factor in as well so each entry contributes a_n e^{i t omega_n}
  // with omega_n = log x - log n, advanced across the grid by one complex
  // rotation per step.
  std::vector<Complex> acc(n_fine + 1, Complex(0.0, 0.0));
  double lim = log_threshold(table.x_max);
  for (const auto& e : table.entries) {
    if (e.log_value > lim) break;
    if (e.exponents.empty()) continue;  // log(1) = 0 kills the n = 1 term
    Complex a_n = evaluate(f, e, table.system) * e.log_value *
                  std::exp(-sigma_x * e.log_value);
    if (a_n == Complex(0.0, 0.0)) continue;
    double omega = lx - e.log_value;
    Complex z = std::polar(1.0, -spec.T * omega);
    Complex rot = std::polar(1.0, h_fine * omega);
    for (std::size_t j = 0; j <= n_fine; ++j) {
      acc[j] += a_n * z;
      z *= rot;
    }
  }

  double amp = std::pow(spec.x, sigma_x - 1.0);
  KahanComplexSum fine, coarse;
  for (std::size_t j = 0; j <= n_fine; ++j) {
    double t = -spec.T + static_cast<double>(j) * h_fine;
    Complex s(sigma_x, t);
    Complex g = amp * acc[j] / (s * s);
    double wf = (j == 0 || j == n_fine) ? 0.5 : 1.0;
    fine.add(wf * g);
    if (j % 2 == 0) {
      double wc = (j == 0 || j == n_fine) ? 0.5 : 1.0;
      coarse.add(wc * g);
    }
  }
  double inv_two_pi = 1.0 / (2.0 * std::numbers::pi);
  Complex i_fine = fine.value() * h_fine * inv_two_pi;
  Complex i_coarse = coarse.value() * (2.0 * h_fine) * inv_two_pi;

  PerronResult out;
  out.x = spec.x;
  out.contour = i_fine;
  out.direct = F_of(f, table, spec.x) / spec.x;
  out.halving_err = std::abs(i_fine - i_coarse);
  out.rel_err =
      std::abs(out.contour - out.direct) / std::max(std::abs(out.direct), 1.0);
  if (out.halving_err > 0.5) {
    std::ostringstream msg;
    msg << "perron_check: step-halving discrepancy " << out.halving_err
        << " exceeds 0.5; the step " << spec.step
        << " undersamples the integrand oscillation";
    throw NumericalError(msg.str());
  }
  return out;
}

std::vector<EquivalenceRow> equivalence_report(const PrimePowerFunction& f,
                                               const IntegerTable& table,
                                               Complex c, double alpha,
                                               const std::vector<double>& x_grid) {
  if (x_grid.empty()) throw RangeError("equivalence_report: empty x grid");
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    if (!(x_grid[i] > 1.0)) {
      throw RangeError("equivalence_report: grid points must exceed 1");
    }
    if (i > 0 && x_grid[i] <= x_grid[i - 1]) {
      throw RangeError("equivalence_report: grid must be increasing");
    }
  }
  check_x_in_table(x_grid.back(), table, "equivalence_report");

  Complex denom_sq = Complex(1.0, alpha) * Complex(1.0, alpha);
  std::vector<EquivalenceRow> rows;
  rows.reserve(x_grid.size());
  KahanComplexSum s1;  // running sum of f(n)
  KahanComplexSum s2;  // running sum of f(n) log n
  std::size_t next = 0;
  for (double x : x_grid) {
    double lim = log_threshold(x);
    for (; next < table.size(); ++next) {
      const auto& e = table.entries[next];
      if (e.log_value > lim) break;
      Complex v = evaluate(f, e, table.system);
      s1.add(v);
      s2.add(v * e.log_value);
    }
    double lx = std::log(x);
    // sum f(n) log(x/n) = log(x) S1 - S2 = int_1^x G(u)/u du exactly.
    Complex lhs_sum = lx * s1.value() - s2.value();
    Complex main = c * x * std::polar(1.0, alpha * lx) / denom_sq;
    EquivalenceRow row;
    row.x = x;
    row.lhs_resid = std::abs(lhs_sum - main) / x;
    double sigma_x = 1.0 + 1.0 / lx;
    MellinEvaluation ev = mellin(f, table, Complex(sigma_x, alpha), x);
    row.rhs_resid =
        std::abs(completed(ev) - c / (sigma_x - 1.0)) * (sigma_x - 1.0);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace beurling
