#include "beurling/counting.hpp"

#include <cmath>
#include <limits>

#include "beurling/errors.hpp"

namespace beurling {

PrimeCounts prime_counts(const GeneralizedPrimeSystem& system, double x) {
  if (x < 1.0) throw RangeError("prime_counts requires x >= 1");
  PrimeCounts out;
  out.x = x;
  double limit = log_threshold(x);
  KahanSum Pi, psi, mertens;
  for (std::size_t k = 0; k < system.primes.size(); ++k) {
    double lp = system.log_primes[k];
    if (lp > limit) break;  // primes non-decreasing: no later one fits either
    ++out.pi;
    double pw = system.primes[k];
    for (std::uint32_t nu = 1; nu * lp <= limit; ++nu) {
      Pi.add(1.0 / nu);
      psi.add(lp);
      mertens.add(1.0 / (nu * pw));
      pw *= system.primes[k];
    }
  }
  out.Pi = Pi.value();
  out.psi = psi.value();
  out.mertens_sum = mertens.value();
  return out;
}

IntegerCounts integer_counts(const IntegerTable& table, double x) {
  if (x < 1.0) throw RangeError("integer_counts requires x >= 1");
  if (x > table.x_max * (1.0 + 1e-12)) {
    throw RangeError("integer_counts: x exceeds the table range");
  }
  IntegerCounts out;
  out.N = table.count_leq(x);
  KahanSum s;
  for (std::uint64_t i = 0; i < out.N; ++i) {
    s.add(1.0 / table.entries[static_cast<std::size_t>(i)].value);
  }
  out.log_density = s.value();
  return out;
}

DiagnosticsReport diagnostics(const GeneralizedPrimeSystem& system,
                              const IntegerTable& table,
                              const std::vector<double>& x_grid) {
  if (x_grid.size() < 8) throw RangeError("diagnostics needs >= 8 grid points");
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    if (x_grid[i] < 1.0 || (i > 0 && x_grid[i] <= x_grid[i - 1])) {
      throw RangeError("diagnostics grid must be increasing and >= 1");
    }
  }
  if (x_grid.back() > table.x_max * (1.0 + 1e-12)) {
    throw RangeError("diagnostics grid exceeds the table range");
  }

  DiagnosticsReport rep;
  double x_top = x_grid.back();
  double decade_lo = x_top / 10.0;
  KahanSum density_mean;
  int density_points = 0;

  for (double x : x_grid) {
    DiagnosticsReport::Row row;
    row.x = x;
    PrimeCounts pc = prime_counts(system, x);
    IntegerCounts ic = integer_counts(table, x);
    row.N = ic.N;
    row.N_over_x = static_cast<double>(ic.N) / x;
    row.psi = pc.psi;
    row.psi_over_x = pc.psi / x;
    double lx = std::log(x);
    row.log_density_ratio = lx > 0.0 ? ic.log_density / lx : 0.0;
    if (x > std::exp(1.0)) {
      row.mertens_dev = pc.mertens_sum - std::log(lx);
      rep.mertens_deviation.emplace_back(x, row.mertens_dev);
    } else {
      row.mertens_dev = std::numeric_limits<double>::quiet_NaN();
    }
    rep.log_density_ratio.emplace_back(x, row.log_density_ratio);
    rep.chebyshev_sup = std::max(rep.chebyshev_sup, row.psi_over_x);
    if (x >= decade_lo) {
      density_mean.add(row.N_over_x);
      ++density_points;
    }
    rep.rows.push_back(row);
  }

  rep.density_estimate =
      density_points > 0 ? density_mean.value() / density_points : 0.0;

  rep.chebyshev_bounded = rep.chebyshev_sup <= 5.0;
  rep.positive_density = rep.density_estimate > 0.0;
  rep.log_density_bounded = true;
  for (const auto& row : rep.rows) {
    if (row.x < decade_lo) continue;
    if (rep.density_estimate > 0.0 &&
        std::abs(row.N_over_x - rep.density_estimate) >
            0.1 * rep.density_estimate) {
      rep.positive_density = false;
    }
    if (row.log_density_ratio < 0.2 || row.log_density_ratio > 5.0) {
      rep.log_density_bounded = false;
    }
  }
  return rep;
}

namespace {

// Integral of (N - a x) x^{-sigma-1} over [u, w] while N is constant;
// antiderivative -N x^{-sigma}/sigma + a x^{1-sigma}/(sigma-1).
double signed_piece(double N, double a, double sigma, double u, double w) {
  double t1 = N / sigma * (std::pow(u, -sigma) - std::pow(w, -sigma));
  double t2 = a / (sigma - 1.0) *
              (std::pow(u, 1.0 - sigma) - std::pow(w, 1.0 - sigma));
  return t1 - t2;
}

double abs_piece(double N, double a, double sigma, double u, double w) {
  if (w <= u) return 0.0;
  double cross = N / a;  // N - a x changes sign here
  if (cross <= u) return -signed_piece(N, a, sigma, u, w);
  if (cross >= w) return signed_piece(N, a, sigma, u, w);
  return signed_piece(N, a, sigma, u, cross) -
         signed_piece(N, a, sigma, cross, w);
}

}  // namespace

L1Deviation l1_deviation(const IntegerTable& table, double a, double sigma) {
  if (sigma <= 1.0) throw RangeError("l1_deviation requires sigma > 1");
  if (a <= 0.0) throw RangeError("l1_deviation requires a > 0");

  L1Deviation out;
  KahanSum total;
  // Walk the jump points; N is constant between consecutive distinct values.
  std::size_t i = 0;
  double prev_x = 1.0;
  std::uint64_t count = 0;
  while (i < table.entries.size()) {
    double v = table.entries[i].value;
    double lv = table.entries[i].log_value;
    // Absorb duplicates (equal log_value) into a single jump.
    std::size_t j = i;
    while (j < table.entries.size() && table.entries[j].log_value == lv) ++j;
    if (v > prev_x) {
      total.add(abs_piece(static_cast<double>(count), a, sigma, prev_x, v));
      prev_x = v;
    }
    count += j - i;
    i = j;
  }
  if (table.x_max > prev_x) {
    total.add(
        abs_piece(static_cast<double>(count), a, sigma, prev_x, table.x_max));
  }
  out.value = total.value();
  out.tail_bound =
      2.0 * a * std::pow(table.x_max, 1.0 - sigma) / (sigma - 1.0);
  out.wrong_density = out.value * (sigma - 1.0) > 0.5;
  return out;
}

}  // namespace beurling
