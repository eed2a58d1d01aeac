#include "beurling/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "beurling/errors.hpp"

namespace beurling {

PrimePowerFunction PrimePowerFunction::constant_fn(Complex c) {
  PrimePowerFunction f;
  f.kind_ = Kind::constant;
  f.c_ = c;
  return f;
}

PrimePowerFunction PrimePowerFunction::moebius_fn() {
  PrimePowerFunction f;
  f.kind_ = Kind::moebius;
  return f;
}

PrimePowerFunction PrimePowerFunction::squarefree_fn() {
  PrimePowerFunction f;
  f.kind_ = Kind::squarefree;
  return f;
}

PrimePowerFunction PrimePowerFunction::nu_alternating_fn() {
  PrimePowerFunction f;
  f.kind_ = Kind::nu_alternating;
  return f;
}

PrimePowerFunction PrimePowerFunction::liouville_fn() {
  PrimePowerFunction f;
  f.kind_ = Kind::liouville;
  return f;
}

PrimePowerFunction PrimePowerFunction::twist(double alpha) {
  PrimePowerFunction f = unity();
  f.theta_ = alpha;
  return f;
}

PrimePowerFunction PrimePowerFunction::completely_multiplicative_fn(
    std::vector<Complex> prime_values) {
  PrimePowerFunction f;
  f.kind_ = Kind::completely_multiplicative;
  f.prime_values_ = std::move(prime_values);
  return f;
}

PrimePowerFunction PrimePowerFunction::from_table(
    std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> values) {
  PrimePowerFunction f;
  f.kind_ = Kind::table;
  f.values_ = std::move(values);
  return f;
}

PrimePowerFunction PrimePowerFunction::twisted_by(double beta) const {
  PrimePowerFunction f = *this;
  f.theta_ += beta;
  return f;
}

Complex PrimePowerFunction::base_value(const GeneralizedPrimeSystem&,
                                       std::uint32_t k,
                                       std::uint32_t nu) const {
  switch (kind_) {
    case Kind::constant:
      return c_;
    case Kind::moebius:
      return nu == 1 ? Complex(-1.0, 0.0) : Complex(0.0, 0.0);
    case Kind::squarefree:
      return nu == 1 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    case Kind::nu_alternating:
      return nu % 2 == 1 ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
    case Kind::liouville:
      return nu % 2 == 1 ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
    case Kind::completely_multiplicative: {
      if (k >= prime_values_.size()) {
        throw DomainError("no prime value for index " + std::to_string(k));
      }
      return pow_int(prime_values_[k], nu);
    }
    case Kind::table: {
      auto it = values_.find({k, nu});
      if (it == values_.end()) {
        throw DomainError("missing table value at prime index " +
                          std::to_string(k) + ", exponent " +
                          std::to_string(nu));
      }
      return it->second;
    }
  }
  return {0.0, 0.0};
}

Complex PrimePowerFunction::value(const GeneralizedPrimeSystem& system,
                                  std::uint32_t k, std::uint32_t nu) const {
  Complex base = base_value(system, k, nu);
  if (theta_ == 0.0) return base;
  return base * std::polar(1.0, nu * theta_ * system.log_primes[k]);
}

bool PrimePowerFunction::is_real(const GeneralizedPrimeSystem& system,
                                 double x_max, double tol) const {
  double limit = log_threshold(x_max);
  for (std::uint32_t k = 0; k < system.primes.size(); ++k) {
    if (system.log_primes[k] > limit) break;
    for (std::uint32_t nu = 1; nu * system.log_primes[k] <= limit; ++nu) {
      if (std::abs(value(system, k, nu).imag()) > tol) return false;
    }
  }
  return true;
}

double PrimePowerFunction::sup_abs(const GeneralizedPrimeSystem& system,
                                   double x_max) const {
  double limit = log_threshold(x_max);
  double sup = 0.0;
  for (std::uint32_t k = 0; k < system.primes.size(); ++k) {
    if (system.log_primes[k] > limit) break;
    for (std::uint32_t nu = 1; nu * system.log_primes[k] <= limit; ++nu) {
      sup = std::max(sup, std::abs(base_value(system, k, nu)));
    }
  }
  return sup;
}

Complex evaluate(const PrimePowerFunction& f, const GeneralizedInteger& n,
                 const GeneralizedPrimeSystem& system) {
  Complex prod(1.0, 0.0);
  for (const auto& [k, e] : n.exponents) prod *= f.value(system, k, e);
  return prod;
}

Complex summatory(const PrimePowerFunction& f, const IntegerTable& table,
                  double x) {
  if (x > table.x_max * (1.0 + 1e-12)) {
    throw RangeError("summatory: x exceeds the table range");
  }
  std::uint64_t n = table.count_leq(x);
  KahanComplexSum s;
  for (std::uint64_t i = 0; i < n; ++i) {
    s.add(evaluate(f, table.entries[static_cast<std::size_t>(i)],
                   table.system));
  }
  return s.value();
}

std::uint32_t nu_max_for(const GeneralizedPrimeSystem& system, std::uint32_t k,
                         double x_max) {
  double limit = log_threshold(x_max);
  double lp = system.log_primes[k];
  if (lp > limit) return 0;
  return static_cast<std::uint32_t>(limit / lp);
}

namespace {

// Fallback pairing: convert values prime by prime with the Bell maps, storing
// results in a table-kind function. Only exponents with p^nu <= x_max are
// materialized, which is all any consumer may request.
PrimePowerFunction materialize_pair(const PrimePowerFunction& in,
                                    const GeneralizedPrimeSystem& system,
                                    double x_max, bool forward) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> out;
  for (std::uint32_t k = 0; k < system.primes.size(); ++k) {
    std::uint32_t m = nu_max_for(system, k, x_max);
    if (m == 0) continue;
    std::vector<Complex> vals(m);
    for (std::uint32_t nu = 1; nu <= m; ++nu) {
      vals[nu - 1] = in.base_value(system, k, nu);
    }
    std::vector<Complex> conv =
        forward ? bell_f_from_g(vals) : bell_g_from_f(vals);
    for (std::uint32_t nu = 1; nu <= m; ++nu) {
      out[{k, nu}] = conv[nu - 1];
    }
  }
  return PrimePowerFunction::from_table(std::move(out));
}

}  // namespace

MultiplicativePair pair_from_f(const PrimePowerFunction& f,
                               const GeneralizedPrimeSystem& system,
                               double x_max) {
  MultiplicativePair pair;
  pair.f = f;
  switch (f.kind()) {
    case PrimePowerFunction::Kind::constant:
      if (f.base_value(system, 0, 1) == Complex(1.0, 0.0)) {
        // f == 1 at every prime power is completely multiplicative.
        pair.g = f;
        return pair;
      }
      break;
    case PrimePowerFunction::Kind::moebius:
      pair.g = PrimePowerFunction::constant_fn(Complex(-1.0, 0.0))
                   .twisted_by(f.theta());
      return pair;
    case PrimePowerFunction::Kind::squarefree:
      pair.g = PrimePowerFunction::nu_alternating_fn().twisted_by(f.theta());
      return pair;
    case PrimePowerFunction::Kind::nu_alternating:
      break;
    case PrimePowerFunction::Kind::liouville:
    case PrimePowerFunction::Kind::completely_multiplicative:
      // Completely multiplicative functions are fixed points of the pairing.
      pair.g = f;
      return pair;
    case PrimePowerFunction::Kind::table:
      break;
  }
  pair.g = materialize_pair(f, system, x_max, /*forward=*/false)
               .twisted_by(f.theta());
  return pair;
}

MultiplicativePair pair_from_g(const PrimePowerFunction& g,
                               const GeneralizedPrimeSystem& system,
                               double x_max) {
  MultiplicativePair pair;
  pair.g = g;
  switch (g.kind()) {
    case PrimePowerFunction::Kind::constant: {
      // g == 1 pairs with f == 1 (dN itself); g == -1 pairs with Moebius.
      Complex c = g.base_value(system, 0, 1);
      if (c == Complex(1.0, 0.0)) {
        pair.f = PrimePowerFunction::unity().twisted_by(g.theta());
        return pair;
      }
      if (c == Complex(-1.0, 0.0)) {
        pair.f = PrimePowerFunction::moebius_fn().twisted_by(g.theta());
        return pair;
      }
      break;
    }
    case PrimePowerFunction::Kind::nu_alternating:
      pair.f = PrimePowerFunction::squarefree_fn().twisted_by(g.theta());
      return pair;
    case PrimePowerFunction::Kind::moebius:
    case PrimePowerFunction::Kind::squarefree:
      break;
    case PrimePowerFunction::Kind::liouville:
    case PrimePowerFunction::Kind::completely_multiplicative:
      pair.f = g;
      return pair;
    case PrimePowerFunction::Kind::table:
      break;
  }
  pair.f = materialize_pair(g, system, x_max, /*forward=*/true)
               .twisted_by(g.theta());
  return pair;
}

MeasureValues exp_star(const PrimePowerFunction& g, const IntegerTable& table) {
  const std::size_t n = table.size();
  MeasureValues out;
  out.table = &table;
  out.weights.assign(n, Complex(0.0, 0.0));
  if (n == 0) return out;

  // Atom masses g(p^nu)/nu at prime-power entries, by entry index.
  std::vector<Complex> atom(n, Complex(0.0, 0.0));
  std::uint64_t max_omega = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t k = 0, nu = 0;
    if (table.prime_power(i, k, nu)) {
      atom[i] = g.value(table.system, k, nu) / static_cast<double>(nu);
    }
    std::uint64_t omega = 0;
    for (const auto& [pk, e] : table.entries[i].exponents) omega += e;
    max_omega = std::max(max_omega, omega);
  }

  // Adjacency: for entry i and each prime power p_k^nu dividing it, the
  // index of i / p_k^nu. Convolving against the atomic measure is then one
  // gather per (entry, dividing prime power) pair.
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (pred, atom)
  {
    ExponentVec reduced;
    for (std::size_t i = 0; i < n; ++i) {
      offsets[i] = edges.size();
      const ExponentVec& e = table.entries[i].exponents;
      for (std::size_t fi = 0; fi < e.size(); ++fi) {
        for (std::uint32_t nu = 1; nu <= e[fi].second; ++nu) {
          reduced = e;
          if (nu == e[fi].second) {
            reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(fi));
          } else {
            reduced[fi].second = e[fi].second - nu;
          }
          auto pred = table.index_of(reduced);
          ExponentVec pp{{e[fi].first, nu}};
          auto atom_idx = table.index_of(pp);
          if (pred && atom_idx) {
            edges.emplace_back(*pred, *atom_idx);
          }
        }
      }
    }
    offsets[n] = edges.size();
  }

  // Series: cur holds (g dPi)^{*m}/m!; it vanishes identically once m
  // exceeds the largest total multiplicity in the table.
  std::vector<Complex> cur(atom);
  out.weights[0] = Complex(1.0, 0.0);  // the identity component at n = 1
  for (std::size_t i = 0; i < n; ++i) out.weights[i] += cur[i];
  std::vector<Complex> next(n);
  for (std::uint64_t m = 2; m <= max_omega; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc(0.0, 0.0);
      for (std::size_t t = offsets[i]; t < offsets[i + 1]; ++t) {
        acc += cur[edges[t].first] * atom[edges[t].second];
      }
      next[i] = acc / static_cast<double>(m);
    }
    cur.swap(next);
    for (std::size_t i = 0; i < n; ++i) out.weights[i] += cur[i];
  }
  return out;
}

MeasureValues dirichlet_convolve(const MeasureValues& a,
                                 const MeasureValues& b) {
  if (a.table != b.table || a.table == nullptr) {
    throw DomainError("dirichlet_convolve requires measures on one table");
  }
  const IntegerTable& table = *a.table;
  const std::size_t n = table.size();
  MeasureValues out;
  out.table = &table;
  out.weights.assign(n, Complex(0.0, 0.0));
  double limit = log_threshold(table.x_max);

  ExponentVec merged;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.weights[i] == Complex(0.0, 0.0)) continue;
    double log_a = table.entries[i].log_value;
    for (std::size_t j = 0; j < n; ++j) {
      if (table.entries[j].log_value > limit - log_a + 1e-12) break;
      if (b.weights[j] == Complex(0.0, 0.0)) continue;
      // Merge the two ascending exponent vectors.
      const ExponentVec& u = table.entries[i].exponents;
      const ExponentVec& v = table.entries[j].exponents;
      merged.clear();
      std::size_t p = 0, q = 0;
      while (p < u.size() || q < v.size()) {
        if (q == v.size() || (p < u.size() && u[p].first < v[q].first)) {
          merged.push_back(u[p++]);
        } else if (p == u.size() || v[q].first < u[p].first) {
          merged.push_back(v[q++]);
        } else {
          merged.emplace_back(u[p].first, u[p].second + v[q].second);
          ++p;
          ++q;
        }
      }
      auto idx = table.index_of(merged);
      if (idx) out.weights[*idx] += a.weights[i] * b.weights[j];
    }
  }
  return out;
}

MeasureValues mobius(const IntegerTable& table) {
  MeasureValues m =
      exp_star(PrimePowerFunction::constant_fn(Complex(-1.0, 0.0)), table);
  if (table.system.exact_mode) {
    for (Complex& w : m.weights) {
      double re = std::round(w.real());
      if (std::abs(w.real() - re) <= 1e-6 && std::abs(w.imag()) <= 1e-6) {
        w = Complex(re, 0.0);
      }
    }
  }
  return m;
}

Complex measure_sum(const MeasureValues& m, double x) {
  if (m.table == nullptr) throw DomainError("measure_sum: missing table");
  std::uint64_t n = m.table->count_leq(x);
  KahanComplexSum s;
  for (std::uint64_t i = 0; i < n; ++i) {
    s.add(m.weights[static_cast<std::size_t>(i)]);
  }
  return s.value();
}

RankinBound rankin_bound(const PrimePowerFunction& g, const MeasureValues& G,
                         double x) {
  if (G.table == nullptr) throw DomainError("rankin_bound: missing table");
  if (x > G.table->x_max * (1.0 + 1e-12)) {
    throw RangeError("rankin_bound: x exceeds the table range");
  }
  RankinBound out;
  out.lhs = std::abs(measure_sum(G, x)) / x;
  const GeneralizedPrimeSystem& sys = G.table->system;
  double limit = log_threshold(x);
  KahanSum expsum;
  for (std::uint32_t k = 0; k < sys.primes.size(); ++k) {
    double lp = sys.log_primes[k];
    if (lp > limit) break;
    double pw = sys.primes[k];
    for (std::uint32_t nu = 1; nu * lp <= limit; ++nu) {
      expsum.add(std::abs(g.value(sys, k, nu)) / (nu * pw));
      pw *= sys.primes[k];
    }
  }
  out.rhs = std::exp(expsum.value());
  out.ratio = out.lhs / out.rhs;
  return out;
}

RankinBound rankin_bound(const PrimePowerFunction& g, const IntegerTable& table,
                         double x) {
  return rankin_bound(g, exp_star(g, table), x);
}

}  // namespace beurling
