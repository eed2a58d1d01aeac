#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "beurling/bell.hpp"
#include "beurling/system.hpp"

namespace beurling {

// A function on prime powers p_k^nu, complex-valued, given by a closed-form
// kind plus an optional twist exponent theta. The stored kind supplies the
// base value; the full value is base * p^{i nu theta}. Keeping the twist as
// a separate additive phase lets downstream code fold it into Mellin
// arguments (s -> s - i theta) and criterion phases (theta - alpha) exactly.
class PrimePowerFunction {
public:
  enum class Kind {
    constant,                   // value c at every prime power
    moebius,                    // -1 at nu = 1, 0 at nu >= 2
    squarefree,                 // 1 at nu = 1, 0 at nu >= 2
    nu_alternating,             // (-1)^{nu+1}
    liouville,                  // (-1)^nu, completely multiplicative
    completely_multiplicative,  // v_k^nu from per-prime values v_k
    table,                      // explicit (k, nu) -> value map
  };

  static PrimePowerFunction unity() { return constant_fn(Complex(1.0, 0.0)); }
  static PrimePowerFunction constant_fn(Complex c);
  static PrimePowerFunction moebius_fn();     // the f side; its g is -1
  static PrimePowerFunction squarefree_fn();  // the f side; its g alternates
  static PrimePowerFunction nu_alternating_fn();
  static PrimePowerFunction liouville_fn();
  static PrimePowerFunction twist(double alpha);  // n^{i alpha}
  static PrimePowerFunction completely_multiplicative_fn(
      std::vector<Complex> prime_values);
  static PrimePowerFunction from_table(
      std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> values);

  Kind kind() const { return kind_; }
  double theta() const { return theta_; }

  // Returns a copy whose values are multiplied by p^{i nu beta}.
  PrimePowerFunction twisted_by(double beta) const;

  // Value before the twist phase is applied.
  Complex base_value(const GeneralizedPrimeSystem& system, std::uint32_t k,
                     std::uint32_t nu) const;

  // Full value base * p^{i nu theta}.
  Complex value(const GeneralizedPrimeSystem& system, std::uint32_t k,
                std::uint32_t nu) const;

  // True when every reachable value is real within tol (the twist phase and
  // complex entries make a function non-real).
  bool is_real(const GeneralizedPrimeSystem& system, double x_max,
               double tol = 1e-12) const;

  // Largest |value| over prime powers <= x_max; used for tail envelopes.
  double sup_abs(const GeneralizedPrimeSystem& system, double x_max) const;

private:
  Kind kind_ = Kind::constant;
  Complex c_{1.0, 0.0};
  double theta_ = 0.0;
  std::vector<Complex> prime_values_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> values_;
};

// Multiplicative extension: product of value(k, e_k) over the factorization.
Complex evaluate(const PrimePowerFunction& f, const GeneralizedInteger& n,
                 const GeneralizedPrimeSystem& system);

// G(x) = sum over table entries n_k <= x of f(n_k), compensated, in table
// order (ascending value).
Complex summatory(const PrimePowerFunction& f, const IntegerTable& table,
                  double x);

// An f/g pair related by the Bell conversions, i.e. the multiplicative
// function f of the measure exp*(g dPi). Preset pairs are closed-form;
// anything else is materialized per prime with nu up to log(x_max)/log(p).
struct MultiplicativePair {
  PrimePowerFunction f;
  PrimePowerFunction g;
};

MultiplicativePair pair_from_f(const PrimePowerFunction& f,
                               const GeneralizedPrimeSystem& system,
                               double x_max);
MultiplicativePair pair_from_g(const PrimePowerFunction& g,
                               const GeneralizedPrimeSystem& system,
                               double x_max);

// Weights of a measure, one complex number per table entry in table order.
struct MeasureValues {
  const IntegerTable* table = nullptr;
  std::vector<Complex> weights;
};

// exp with respect to multiplicative convolution of the atomic measure
// g dPi (mass g(p^nu)/nu at p^nu): sum over m of (g dPi)^{*m} / m!,
// restricted to the table's support at every step. The series terminates
// exactly at the largest total multiplicity Omega present in the table.
MeasureValues exp_star(const PrimePowerFunction& g, const IntegerTable& table);

// weight(n) = sum over exponent-vector factorizations d*d' = n of a(d) b(d').
MeasureValues dirichlet_convolve(const MeasureValues& a,
                                 const MeasureValues& b);

// The convolution inverse of dN: exp_star(g = -1). In exact_mode the weights
// are snapped to the nearest integer when within 1e-6, so that Moebius
// inversion identities hold exactly on classical tables.
MeasureValues mobius(const IntegerTable& table);

// Partial sums of a measure: sum of weights over entries <= x.
Complex measure_sum(const MeasureValues& m, double x);

// Rankin-style pointwise bound at beta = 1:
//   lhs = |G(x)|/x with dG = exp*(g dPi),
//   rhs = exp(sum over p^nu <= x of |g(p^nu)|/(nu p^nu)).
struct RankinBound {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

RankinBound rankin_bound(const PrimePowerFunction& g, const MeasureValues& G,
                         double x);
RankinBound rankin_bound(const PrimePowerFunction& g, const IntegerTable& table,
                         double x);

// Largest admissible exponent for p_k below x_max.
std::uint32_t nu_max_for(const GeneralizedPrimeSystem& system, std::uint32_t k,
                         double x_max);

}  // namespace beurling
