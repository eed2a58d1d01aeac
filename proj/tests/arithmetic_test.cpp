#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "beurling/arithmetic.hpp"
#include "beurling/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "tables.hpp"

using namespace beurling;
using testutil::classical_system;
using testutil::explicit_system;

namespace {

const double kPi = 3.14159265358979323846;

Complex unit_disk(std::mt19937& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double r = std::sqrt(unit(rng));
  double phi = 2.0 * kPi * unit(rng);
  return Complex(r * std::cos(phi), r * std::sin(phi));
}

}  // namespace

TEST_CASE("preset prime-power values") {
  auto sys = classical_system(100.0);
  auto mu = PrimePowerFunction::moebius_fn();
  auto sf = PrimePowerFunction::squarefree_fn();
  auto alt = PrimePowerFunction::nu_alternating_fn();
  auto lv = PrimePowerFunction::liouville_fn();
  for (std::uint32_t k = 0; k < 3; ++k) {
    CHECK(mu.value(sys, k, 1) == Complex(-1.0, 0.0));
    CHECK(sf.value(sys, k, 1) == Complex(1.0, 0.0));
    for (std::uint32_t nu = 2; nu <= 5; ++nu) {
      CHECK(mu.value(sys, k, nu) == Complex(0.0, 0.0));
      CHECK(sf.value(sys, k, nu) == Complex(0.0, 0.0));
    }
    for (std::uint32_t nu = 1; nu <= 5; ++nu) {
      double sign = (nu % 2 == 1) ? 1.0 : -1.0;
      CHECK(alt.value(sys, k, nu) == Complex(sign, 0.0));
      CHECK(lv.value(sys, k, nu) == Complex(-sign, 0.0));
    }
  }

  // twist(alpha) evaluates to p^{i nu alpha}.
  auto tw = PrimePowerFunction::twist(0.7);
  CHECK(tw.theta() == 0.7);
  Complex want = std::polar(1.0, 0.7 * 2.0 * std::log(3.0));
  CHECK(std::abs(tw.value(sys, 1, 2) - want) <= 1e-14);
  CHECK(tw.base_value(sys, 1, 2) == Complex(1.0, 0.0));

  auto cm = PrimePowerFunction::completely_multiplicative_fn(
      {Complex(0.5, 0.0), Complex(0.0, 1.0)});
  CHECK(cm.value(sys, 0, 3) == Complex(0.125, 0.0));
  CHECK(std::abs(cm.value(sys, 1, 2) - Complex(-1.0, 0.0)) <= 1e-15);
  CHECK_THROWS_AS(cm.value(sys, 2, 1), DomainError);

  std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> vals;
  vals[{0, 1}] = Complex(2.0, 1.0);
  auto tab = PrimePowerFunction::from_table(vals);
  CHECK(tab.value(sys, 0, 1) == Complex(2.0, 1.0));
  CHECK_THROWS_AS(tab.value(sys, 0, 2), DomainError);
}

TEST_CASE("twisted_by shifts the phase of any kind") {
  auto sys = classical_system(100.0);
  auto mu = PrimePowerFunction::moebius_fn().twisted_by(0.5);
  CHECK(mu.theta() == 0.5);
  Complex expected = -std::polar(1.0, 0.5 * std::log(5.0));
  CHECK(std::abs(mu.value(sys, 2, 1) - expected) <= 1e-14);
  CHECK(mu.base_value(sys, 2, 1) == Complex(-1.0, 0.0));
  // Twisting twice accumulates.
  CHECK(mu.twisted_by(-0.5).theta() == 0.0);
}

TEST_CASE("evaluate extends multiplicatively and matches a sieve") {
  const auto& table = testutil::classical_1e4();
  const auto& sys = table.system;
  oracles::Sieve sieve(10000);
  auto mu = PrimePowerFunction::moebius_fn();
  auto lv = PrimePowerFunction::liouville_fn();
  auto sf = PrimePowerFunction::squarefree_fn();
  CHECK(evaluate(mu, table.entries[0], sys) == Complex(1.0, 0.0));
  for (std::uint32_t n = 2; n <= 10000; ++n) {
    const auto& entry = table.entries[n - 1];
    CHECK(evaluate(mu, entry, sys).real() == sieve.mobius(n));
    CHECK(evaluate(lv, entry, sys).real() == sieve.liouville(n));
    CHECK(evaluate(sf, entry, sys).real() == (sieve.squarefree(n) ? 1.0 : 0.0));
  }
}

TEST_CASE("summatory functions hit brute-force values") {
  const auto& small = testutil::classical_1e4();
  CHECK(summatory(PrimePowerFunction::unity(), small, 1000.0) ==
        Complex(1000.0, 0.0));
  oracles::Sieve sieve(10000);
  CHECK(summatory(PrimePowerFunction::moebius_fn(), small, 1e4).real() == -23.0);
  CHECK(-23 == sieve.mertens(10000));
  CHECK(summatory(PrimePowerFunction::liouville_fn(), small, 1e4).real() ==
        static_cast<double>(sieve.liouville_sum(10000)));

  const auto& big = testutil::classical_1e6();
  double q = summatory(PrimePowerFunction::squarefree_fn(), big, 1e6).real();
  CHECK(q == 607926.0);
  CHECK(std::abs(q - 6.0 / (kPi * kPi) * 1e6) <= 0.005 * 1e6);
}

TEST_CASE("moebius weights equal the sieve exactly in exact mode") {
  const auto& table = testutil::classical_1e4();
  auto dM = mobius(table);
  oracles::Sieve sieve(10000);
  REQUIRE(dM.weights.size() == table.size());
  for (std::uint32_t n = 1; n <= 10000; ++n) {
    CHECK(dM.weights[n - 1] == Complex(sieve.mobius(n), 0.0));
  }
  CHECK(measure_sum(dM, 1e4) == Complex(-23.0, 0.0));
}

TEST_CASE("mertens stays small at a million") {
  const auto& table = testutil::classical_1e6();
  auto dM = mobius(table);
  double M = measure_sum(dM, 1e6).real();
  CHECK(M == 212.0);
  CHECK(std::abs(M) / 1e6 <= 1e-3);
}

TEST_CASE("the power-of-two semigroup has trivial Mertens function") {
  auto table = enumerate(explicit_system({2.0}), 1e6);
  auto dM = mobius(table);
  // Only 1 and 2 are squarefree here, so M(x) = 1 - 1 = 0 for x >= 2.
  for (double x : {2.0, 10.0, 1000.0, 1e6}) {
    CHECK(std::abs(measure_sum(dM, x)) <= 1e-12);
  }
  CHECK(measure_sum(dM, 1.5) == Complex(1.0, 0.0));
  // The weight at 8 = 2^3 is a cancelled exp* stack, not a closed form.
  auto idx = table.index_of(ExponentVec{{0, 3}});
  REQUIRE(idx.has_value());
  CHECK(std::abs(dM.weights[*idx]) <= 1e-12);
}

TEST_CASE("exp_star of unity recovers the counting measure") {
  auto table = enumerate(explicit_system({2.0, 3.0}), 10.0);
  REQUIRE(table.size() == 7);  // 1, 2, 3, 4, 6, 8, 9
  auto dN = exp_star(PrimePowerFunction::unity(), table);
  CHECK(dN.weights[0] == Complex(1.0, 0.0));
  for (const auto& w : dN.weights) {
    CHECK(std::abs(w - Complex(1.0, 0.0)) <= 1e-9);
  }

  // g == 0 is the identity of exp*: all mass at n = 1.
  auto unit = exp_star(PrimePowerFunction::constant_fn({0.0, 0.0}), table);
  CHECK(unit.weights[0] == Complex(1.0, 0.0));
  for (std::size_t i = 1; i < unit.weights.size(); ++i) {
    CHECK(unit.weights[i] == Complex(0.0, 0.0));
  }
}

TEST_CASE("moebius weights on a two-prime system") {
  auto table = enumerate(explicit_system({2.0, 3.0}), 10.0);
  auto dM = mobius(table);
  // Entries 1, 2, 3, 4, 6, 8, 9 carry 1, -1, -1, 0, 1, 0, 0.
  const double expected[] = {1.0, -1.0, -1.0, 0.0, 1.0, 0.0, 0.0};
  REQUIRE(dM.weights.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(std::abs(dM.weights[i] - Complex(expected[i], 0.0)) <= 1e-9);
  }
}

TEST_CASE("Dirichlet convolution identities") {
  const auto& table = testutil::classical_1e4();
  // The counting measure dN, with exact unit weights.
  MeasureValues ones;
  ones.table = &table;
  ones.weights.assign(table.size(), Complex(1.0, 0.0));
  auto dM = mobius(table);

  // mu * 1 is the unit measure, exactly, thanks to integer snapping.
  auto unit = dirichlet_convolve(dM, ones);
  CHECK(unit.weights[0] == Complex(1.0, 0.0));
  for (std::size_t i = 1; i < unit.weights.size(); ++i) {
    CHECK(unit.weights[i] == Complex(0.0, 0.0));
  }

  // 1 * 1 counts divisors; d(12) = 6.
  auto d = dirichlet_convolve(ones, ones);
  auto twelve = table.index_of(ExponentVec{{0, 2}, {1, 1}});
  REQUIRE(twelve.has_value());
  CHECK(std::abs(d.weights[*twelve] - Complex(6.0, 0.0)) <= 1e-9);

  // mu * (1 * 1) collapses back to the counting measure.
  auto recovered = dirichlet_convolve(dM, d);
  for (std::size_t i = 0; i < recovered.weights.size(); ++i) {
    CHECK(std::abs(recovered.weights[i] - Complex(1.0, 0.0)) <= 1e-9);
  }
}

TEST_CASE("pairing closed forms") {
  auto sys = classical_system(1000.0);
  auto check_g_constant = [&](const MultiplicativePair& pair, Complex want) {
    for (std::uint32_t nu = 1; nu <= 6; ++nu) {
      CHECK(std::abs(pair.g.base_value(sys, 0, nu) - want) <= 1e-12);
    }
  };

  auto mu_pair = pair_from_f(PrimePowerFunction::moebius_fn(), sys, 1000.0);
  check_g_constant(mu_pair, Complex(-1.0, 0.0));

  auto sf_pair = pair_from_f(PrimePowerFunction::squarefree_fn(), sys, 1000.0);
  for (std::uint32_t nu = 1; nu <= 6; ++nu) {
    double sign = (nu % 2 == 1) ? 1.0 : -1.0;
    CHECK(sf_pair.g.base_value(sys, 1, nu) == Complex(sign, 0.0));
  }

  auto unity_pair = pair_from_f(PrimePowerFunction::unity(), sys, 1000.0);
  check_g_constant(unity_pair, Complex(1.0, 0.0));

  // Round trips through the g side.
  auto back = pair_from_g(PrimePowerFunction::constant_fn({-1.0, 0.0}), sys,
                          1000.0);
  CHECK(back.f.kind() == PrimePowerFunction::Kind::moebius);
  auto sf_back = pair_from_g(PrimePowerFunction::nu_alternating_fn(), sys,
                             1000.0);
  CHECK(sf_back.f.kind() == PrimePowerFunction::Kind::squarefree);

  // Completely multiplicative kinds are fixed points.
  auto lv_pair = pair_from_f(PrimePowerFunction::liouville_fn(), sys, 1000.0);
  CHECK(lv_pair.g.kind() == PrimePowerFunction::Kind::liouville);

  // The twist phase rides along.
  auto twisted = pair_from_f(PrimePowerFunction::moebius_fn().twisted_by(0.5),
                             sys, 1000.0);
  CHECK(twisted.g.theta() == 0.5);
  Complex want = -std::polar(1.0, 0.5 * 2.0 * std::log(2.0));
  CHECK(std::abs(twisted.g.value(sys, 0, 2) - want) <= 1e-14);
}

TEST_CASE("materialized pairs match the series-log oracle") {
  auto sys = explicit_system({2.0, 3.0});
  std::mt19937 rng(424242);
  std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> vals;
  for (std::uint32_t k = 0; k < 2; ++k) {
    for (std::uint32_t nu = 1; nu <= nu_max_for(sys, k, 64.0); ++nu) {
      vals[{k, nu}] = unit_disk(rng);
    }
  }
  auto f = PrimePowerFunction::from_table(vals);
  auto pair = pair_from_f(f, sys, 64.0);
  for (std::uint32_t k = 0; k < 2; ++k) {
    std::uint32_t m = nu_max_for(sys, k, 64.0);
    std::vector<Complex> fv(m);
    for (std::uint32_t nu = 1; nu <= m; ++nu) fv[nu - 1] = vals[{k, nu}];
    auto gv = oracles::series_g_from_f(fv);
    for (std::uint32_t nu = 1; nu <= m; ++nu) {
      CHECK(std::abs(pair.g.base_value(sys, k, nu) - gv[nu - 1]) <= 1e-10);
    }
  }
}

TEST_CASE("exp_star agrees with the Bell route") {
  auto table = enumerate(explicit_system({2.0, 3.0, 5.0}), 200.0);
  std::mt19937 rng(90210);
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> vals;
    for (std::uint32_t k = 0; k < 3; ++k) {
      for (std::uint32_t nu = 1; nu <= nu_max_for(table.system, k, 200.0);
           ++nu) {
        vals[{k, nu}] = unit_disk(rng);
      }
    }
    auto g = PrimePowerFunction::from_table(vals);
    auto weights = exp_star(g, table);
    auto pair = pair_from_g(g, table.system, 200.0);
    for (std::size_t i = 0; i < table.size(); ++i) {
      Complex direct = evaluate(pair.f, table.entries[i], table.system);
      worst = std::max(worst, std::abs(weights.weights[i] - direct));
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("a Wintner-style convolution picks up the expected density") {
  auto table = enumerate(classical_system(1e5), 1e5);
  MeasureValues dA;
  dA.table = &table;
  dA.weights.assign(table.size(), Complex(0.0, 0.0));
  dA.weights[0] = Complex(1.0, 0.0);    // n = 1
  dA.weights[1] = Complex(-0.5, 0.0);   // n = 2
  dA.weights[3] = Complex(0.25, 0.0);   // n = 4
  auto ones = exp_star(PrimePowerFunction::unity(), table);
  auto D = dirichlet_convolve(dA, ones);
  // Ahat(1) = 1 - 1/4 + 1/16.
  double density = measure_sum(D, 1e5).real() / 1e5;
  CHECK(std::abs(density - 0.8125) <= 0.05);
}

TEST_CASE("rankin bound") {
  const auto& table = testutil::classical_1e6();

  auto unity = PrimePowerFunction::unity();
  auto dN = exp_star(unity, table);
  for (double x : {1e2, 1e3, 1e4, 1e5, 1e6}) {
    auto rb = rankin_bound(unity, dN, x);
    CHECK(rb.lhs == doctest::Approx(1.0).epsilon(0.01));
    CHECK(rb.rhs > 1.0);
    CHECK(rb.ratio <= 10.0);
    CHECK(rb.ratio == rb.lhs / rb.rhs);
  }

  auto zero = PrimePowerFunction::constant_fn({0.0, 0.0});
  auto rb0 = rankin_bound(zero, exp_star(zero, table), 1000.0);
  CHECK(rb0.lhs == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(rb0.rhs == 1.0);

  auto minus = PrimePowerFunction::constant_fn({-1.0, 0.0});
  auto rbm = rankin_bound(minus, mobius(table), 1e6);
  CHECK(rbm.lhs <= rbm.rhs);
  CHECK(rbm.lhs == doctest::Approx(212.0 / 1e6).epsilon(1e-9));
}

TEST_CASE("nu_max_for and sup_abs") {
  auto sys = classical_system(100.0);
  CHECK(nu_max_for(sys, 0, 1e6) == 19);  // 2^19 <= 1e6 < 2^20
  CHECK(nu_max_for(sys, 1, 1e6) == 12);  // 3^12 <= 1e6 < 3^13
  CHECK(nu_max_for(sys, 0, 10.0) == 3);

  CHECK(PrimePowerFunction::moebius_fn().sup_abs(sys, 100.0) == 1.0);
  CHECK(PrimePowerFunction::constant_fn({3.0, 0.0}).sup_abs(sys, 100.0) == 3.0);
  auto cm = PrimePowerFunction::completely_multiplicative_fn(
      {Complex(2.0, 0.0)});
  auto narrow = explicit_system({2.0});
  CHECK(cm.sup_abs(narrow, 10.0) == 8.0);  // |2^3| at 8 <= 10
}

TEST_CASE("is_real detects twists and complex entries") {
  auto sys = classical_system(100.0);
  CHECK(PrimePowerFunction::moebius_fn().is_real(sys, 100.0));
  CHECK(PrimePowerFunction::unity().is_real(sys, 100.0));
  CHECK(!PrimePowerFunction::twist(1.0).is_real(sys, 100.0));
  CHECK(!PrimePowerFunction::constant_fn({0.0, 1.0}).is_real(sys, 100.0));
}
