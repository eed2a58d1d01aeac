#include "beurling/bell.hpp"

namespace beurling {

std::vector<Complex> complete_bell(const std::vector<Complex>& x) {
  std::size_t n_max = x.size();
  auto C = binomial_table(n_max);
  std::vector<Complex> B(n_max + 1);
  B[0] = 1.0;
  for (std::size_t n = 0; n < n_max; ++n) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j <= n; ++j) acc += C[n][j] * B[n - j] * x[j];
    B[n + 1] = acc;
  }
  return B;
}

std::vector<std::vector<Complex>> partial_bell(const std::vector<Complex>& x) {
  std::size_t n_max = x.size();
  auto C = binomial_table(n_max);
  std::vector<std::vector<Complex>> B(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) B[n].assign(n + 1, Complex(0.0));
  B[0][0] = 1.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      Complex acc = 0.0;
      for (std::size_t i = 1; i + k - 1 <= n; ++i) {
        acc += C[n - 1][i - 1] * x[i - 1] * B[n - i][k - 1];
      }
      B[n][k] = acc;
    }
  }
  return B;
}

std::vector<Complex> bell_f_from_g(const std::vector<Complex>& g) {
  std::size_t nu_max = g.size();
  std::vector<Complex> x(nu_max);
  double fact = 1.0;  // (i-1)! running
  for (std::size_t i = 1; i <= nu_max; ++i) {
    x[i - 1] = fact * g[i - 1];
    fact *= static_cast<double>(i);
  }
  std::vector<Complex> B = complete_bell(x);
  std::vector<Complex> f(nu_max);
  fact = 1.0;  // nu! running
  for (std::size_t nu = 1; nu <= nu_max; ++nu) {
    fact *= static_cast<double>(nu);
    f[nu - 1] = B[nu] / fact;
  }
  return f;
}

std::vector<Complex> bell_g_from_f(const std::vector<Complex>& f) {
  std::size_t nu_max = f.size();
  std::vector<Complex> y(nu_max);
  double fact = 1.0;  // i! running
  for (std::size_t i = 1; i <= nu_max; ++i) {
    fact *= static_cast<double>(i);
    y[i - 1] = fact * f[i - 1];
  }
  std::vector<std::vector<Complex>> B = partial_bell(y);
  std::vector<Complex> g(nu_max);
  for (std::size_t nu = 1; nu <= nu_max; ++nu) {
    // Prefactor (-1)^{j-1} (j-1)!/(nu-1)!.
    double inv_num = 1.0;  // (nu-1)! accumulated below
    for (std::size_t i = 2; i < nu; ++i) inv_num *= static_cast<double>(i);
    Complex acc = 0.0;
    double jfact = 1.0;  // (j-1)!
    double sign = 1.0;
    for (std::size_t j = 1; j <= nu; ++j) {
      acc += sign * (jfact / inv_num) * B[nu][j];
      sign = -sign;
      jfact *= static_cast<double>(j);
    }
    g[nu - 1] = acc;
  }
  return g;
}

}  // namespace beurling
