#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracles {

Sieve::Sieve(std::uint32_t limit) : limit_(limit), spf_(limit + 1, 0) {
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      for (std::uint64_t j = i; j <= limit; j += i) {
        if (spf_[j] == 0) spf_[j] = i;
      }
    }
  }
}

int Sieve::mobius(std::uint32_t n) const {
  int sign = 1;
  while (n > 1) {
    std::uint32_t p = spf_[n];
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

int Sieve::liouville(std::uint32_t n) const {
  int sign = 1;
  while (n > 1) {
    n /= spf_[n];
    sign = -sign;
  }
  return sign;
}

std::vector<std::uint32_t> Sieve::primes() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= limit_; ++i) {
    if (is_prime(i)) out.push_back(i);
  }
  return out;
}

long long Sieve::mertens(std::uint32_t x) const {
  long long total = 0;
  for (std::uint32_t n = 1; n <= x; ++n) total += mobius(n);
  return total;
}

long long Sieve::liouville_sum(std::uint32_t x) const {
  long long total = 0;
  for (std::uint32_t n = 1; n <= x; ++n) total += liouville(n);
  return total;
}

std::uint64_t Sieve::squarefree_count(std::uint32_t x) const {
  std::uint64_t total = 0;
  for (std::uint32_t n = 1; n <= x; ++n) total += squarefree(n) ? 1 : 0;
  return total;
}

std::uint64_t Sieve::prime_count(std::uint32_t x) const {
  std::uint64_t total = 0;
  for (std::uint32_t n = 2; n <= x; ++n) total += is_prime(n) ? 1 : 0;
  return total;
}

double Sieve::psi(std::uint32_t x) const {
  double total = 0.0;
  for (std::uint32_t p = 2; p <= x; ++p) {
    if (!is_prime(p)) continue;
    double lp = std::log(static_cast<double>(p));
    for (std::uint64_t pw = p; pw <= x; pw *= p) total += lp;
  }
  return total;
}

std::vector<double> brute_force_semigroup(const std::vector<double>& primes,
                                          double x_max) {
  std::vector<double> out;
  // Recurse over the smallest prime index allowed next; taking prime j again
  // is handled by allowing j itself in the recursive call. The relative slack
  // mirrors the library's membership rule so borderline products land on the
  // same side.
  struct Rec {
    const std::vector<double>& primes;
    double x_max;
    std::vector<double>& out;
    void operator()(std::size_t i, double value) const {
      out.push_back(value);
      for (std::size_t j = i; j < primes.size(); ++j) {
        double next = value * primes[j];
        if (next > x_max * (1.0 + 1e-12)) continue;
        (*this)(j, next);
      }
    }
  };
  Rec{primes, x_max, out}(0, 1.0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Complex> partition_f_from_g(const std::vector<Complex>& g) {
  std::size_t n = g.size();
  std::vector<Complex> f(n);
  std::vector<double> factorial(n + 1, 1.0);
  for (std::size_t i = 1; i <= n; ++i) {
    factorial[i] = factorial[i - 1] * static_cast<double>(i);
  }
  for (std::size_t nu = 1; nu <= n; ++nu) {
    // Enumerate set partitions of {0..nu-1} as restricted growth strings:
    // a[i] <= 1 + max(a[0..i-1]).
    std::vector<std::size_t> a(nu, 0);
    Complex total(0.0, 0.0);
    while (true) {
      std::size_t blocks = 0;
      for (std::size_t i = 0; i < nu; ++i) blocks = std::max(blocks, a[i] + 1);
      std::vector<std::size_t> size(blocks, 0);
      for (std::size_t i = 0; i < nu; ++i) ++size[a[i]];
      Complex term(1.0, 0.0);
      for (std::size_t b = 0; b < blocks; ++b) {
        term *= factorial[size[b] - 1] * g[size[b] - 1];
      }
      total += term;

      // Next restricted growth string.
      std::size_t i = nu;
      while (i-- > 0) {
        std::size_t prefix_max = 0;
        for (std::size_t j = 0; j < i; ++j) {
          prefix_max = std::max(prefix_max, a[j] + 1);
        }
        if (a[i] < prefix_max) {
          ++a[i];
          for (std::size_t j = i + 1; j < nu; ++j) a[j] = 0;
          break;
        }
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
    f[nu - 1] = total / factorial[nu];
  }
  return f;
}

std::vector<Complex> series_g_from_f(const std::vector<Complex>& f) {
  std::size_t n = f.size();
  // u = log(1 + sum f_nu z^nu) term by term:
  // u_n = f_n - (1/n) sum_{k=1}^{n-1} k u_k f_{n-k}, then g_n = n u_n.
  std::vector<Complex> u(n);
  for (std::size_t m = 1; m <= n; ++m) {
    Complex acc = f[m - 1];
    for (std::size_t k = 1; k < m; ++k) {
      acc -= (static_cast<double>(k) / m) * u[k - 1] * f[m - k - 1];
    }
    u[m - 1] = acc;
  }
  std::vector<Complex> g(n);
  for (std::size_t m = 1; m <= n; ++m) g[m - 1] = static_cast<double>(m) * u[m - 1];
  return g;
}

Complex riemann_zeta(Complex s) {
  // Euler-Maclaurin: sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
  //   + sum_k B_{2k}/(2k)! * (s)(s+1)...(s+2k-2) * N^{-s-2k+1}.
  const int N = 20000;
  Complex sum(0.0, 0.0);
  for (int n = 1; n < N; ++n) {
    sum += std::exp(-s * std::log(static_cast<double>(n)));
  }
  double dN = static_cast<double>(N);
  Complex Ns = std::exp(-s * std::log(dN));
  sum += Ns * dN / (s - 1.0);
  sum += Ns * 0.5;
  static const double bernoulli[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30};
  Complex rising = s;  // s(s+1)...(s+2k-2) built incrementally
  double npow = 1.0 / dN;
  double fact = 2.0;  // (2k)!
  for (int k = 1; k <= 4; ++k) {
    sum += bernoulli[k - 1] / fact * rising * Ns * npow;
    rising *= (s + Complex(2.0 * k - 1.0, 0.0)) * (s + Complex(2.0 * k, 0.0));
    npow /= dN * dN;
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return sum;
}

double li_fixed_step(double x) {
  if (x <= 2.0) return 0.0;
  const int steps_per_unit = 64;
  long long n = std::llround(std::ceil((x - 2.0) * steps_per_unit));
  if (n % 2 == 1) ++n;
  n = std::max<long long>(n, 2);
  double h = (x - 2.0) / static_cast<double>(n);
  double total = 1.0 / std::log(2.0) + 1.0 / std::log(x);
  for (long long i = 1; i < n; ++i) {
    double t = 2.0 + h * static_cast<double>(i);
    total += (i % 2 == 1 ? 4.0 : 2.0) / std::log(t);
  }
  return total * h / 3.0;
}

}  // namespace oracles
