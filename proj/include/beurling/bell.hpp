#pragma once

#include <vector>

#include "beurling/numeric.hpp"

namespace beurling {

// Conversions between the prime-power values of a multiplicative function f
// and the exponent function g of its associated measure, via exponential
// Bell polynomials. Index convention: input[i] holds the value at p^{i+1}.
//
// Forward:  f(p^nu) = B_nu(0! g(p), 1! g(p^2), ..., (nu-1)! g(p^nu)) / nu!
// Backward: g(p^nu) = sum_{j=1..nu} (-1)^{j-1} (j-1)!/(nu-1)!
//                       * B_{nu,j}(1! f(p), ..., (nu-j+1)! f(p^{nu-j+1}))
// The two maps are mutually inverse by construction.
std::vector<Complex> bell_f_from_g(const std::vector<Complex>& g);
std::vector<Complex> bell_g_from_f(const std::vector<Complex>& f);

// Complete Bell polynomials B_0..B_n at the argument vector x (x[i] = x_{i+1}),
// via the recurrence B_{n+1} = sum_j C(n,j) B_{n-j} x_{j+1}.
std::vector<Complex> complete_bell(const std::vector<Complex>& x);

// Partial Bell polynomials B_{n,k} for 0 <= k <= n <= x.size(), via
// B_{n,k} = sum_i C(n-1,i-1) x_i B_{n-i,k-1}. Returned as rows indexed by n.
std::vector<std::vector<Complex>> partial_bell(const std::vector<Complex>& x);

}  // namespace beurling
