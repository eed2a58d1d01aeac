#pragma once

#include <vector>

#include "beurling/system.hpp"

// Shared fixtures: the large tables are built once per process and reused
// across test cases (IntegerTable is immutable after construction).
namespace testutil {

beurling::GeneralizedPrimeSystem classical_system(double limit);
beurling::GeneralizedPrimeSystem explicit_system(std::vector<double> primes);
beurling::GeneralizedPrimeSystem li_spaced_system(double limit);

const beurling::IntegerTable& classical_1e4();
const beurling::IntegerTable& classical_1e6();
const beurling::IntegerTable& li_spaced_1e5();

// x_max^{j/points} for j = 1..points.
std::vector<double> log_grid(double x_max, int points);

}  // namespace testutil
