#pragma once

#include "gfss/scalar.hpp"

namespace gfss {

/// Rising factorial (x)_m = x(x+1)...(x+m-1); 1 for m = 0.
Rational rising_factorial(const Rational& x, int m);
double rising_factorial(double x, int m);

/// Falling factorial x(x-1)...(x-m+1); 1 for m = 0. Vanishes whenever x is
/// an integer in {0, ..., m-1}.
Rational falling_factorial(const Rational& x, int m);
double falling_factorial(double x, int m);

/// (x)_t = Gamma(x+t)/Gamma(x) for real t. Requires x > 0 and x + t > 0.
LogValue rising_factorial_real(double x, double t);
/// log of the above.
double log_rising_factorial(double x, double t);

Int factorial(int n);
Int binomial(long n, long k);  // 0 outside 0 <= k <= n
double log_factorial(int n);
double log_binomial(long n, long k);

/// Lah number: partitions of an n-set into k ordered lists,
/// C(n-1, k-1) * n!/k!. Requires 1 <= k <= n.
Int lah_number(int n, int k);
double log_lah_number(int n, int k);

/// Non-central Lah number (n!/k!) * C(n-r-1, n-k); reduces to lah_number at
/// r = 0 and vanishes when k - 1 < r (infeasible choose). Requires 1 <= k <= n.
Int noncentral_lah(int n, int k, long r);

}  // namespace gfss
