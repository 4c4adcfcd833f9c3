#include "gfss/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace gfss {

Rational rising_factorial(const Rational& x, int m) {
  if (m < 0) throw std::domain_error("rising_factorial: negative exponent");
  Rational p = 1;
  for (int i = 0; i < m; ++i) p *= x + i;
  return p;
}

double rising_factorial(double x, int m) {
  if (m < 0) throw std::domain_error("rising_factorial: negative exponent");
  double p = 1.0;
  for (int i = 0; i < m; ++i) p *= x + i;
  return p;
}

Rational falling_factorial(const Rational& x, int m) {
  if (m < 0) throw std::domain_error("falling_factorial: negative exponent");
  Rational p = 1;
  for (int i = 0; i < m; ++i) p *= x - i;
  return p;
}

double falling_factorial(double x, int m) {
  if (m < 0) throw std::domain_error("falling_factorial: negative exponent");
  double p = 1.0;
  for (int i = 0; i < m; ++i) p *= x - i;
  return p;
}

double log_rising_factorial(double x, double t) {
  if (!(x > 0.0) || !(x + t > 0.0))
    throw std::domain_error("rising_factorial_real: requires x > 0 and x + t > 0");
  return std::lgamma(x + t) - std::lgamma(x);
}

LogValue rising_factorial_real(double x, double t) {
  return LogValue::from_log(log_rising_factorial(x, t));
}

Int factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Int p = 1;
  for (int i = 2; i <= n; ++i) p *= i;
  return p;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double log_binomial(long n, long k) {
  if (k < 0 || k > n) throw std::domain_error("log_binomial: out of range");
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

Int lah_number(int n, int k) {
  if (k < 1 || k > n) throw std::domain_error("lah_number: requires 1 <= k <= n");
  return binomial(n - 1, k - 1) * (factorial(n) / factorial(k));
}

double log_lah_number(int n, int k) {
  if (k < 1 || k > n) throw std::domain_error("lah_number: requires 1 <= k <= n");
  return log_binomial(n - 1, k - 1) + log_factorial(n) - log_factorial(k);
}

Int noncentral_lah(int n, int k, long r) {
  if (k < 1 || k > n) throw std::domain_error("noncentral_lah: requires 1 <= k <= n");
  if (static_cast<long>(k) - 1 < r) return 0;  // C(n-r-1, n-k) infeasible
  return (factorial(n) / factorial(k)) * binomial(static_cast<long>(n) - r - 1, n - k);
}

}  // namespace gfss
