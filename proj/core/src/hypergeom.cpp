#include "gfss/hypergeom.hpp"

#include <cmath>
#include <stdexcept>

namespace gfss {

namespace {

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && std::fabs(v - std::round(v)) < 1e-14;
}

// Sign of Gamma(v); alternates per unit interval on the negative axis.
double gamma_sign(double v) {
  if (v > 0.0) return 1.0;
  return (static_cast<long>(std::floor(-v)) % 2 == 0) ? -1.0 : 1.0;
}

// term_{i+1} = term_i * (a+i)(b+i) / ((c+i)(i+1)) * x, stopped once the
// geometric tail estimate |term| * r/(1-r) falls under tol.
double series_2f1(double a, double b, double c, double x, double tol, long max_terms) {
  double sum = 1.0;
  double term = 1.0;
  for (long i = 0; i < max_terms; ++i) {
    const double di = static_cast<double>(i);
    term *= (a + di) * (b + di) / ((c + di) * (di + 1.0)) * x;
    sum += term;
    if (i >= 2) {
      const double ratio =
          std::fabs((a + di + 1.0) * (b + di + 1.0) / ((c + di + 1.0) * (di + 2.0)) * x);
      if (ratio < 1.0 && std::fabs(term) * ratio / (1.0 - ratio) < tol) return sum;
    }
  }
  throw std::runtime_error("gauss_2f1: series did not converge within term cap");
}

}  // namespace

double gauss_2f1(double a, double b, double c, double x, double tol, long max_terms) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("gauss_2f1: c must not be a nonpositive integer");
  if (!(x >= 0.0) || x >= 1.0) throw std::domain_error("gauss_2f1: argument must lie in [0,1)");
  if (x == 0.0) return 1.0;
  return series_2f1(a, b, c, x, tol, max_terms);
}

double gauss_2f1_near_one(double a, double b, double c, double eps, double tol) {
  if (!(eps > 0.0) || eps >= 1.0)
    throw std::domain_error("gauss_2f1_near_one: eps must lie in (0,1)");
  const double s = c - a - b;
  if (std::fabs(s - std::round(s)) < 1e-10)
    throw std::domain_error("gauss_2f1_near_one: c-a-b too close to an integer");
  // 2F1(a,b;c;1-eps) = G1 * 2F1(a,b;a+b-c+1;eps) + G2 * eps^s * 2F1(c-a,c-b;s+1;eps)
  // with G1 = Г(c)Г(s)/(Г(c-a)Г(c-b)), G2 = Г(c)Г(-s)/(Г(a)Г(b)).
  const double lg1 = std::lgamma(c) + std::lgamma(s) - std::lgamma(c - a) - std::lgamma(c - b);
  const double lg2 = std::lgamma(c) + std::lgamma(-s) - std::lgamma(a) - std::lgamma(b);
  const double sign1 = gamma_sign(c) * gamma_sign(s) * gamma_sign(c - a) * gamma_sign(c - b);
  const double sign2 = gamma_sign(c) * gamma_sign(-s) * gamma_sign(a) * gamma_sign(b);
  const double f1 = series_2f1(a, b, a + b - c + 1.0, eps, tol, 1000000);
  const double f2 = series_2f1(c - a, c - b, s + 1.0, eps, tol, 1000000);
  return sign1 * std::exp(lg1) * f1 + sign2 * std::exp(lg2 + s * std::log(eps)) * f2;
}

}  // namespace gfss
