#include "gfss/waring.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gfss/combinatorics.hpp"

namespace gfss {

namespace {

void check_parameters(const GeneralizedWaring& d) {
  if (!(d.a > 0.0) || !(d.eta > 0.0) || !(d.rho > 0.0))
    throw std::domain_error("generalized Waring: a, eta, rho must be positive");
}

}  // namespace

double waring_log_pmf(const GeneralizedWaring& d, long i) {
  check_parameters(d);
  if (i < 0) return -std::numeric_limits<double>::infinity();
  const double di = static_cast<double>(i);
  return log_rising_factorial(d.rho, d.eta) - std::lgamma(di + 1.0) +
         log_rising_factorial(d.a, di) + log_rising_factorial(d.eta, di) -
         log_rising_factorial(d.a + d.rho, d.eta + di);
}

double waring_pmf(const GeneralizedWaring& d, long x) {
  const long i = x - d.shift;
  if (i < 0) return 0.0;
  return std::exp(waring_log_pmf(d, i));
}

std::optional<double> waring_moment(const GeneralizedWaring& d, int order, double tol) {
  check_parameters(d);
  if (order < 1) throw std::domain_error("waring_moment: order must be >= 1");
  if (d.rho <= static_cast<double>(order)) return std::nullopt;
  // sum i^order * pmf(i) with the pmf advanced by its term ratio; append an
  // integral tail estimate C * I^{order - rho} / (rho - order) once small
  const double r = static_cast<double>(order);
  double pmf = std::exp(waring_log_pmf(d, 0));
  double sum = 0.0;
  double tail = std::numeric_limits<double>::infinity();
  const long cap = 1L << 27;
  for (long i = 0; i < cap; ++i) {
    const double di = static_cast<double>(i);
    sum += std::pow(di, r) * pmf;
    pmf *= (d.a + di) * (d.eta + di) / ((d.a + d.rho + d.eta + di) * (di + 1.0));
    if (i >= 64 && (i & (i - 1)) == 0) {  // reassess at powers of two
      tail = pmf * std::pow(di + 1.0, r) * (di + 1.0) / (d.rho - r);
      // the tail correction is *added*, so stop once its own relative error
      // (one order down in 1/i) is within tolerance
      if (tail * (2.0 + d.rho + r) / di < tol * std::max(sum + tail, 1.0)) {
        return sum + tail;
      }
    }
  }
  return sum + tail;
}

long waring_sample(const GeneralizedWaring& d, RandomStream& stream) {
  check_parameters(d);
  const double p = std::max(stream.beta(d.rho, d.a), 1e-300);
  const double lambda = stream.gamma(d.eta) * (1.0 - p) / p;
  return stream.poisson(lambda);
}

}  // namespace gfss
