#include "gfss/structural.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gfss/block_laws.hpp"
#include "gfss/combinatorics.hpp"
#include "gfss/hypergeom.hpp"

namespace gfss {

namespace {

constexpr double kSeriesSwitch = 0.05;  // below this y the direct series crawls

bool near_integer(double v) { return std::fabs(v - std::round(v)) < 1e-9; }

}  // namespace

double structural_atom(const GnedinFisherPsi& model) {
  const double g = model.gamma_fp();
  const double p = model.psi_fp();
  return std::exp(log_rising_factorial(g, 1.0 - p) + std::lgamma(1.0 + p));
}

namespace {

// y * 2F1(a, b; 2; 1-y) assembled from the unit-argument connection formula
// with the factor y folded into the exponents: the density behaves like
// y^{gamma-1} as y -> 0, which stays finite in doubles for every gamma > 0
// even where the bare 2F1 factor would overflow.
double y_times_2f1_near_one(double a, double b, double y) {
  const double c = 2.0;
  const double s = c - a - b;  // = gamma - 2
  const double lg1 = std::lgamma(c) + std::lgamma(s) - std::lgamma(c - a) - std::lgamma(c - b);
  const double lg2 = std::lgamma(c) + std::lgamma(-s) - std::lgamma(a) - std::lgamma(b);
  auto gamma_sign = [](double v) {
    if (v > 0.0) return 1.0;
    return (static_cast<long>(std::floor(-v)) % 2 == 0) ? -1.0 : 1.0;
  };
  const double sign1 = gamma_sign(c) * gamma_sign(s) * gamma_sign(c - a) * gamma_sign(c - b);
  const double sign2 = gamma_sign(c) * gamma_sign(-s) * gamma_sign(a) * gamma_sign(b);
  const double f1 = gauss_2f1(a, b, a + b - c + 1.0, y, 1e-14);
  const double f2 = gauss_2f1(c - a, c - b, s + 1.0, y, 1e-14);
  const double log_y = std::log(y);
  return sign1 * std::exp(lg1 + log_y) * f1 + sign2 * std::exp(lg2 + (s + 1.0) * log_y) * f2;
}

}  // namespace

double structural_density(const GnedinFisherPsi& model, double y) {
  if (!(y > 0.0) || !(y < 1.0))
    throw std::domain_error("structural_density: y must lie in (0,1)");
  const double g = model.gamma_fp();
  const double p = model.psi_fp();
  const double prefactor = structural_atom(model) * (1.0 - p) * (1.0 - g + p);
  double yf;
  if (y >= kSeriesSwitch || near_integer(g)) {
    yf = y * gauss_2f1(2.0 - p, 2.0 - g + p, 2.0, 1.0 - y, 1e-13, 10000000);
  } else {
    yf = y_times_2f1_near_one(2.0 - p, 2.0 - g + p, y);
  }
  return prefactor * yf;
}

double structural_total_mass(const GnedinFisherPsi& model, double quad_tol) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double continuous =
      integrator.integrate([&](double y) { return structural_density(model, y); }, 0.0, 1.0,
                           quad_tol);
  return structural_atom(model) + continuous;
}

StructuralMixtureReport structural_mixture_pdf_check(const GnedinFisherPsi& model, double y,
                                                     long xi_max) {
  if (!(y > 0.0) || !(y < 1.0))
    throw std::domain_error("structural_mixture_pdf_check: y must lie in (0,1)");
  if (xi_max < 2) throw std::domain_error("structural_mixture_pdf_check: xi_max must be >= 2");
  StructuralMixtureReport report;
  report.direct = structural_density(model, y);

  // Beta(2, xi-1) density: xi (xi-1) y (1-y)^{xi-2}
  const double g = model.gamma_fp();
  const double p = model.psi_fp();
  double prior = xi_prior_pmf(model, 2);
  double sum = 0.0;
  double term = 0.0;
  double x_last = 2.0;
  for (long xi = 2; xi <= xi_max; ++xi) {
    const double x = static_cast<double>(xi);
    x_last = x;
    term = prior * x * (x - 1.0) * y * std::pow(1.0 - y, x - 2.0);
    sum += term;
    prior *= (x - p) * (x - g + p) / (x * (x + 1.0));
    if (term > 0.0 && term < 1e-280) break;  // tail numerically extinct
  }
  report.mixture_sum = sum;
  // geometric tail majorant: term ratio approaches (1-y) from above like
  // (1-y)(1 + (2-g)/xi); 3/xi is a safe cover for g > -1
  const double ratio = (1.0 - y) * (1.0 + 3.0 / x_last);
  report.tail_bound = ratio < 1.0 ? term * ratio / (1.0 - ratio) + 1e-12
                                  : std::numeric_limits<double>::infinity();
  report.ok = std::fabs(report.direct - report.mixture_sum) <= report.tail_bound + 1e-9;
  return report;
}

double structural_sample(const XiSampler& xi_sampler, RandomStream& stream) {
  const long xi = xi_sampler.sample(stream);
  if (xi == 1) return 1.0;
  return stream.beta(2.0, static_cast<double>(xi - 1));
}

}  // namespace gfss
