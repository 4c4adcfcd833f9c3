#include "gfss/block_laws.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gfss/combinatorics.hpp"
#include "gfss/eppf.hpp"

namespace gfss {

GeneralizedWaring xi_prior_waring(const GnedinFisherPsi& model) {
  GeneralizedWaring d;
  d.a = 1.0 - model.gamma_fp() + model.psi_fp();
  d.eta = 1.0 - model.psi_fp();
  d.rho = model.gamma_fp();
  d.shift = 1;
  return d;
}

double xi_prior_log_pmf(const GnedinFisherPsi& model, long xi) {
  if (xi < 1) return -std::numeric_limits<double>::infinity();
  const double g = model.gamma_fp();
  const double p = model.psi_fp();
  const double x = static_cast<double>(xi);
  // (1-psi)_{xi-1} (1-g+psi)_{xi-1} (g)_{1-psi} / (Gamma(xi) (1+psi)_{xi-psi})
  return log_rising_factorial(1.0 - p, static_cast<double>(xi - 1)) +
         log_rising_factorial(1.0 - g + p, static_cast<double>(xi - 1)) +
         log_rising_factorial(g, 1.0 - p) - std::lgamma(x) -
         log_rising_factorial(1.0 + p, x - p);
}

double xi_prior_pmf(const GnedinFisherPsi& model, long xi) {
  if (xi < 1) return 0.0;
  return std::exp(xi_prior_log_pmf(model, xi));
}

double xi_prior_tail_constant(const GnedinFisherPsi& model) {
  const double g = model.gamma_fp();
  const double p = model.psi_fp();
  return std::exp(std::lgamma(1.0 + g - p) + std::lgamma(1.0 + p) - std::lgamma(1.0 - p) -
                  std::lgamma(1.0 - g + p) - std::lgamma(g));
}

GeneralizedWaring xi_posterior_waring(const GnedinFisherPsi& model, int n, int k) {
  if (k < 1 || k > n) throw std::domain_error("xi_posterior: requires 1 <= k <= n");
  if (!(static_cast<double>(k) > model.gamma_fp()))
    throw std::domain_error("xi_posterior: requires k > gamma");
  GeneralizedWaring d;
  d.a = static_cast<double>(k) - model.gamma_fp() + model.psi_fp();
  d.eta = static_cast<double>(k) - model.psi_fp();
  d.rho = static_cast<double>(n) + model.gamma_fp() - static_cast<double>(k);
  d.shift = k;
  return d;
}

double xi_posterior_pmf(const GnedinFisherPsi& model, int n, int k, long xi) {
  const GeneralizedWaring d = xi_posterior_waring(model, n, k);
  return waring_pmf(d, xi);
}

std::vector<Rational> blocks_pmf_two_param(const GnedinFisherPsi& model, int n) {
  if (n < 1) throw std::domain_error("blocks_pmf_two_param: n must be positive");
  std::vector<Rational> pmf;
  pmf.reserve(static_cast<std::size_t>(n));
  const Int n_factorial = factorial(n);
  for (int k = 1; k <= n; ++k) {
    const Int multiplicity = binomial(n - 1, k - 1) * (n_factorial / factorial(k));
    pmf.push_back(model.weight(n, k) * multiplicity);
  }
  return pmf;
}

std::vector<double> blocks_log_pmf(const GnedinFisherPsi& model, int n) {
  if (n < 1) throw std::domain_error("blocks_log_pmf: n must be positive");
  std::vector<double> log_pmf;
  log_pmf.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    log_pmf.push_back(log_lah_number(n, k) + model.log_weight_fp(n, k));
  return log_pmf;
}

Rational new_blocks_posterior(const GnedinFisherPsi& model, int n, int k, int m, int k_star) {
  if (k < 1 || k > n) throw std::domain_error("new_blocks_posterior: requires 1 <= k <= n");
  if (m < 0 || k_star < 0 || k_star > m)
    throw std::domain_error("new_blocks_posterior: requires 0 <= k* <= m");
  const Rational& g = model.gamma();
  const Rational& p = model.psi();
  Rational value = Rational(binomial(m, k_star));
  value *= rising_factorial(g + n - k, m - k_star);
  value *= rising_factorial(Rational(n + k + k_star), m - k_star);
  value *= rising_factorial(Rational(k) - p, k_star);
  value *= rising_factorial(Rational(k) - g + p, k_star);
  value /= rising_factorial(Rational(n) + p, m) * rising_factorial(Rational(n) + g - p, m);
  return value;
}

MixtureReport verify_mixture(const GnedinFisherPsi& model, int n, int k, long xi_max) {
  if (k < 1 || k > n) throw std::domain_error("verify_mixture: requires 1 <= k <= n");
  if (xi_max < k) throw std::domain_error("verify_mixture: xi_max must be >= k");
  MixtureReport report;
  report.target = to_double(model.weight(n, k));

  // walk prior(xi) and V_xi(n,k) by their term ratios
  double prior = xi_prior_pmf(model, k);
  double extreme = to_double(FisherExtreme(k).weight(n, k));
  const double g = model.gamma_fp();
  const double p = model.psi_fp();
  double sum = 0.0;
  for (long xi = k; xi <= xi_max; ++xi) {
    sum += prior * extreme;
    const double x = static_cast<double>(xi);
    prior *= (x - p) * (x - g + p) / (x * (x + 1.0));
    // V_{xi+1}(n,k) / V_xi(n,k) = [xi/(xi-k+1)] * [(xi+1)/(xi+n)]
    extreme *= (x / (x - k + 1.0)) * ((x + 1.0) / (x + n));
  }
  report.partial_sum = sum;
  // integral tail bound for the prior, V <= 1; 10% asymptotic-constant margin
  const double c = xi_prior_tail_constant(model);
  report.tail_bound = 1.1 * (c / g) * std::pow(static_cast<double>(xi_max), -g) + 1e-10;
  report.ok = std::fabs(report.partial_sum - report.target) <= report.tail_bound;
  return report;
}

BayesReport verify_bayes_identity(const GnedinFisherPsi& model, int n, int k, long xi,
                                  double rel_tol) {
  if (k < 1 || k > n) throw std::domain_error("verify_bayes_identity: requires 1 <= k <= n");
  BayesReport report;
  if (xi < k) {
    report.lhs = xi < 1 ? 0.0 : xi_prior_pmf(model, xi) * to_double(FisherExtreme(std::max(xi, 1L)).weight(n, k));
    report.rhs = 0.0;  // posterior support starts at k
    report.ok = report.lhs == 0.0 && report.rhs == 0.0;
    return report;
  }
  report.lhs = xi_prior_pmf(model, xi) * to_double(FisherExtreme(xi).weight(n, k));
  report.rhs = xi_posterior_pmf(model, n, k, xi) * to_double(model.weight(n, k));
  const double scale = std::max(std::fabs(report.lhs), std::fabs(report.rhs));
  report.rel_diff = scale == 0.0 ? 0.0 : std::fabs(report.lhs - report.rhs) / scale;
  report.ok = report.rel_diff <= rel_tol;
  return report;
}

}  // namespace gfss
