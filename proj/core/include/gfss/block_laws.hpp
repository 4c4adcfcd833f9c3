#pragma once

#include <vector>

#include "gfss/models.hpp"
#include "gfss/waring.hpp"

namespace gfss {

// Laws of the latent species number Xi and of the number of occupied blocks
// for the (gamma, psi) family. Integer-exponent laws are exact rationals;
// Xi laws involve gamma-function ratios and live in log-space floats.

/// Prior of Xi: shifted generalized Waring with a = 1-gamma+psi, eta = 1-psi,
/// rho = gamma, support {1, 2, ...}.
GeneralizedWaring xi_prior_waring(const GnedinFisherPsi& model);

double xi_prior_log_pmf(const GnedinFisherPsi& model, long xi);
double xi_prior_pmf(const GnedinFisherPsi& model, long xi);

/// Tail constant c with P(Xi = xi) ~ c / xi^{1+gamma}.
double xi_prior_tail_constant(const GnedinFisherPsi& model);

/// Posterior of Xi given K_n = k: generalized Waring with a = k-gamma+psi,
/// eta = k-psi, rho = n+gamma-k on the index xi - k; zero mass below xi = k.
/// Requires k > gamma.
GeneralizedWaring xi_posterior_waring(const GnedinFisherPsi& model, int n, int k);
double xi_posterior_pmf(const GnedinFisherPsi& model, int n, int k, long xi);

/// P(K_n = k) = C(n-1,k-1) n!/k! V(n,k), exact, indexed k = 1..n.
std::vector<Rational> blocks_pmf_two_param(const GnedinFisherPsi& model, int n);
/// Same law in log space (for n too large for exact arithmetic to be useful).
std::vector<double> blocks_log_pmf(const GnedinFisherPsi& model, int n);

/// Posterior of the number of new blocks in a further sample of size m:
/// P(K*_m = k*) = C(m,k*) (g+n-k)_{m-k*} (n+k+k*)_{m-k*}
///                (k-psi)_{k*} (k-g+psi)_{k*} / ((n+psi)_m (n+g-psi)_m).
Rational new_blocks_posterior(const GnedinFisherPsi& model, int n, int k, int m, int k_star);

struct MixtureReport {
  double partial_sum = 0.0;  // sum_{xi=k}^{xi_max} prior(xi) V_xi(n,k)
  double target = 0.0;       // V(n,k) of the (gamma,psi) model
  double tail_bound = 0.0;
  bool ok = false;
};

/// Checks that the (gamma, psi) weights arise by mixing the fixed-species
/// extreme weights over the Xi prior.
MixtureReport verify_mixture(const GnedinFisherPsi& model, int n, int k, long xi_max);

struct BayesReport {
  double lhs = 0.0;  // prior(xi) * V_xi(n,k)
  double rhs = 0.0;  // posterior(xi | K_n=k) * V(n,k)
  double rel_diff = 0.0;
  bool ok = false;
};

/// prior(xi) V_xi(n,k) = posterior(xi|k) V(n,k); both sides vanish for xi < k.
BayesReport verify_bayes_identity(const GnedinFisherPsi& model, int n, int k, long xi,
                                  double rel_tol = 1e-9);

}  // namespace gfss
